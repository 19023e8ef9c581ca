#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/representation.hpp"

namespace qrep {

// One parsed input file: named quivers, representations and morphisms.
// Grammar (whitespace-insensitive, '#' starts a line comment):
//
//   quiver N   { vertices: v+ ;  (arrow a: v -> w ;)* }
//   rep N over Q { (dim v = nat ;)* (map a = [[r,...],...] ;)* }
//   morphism N: Q1 -> Q2 { (vertex v -> w ;)* (arrow a -> b ;)* }
//
// Rationals are written sign? digits ('/' digits)?.  A map line may be
// omitted when either endpoint has dimension zero (the matrix is then empty);
// omitting it otherwise is an error.  Omitted dims default to zero.
struct Document {
    struct NamedRep {
        std::string name;
        std::string quiver_name;
        Representation<Rational> rep;
    };
    struct NamedMorphism {
        std::string name;
        std::string source_name;
        std::string target_name;
        QuiverMorphism morphism;
    };

    std::vector<std::pair<std::string, Quiver>> quivers;
    std::vector<NamedRep> reps;
    std::vector<NamedMorphism> morphisms;

    const Quiver* find_quiver(const std::string& name) const {
        for (const auto& [n, q] : quivers)
            if (n == name) return &q;
        return nullptr;
    }
    const NamedRep* find_rep(const std::string& name) const {
        for (const auto& r : reps)
            if (r.name == name) return &r;
        return nullptr;
    }
    const NamedMorphism* find_morphism(const std::string& name) const {
        for (const auto& m : morphisms)
            if (m.name == name) return &m;
        return nullptr;
    }

    const Quiver& quiver(const std::string& name) const {
        if (const Quiver* q = find_quiver(name)) return *q;
        throw PreconditionError("no quiver named '" + name + "' in the input");
    }
    const NamedRep& rep(const std::string& name) const {
        if (const NamedRep* r = find_rep(name)) return *r;
        throw PreconditionError("no representation named '" + name + "' in the input");
    }
    const NamedMorphism& morphism(const std::string& name) const {
        if (const NamedMorphism* m = find_morphism(name)) return *m;
        throw PreconditionError("no morphism named '" + name + "' in the input");
    }
};

namespace dsl_detail {

struct Token {
    enum Kind {
        Word,
        LBrace,
        RBrace,
        LBracket,
        RBracket,
        Comma,
        Semi,
        Colon,
        Equals,
        Arrow,
        Minus,
        Plus,
        Slash,
        End
    };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

inline bool word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string t) {
        out.push_back(Token{k, std::move(t), line, col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (word_char(c)) {
            std::size_t j = i;
            while (j < text.size() && word_char(text[j])) ++j;
            push(Token::Word, std::string(text.substr(i, j - i)));
            col += j - i;
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(Token::Arrow, "->");
            col += 2;
            i += 2;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '{': k = Token::LBrace; break;
            case '}': k = Token::RBrace; break;
            case '[': k = Token::LBracket; break;
            case ']': k = Token::RBracket; break;
            case ',': k = Token::Comma; break;
            case ';': k = Token::Semi; break;
            case ':': k = Token::Colon; break;
            case '=': k = Token::Equals; break;
            case '-': k = Token::Minus; break;
            case '+': k = Token::Plus; break;
            case '/': k = Token::Slash; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(k, std::string(1, c));
        ++col;
        ++i;
    }
    out.push_back(Token{Token::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Document parse() {
        Document doc;
        while (peek().kind != Token::End) {
            const Token& t = expect_word("'quiver', 'rep', or 'morphism'");
            if (t.text == "quiver")
                parse_quiver(doc);
            else if (t.text == "rep")
                parse_rep(doc);
            else if (t.text == "morphism")
                parse_morphism(doc);
            else
                fail(t, "expected 'quiver', 'rep', or 'morphism'");
        }
        return doc;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg + (t.kind == Token::End
                                                   ? " (at end of input)"
                                                   : ", found '" + t.text + "'"));
    }

    const Token& expect(Token::Kind k, const std::string& what) {
        const Token& t = next();
        if (t.kind != k) fail(t, "expected " + what);
        return t;
    }

    const Token& expect_word(const std::string& what) { return expect(Token::Word, what); }

    const Token& expect_keyword(const std::string& kw) {
        const Token& t = next();
        if (t.kind != Token::Word || t.text != kw) fail(t, "expected '" + kw + "'");
        return t;
    }

    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t parse_nat() {
        const Token& t = expect_word("a number");
        for (char c : t.text)
            if (c < '0' || c > '9') fail(t, "expected a number");
        return static_cast<std::size_t>(std::stoull(t.text));
    }

    Rational parse_rational() {
        accept(Token::Plus);
        bool neg = accept(Token::Minus);
        const Token& numt = expect_word("a rational literal");
        for (char c : numt.text)
            if (c < '0' || c > '9') fail(numt, "expected a rational literal");
        BigInt num(numt.text);
        BigInt den(1);
        if (accept(Token::Slash)) {
            const Token& dent = expect_word("a denominator");
            for (char c : dent.text)
                if (c < '0' || c > '9') fail(dent, "expected a denominator");
            den = BigInt(dent.text);
            if (den == 0) fail(dent, "zero denominator");
        }
        Rational r = Rational(num) / Rational(den);
        return neg ? -r : r;
    }

    Matrix<Rational> parse_matrix() {
        expect(Token::LBracket, "'['");
        std::vector<std::vector<Rational>> rows;
        if (!accept(Token::RBracket)) {
            do {
                const Token& rt = peek();
                expect(Token::LBracket, "'['");
                std::vector<Rational> row;
                if (!accept(Token::RBracket)) {
                    do row.push_back(parse_rational());
                    while (accept(Token::Comma));
                    expect(Token::RBracket, "']'");
                }
                if (!rows.empty() && row.size() != rows.front().size())
                    fail(rt, "ragged matrix rows");
                rows.push_back(std::move(row));
            } while (accept(Token::Comma));
            expect(Token::RBracket, "']'");
        }
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix<Rational> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        return m;
    }

    void check_fresh_name(const Document& doc, const Token& t, const char* kind) {
        bool taken = false;
        if (std::string(kind) == "quiver") taken = doc.find_quiver(t.text) != nullptr;
        if (std::string(kind) == "rep") taken = doc.find_rep(t.text) != nullptr;
        if (std::string(kind) == "morphism") taken = doc.find_morphism(t.text) != nullptr;
        if (taken) fail(t, std::string("duplicate ") + kind + " name '" + t.text + "'");
    }

    void parse_quiver(Document& doc) {
        const Token& name = expect_word("a quiver name");
        check_fresh_name(doc, name, "quiver");
        expect(Token::LBrace, "'{'");
        expect_keyword("vertices");
        expect(Token::Colon, "':'");
        std::vector<std::string> vertices;
        std::set<std::string> vseen;
        while (peek().kind == Token::Word) {
            const Token& v = next();
            if (!vseen.insert(v.text).second) fail(v, "duplicate vertex '" + v.text + "'");
            vertices.push_back(v.text);
        }
        if (vertices.empty()) fail(peek(), "expected at least one vertex name");
        expect(Token::Semi, "';'");
        std::vector<std::tuple<std::string, std::string, std::string>> arrows;
        std::set<std::string> aseen;
        while (!accept(Token::RBrace)) {
            expect_keyword("arrow");
            const Token& a = expect_word("an arrow name");
            if (!aseen.insert(a.text).second) fail(a, "duplicate arrow '" + a.text + "'");
            expect(Token::Colon, "':'");
            const Token& t = expect_word("a tail vertex");
            if (!vseen.count(t.text)) fail(t, "unknown vertex '" + t.text + "'");
            expect(Token::Arrow, "'->'");
            const Token& h = expect_word("a head vertex");
            if (!vseen.count(h.text)) fail(h, "unknown vertex '" + h.text + "'");
            expect(Token::Semi, "';'");
            arrows.emplace_back(a.text, t.text, h.text);
        }
        doc.quivers.emplace_back(name.text, Quiver(vertices, arrows));
    }

    void parse_rep(Document& doc) {
        const Token& name = expect_word("a representation name");
        check_fresh_name(doc, name, "rep");
        expect_keyword("over");
        const Token& qname = expect_word("a quiver name");
        const Quiver* q = doc.find_quiver(qname.text);
        if (!q) fail(qname, "unknown quiver '" + qname.text + "'");
        expect(Token::LBrace, "'{'");
        std::vector<std::size_t> dims(q->vertex_count(), 0);
        std::vector<bool> dim_set(q->vertex_count(), false);
        std::vector<std::optional<Matrix<Rational>>> mats(q->arrow_count());
        std::vector<Token> mat_pos(q->arrow_count(), Token{Token::End, "", 0, 0});
        while (!accept(Token::RBrace)) {
            const Token& kw = expect_word("'dim' or 'map'");
            if (kw.text == "dim") {
                const Token& v = expect_word("a vertex name");
                if (!q->has_vertex(v.text)) fail(v, "unknown vertex '" + v.text + "'");
                std::size_t x = q->vertex_index(v.text);
                if (dim_set[x]) fail(v, "duplicate dim for vertex '" + v.text + "'");
                expect(Token::Equals, "'='");
                dims[x] = parse_nat();
                dim_set[x] = true;
                expect(Token::Semi, "';'");
            } else if (kw.text == "map") {
                const Token& a = expect_word("an arrow name");
                if (!q->has_arrow(a.text)) fail(a, "unknown arrow '" + a.text + "'");
                std::size_t ai = q->arrow_index(a.text);
                if (mats[ai]) fail(a, "duplicate map for arrow '" + a.text + "'");
                expect(Token::Equals, "'='");
                mat_pos[ai] = a;
                mats[ai] = parse_matrix();
                expect(Token::Semi, "';'");
            } else {
                fail(kw, "expected 'dim' or 'map'");
            }
        }
        std::vector<Matrix<Rational>> final_mats;
        for (std::size_t a = 0; a < q->arrow_count(); ++a) {
            const Arrow& ar = q->arrow(a);
            std::size_t r = dims[ar.head], c = dims[ar.tail];
            if (!mats[a]) {
                if (r > 0 && c > 0)
                    fail(name, "missing map for arrow '" + ar.name + "' in rep '" +
                                   name.text + "'");
                final_mats.emplace_back(r, c);
                continue;
            }
            if (mats[a]->rows() != r || mats[a]->cols() != c)
                fail(mat_pos[a],
                     "dimension mismatch for arrow '" + ar.name + "': matrix is " +
                         std::to_string(mats[a]->rows()) + "x" +
                         std::to_string(mats[a]->cols()) + ", dims require " +
                         std::to_string(r) + "x" + std::to_string(c));
            final_mats.push_back(std::move(*mats[a]));
        }
        doc.reps.push_back(Document::NamedRep{
            name.text, qname.text, Representation<Rational>(*q, dims, std::move(final_mats))});
    }

    void parse_morphism(Document& doc) {
        const Token& name = expect_word("a morphism name");
        check_fresh_name(doc, name, "morphism");
        expect(Token::Colon, "':'");
        const Token& sname = expect_word("a source quiver name");
        const Quiver* src = doc.find_quiver(sname.text);
        if (!src) fail(sname, "unknown quiver '" + sname.text + "'");
        expect(Token::Arrow, "'->'");
        const Token& tname = expect_word("a target quiver name");
        const Quiver* tgt = doc.find_quiver(tname.text);
        if (!tgt) fail(tname, "unknown quiver '" + tname.text + "'");
        expect(Token::LBrace, "'{'");
        std::vector<std::optional<std::size_t>> vmap(src->vertex_count());
        std::vector<std::optional<std::size_t>> amap(src->arrow_count());
        std::vector<Token> apos(src->arrow_count(), Token{Token::End, "", 0, 0});
        while (!accept(Token::RBrace)) {
            const Token& kw = expect_word("'vertex' or 'arrow'");
            if (kw.text == "vertex") {
                const Token& a = expect_word("a source vertex");
                if (!src->has_vertex(a.text)) fail(a, "unknown vertex '" + a.text + "'");
                expect(Token::Arrow, "'->'");
                const Token& b = expect_word("a target vertex");
                if (!tgt->has_vertex(b.text)) fail(b, "unknown vertex '" + b.text + "'");
                std::size_t i = src->vertex_index(a.text);
                if (vmap[i]) fail(a, "duplicate image for vertex '" + a.text + "'");
                vmap[i] = tgt->vertex_index(b.text);
                expect(Token::Semi, "';'");
            } else if (kw.text == "arrow") {
                const Token& a = expect_word("a source arrow");
                if (!src->has_arrow(a.text)) fail(a, "unknown arrow '" + a.text + "'");
                expect(Token::Arrow, "'->'");
                const Token& b = expect_word("a target arrow");
                if (!tgt->has_arrow(b.text)) fail(b, "unknown arrow '" + b.text + "'");
                std::size_t i = src->arrow_index(a.text);
                if (amap[i]) fail(a, "duplicate image for arrow '" + a.text + "'");
                amap[i] = tgt->arrow_index(b.text);
                apos[i] = a;
                expect(Token::Semi, "';'");
            } else {
                fail(kw, "expected 'vertex' or 'arrow'");
            }
        }
        QuiverMorphism m{*src, *tgt, {}, {}};
        for (std::size_t i = 0; i < vmap.size(); ++i) {
            if (!vmap[i])
                fail(name, "vertex '" + src->vertex_name(i) + "' has no image");
            m.vertex_map.push_back(*vmap[i]);
        }
        for (std::size_t i = 0; i < amap.size(); ++i) {
            if (!amap[i]) fail(name, "arrow '" + src->arrow(i).name + "' has no image");
            const Arrow& sa = src->arrow(i);
            const Arrow& ta = tgt->arrow(*amap[i]);
            if (ta.tail != m.vertex_map[sa.tail] || ta.head != m.vertex_map[sa.head])
                fail(apos[i], "arrow '" + sa.name + "' maps to '" + ta.name +
                                  "', which violates incidence");
            m.arrow_map.push_back(*amap[i]);
        }
        m.validate();
        doc.morphisms.push_back(
            Document::NamedMorphism{name.text, sname.text, tname.text, std::move(m)});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace dsl_detail

inline Document parse_document(std::string_view text) {
    return dsl_detail::Parser(text).parse();
}

inline std::string format_matrix(const Matrix<Rational>& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

inline std::string print_quiver(const std::string& name, const Quiver& q) {
    std::ostringstream os;
    os << "quiver " << name << " {\n  vertices:";
    for (const std::string& v : q.vertex_names()) os << ' ' << v;
    os << " ;\n";
    for (const Arrow& a : q.arrows())
        os << "  arrow " << a.name << ": " << q.vertex_name(a.tail) << " -> "
           << q.vertex_name(a.head) << " ;\n";
    os << "}\n";
    return os.str();
}

// Nonzero dims in vertex order, then nonempty maps in arrow order.
inline std::string print_rep(const std::string& name, const std::string& quiver_name,
                             const Representation<Rational>& rep) {
    std::ostringstream os;
    os << "rep " << name << " over " << quiver_name << " {\n";
    const Quiver& q = rep.quiver();
    for (std::size_t x = 0; x < q.vertex_count(); ++x)
        if (rep.dim(x) > 0)
            os << "  dim " << q.vertex_name(x) << " = " << rep.dim(x) << " ;\n";
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (rep.mat(a).rows() > 0 && rep.mat(a).cols() > 0)
            os << "  map " << q.arrow(a).name << " = " << format_matrix(rep.mat(a))
               << " ;\n";
    os << "}\n";
    return os.str();
}

inline std::string print_morphism(const Document::NamedMorphism& m) {
    std::ostringstream os;
    os << "morphism " << m.name << ": " << m.source_name << " -> " << m.target_name
       << " {\n";
    const QuiverMorphism& f = m.morphism;
    for (std::size_t i = 0; i < f.source.vertex_count(); ++i)
        os << "  vertex " << f.source.vertex_name(i) << " -> "
           << f.target.vertex_name(f.vertex_map[i]) << " ;\n";
    for (std::size_t i = 0; i < f.source.arrow_count(); ++i)
        os << "  arrow " << f.source.arrow(i).name << " -> "
           << f.target.arrow(f.arrow_map[i]).name << " ;\n";
    os << "}\n";
    return os.str();
}

inline std::string print_document(const Document& doc) {
    std::string out;
    for (const auto& [name, q] : doc.quivers) out += print_quiver(name, q);
    for (const auto& r : doc.reps) out += print_rep(r.name, r.quiver_name, r.rep);
    for (const auto& m : doc.morphisms) out += print_morphism(m);
    return out;
}

}  // namespace qrep
