// Command-line front end: parses one input file and runs a single command
// against it.  All output is deterministic.  Exit codes: 0 success,
// 1 usage or parse error, 2 violated mathematical precondition,
// 3 undecided decomposition.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qrep/qrep.hpp"

namespace {

using qrep::Document;
using qrep::Quiver;
using qrep::Rational;
using qrep::Representation;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qrep::ParseError(0, 0, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dim_string(const std::vector<std::size_t>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(dims[i]);
    }
    return s + ")";
}

// Interpret a declared quiver as a subquiver of `parent` by matching vertex
// and arrow names.
qrep::Subquiver named_subquiver(const Quiver& sub, const Quiver& parent) {
    std::vector<std::size_t> verts, arrows;
    for (const std::string& v : sub.vertex_names()) {
        if (!parent.has_vertex(v))
            throw qrep::PreconditionError("subquiver vertex '" + v +
                                          "' is not a vertex of the parent quiver");
        verts.push_back(parent.vertex_index(v));
    }
    qrep::QuiverMorphism inc{sub, parent, verts, {}};
    for (const qrep::Arrow& a : sub.arrows()) {
        if (!parent.has_arrow(a.name))
            throw qrep::PreconditionError("subquiver arrow '" + a.name +
                                          "' is not an arrow of the parent quiver");
        inc.arrow_map.push_back(parent.arrow_index(a.name));
    }
    inc.validate();
    return qrep::Subquiver{sub, inc};
}

const Document::NamedRep& rep_arg(const Document& doc, const std::string& name) {
    return doc.rep(name);
}

void print_decomposition(const Document& doc, const Document::NamedRep& named,
                         const Representation<Rational>& v) {
    qrep::ClassRegistry registry(v.quiver());
    auto multiset = qrep::decompose(v, registry);
    for (std::size_t id : registry.ordered_ids()) {
        auto it = multiset.find(id);
        if (it == multiset.end() || it->second == 0) continue;
        const qrep::IndecClass cls = registry.at(id);
        std::string line = dim_string(cls.dim_vector) + " x " + std::to_string(it->second);
        for (const auto& r : doc.reps) {
            if (r.quiver_name != named.quiver_name) continue;
            bool hit = false;
            try {
                hit = qrep::iso(cls.representative, r.rep);
            } catch (const qrep::UndecidedError&) {
            }
            if (hit) {
                line += " = " + r.name;
                break;
            }
        }
        std::cout << line << "\n";
    }
}

int run_check(const Document& doc) {
    for (const auto& [name, q] : doc.quivers) q.validate();
    std::cout << "ok\n";
    return 0;
}

int run_rank(const Document& doc, const std::string& rep_name, const std::string& sub,
             const std::string& via) {
    const auto& named = rep_arg(doc, rep_name);
    std::size_t r;
    if (!sub.empty()) {
        const Quiver& p = doc.quiver(sub);
        r = qrep::subquiver_rank(named.rep, named_subquiver(p, named.rep.quiver()));
    } else if (!via.empty()) {
        const auto& m = doc.morphism(via);
        if (m.morphism.target != named.rep.quiver())
            throw qrep::PreconditionError("morphism '" + via +
                                          "' does not target the representation's quiver");
        r = qrep::pushforward_rank(m.morphism, named.rep);
    } else {
        r = qrep::global_rank(named.rep);
    }
    std::cout << r << "\n";
    return 0;
}

int run_gamma(const Document& doc, const std::string& rep_name, const std::string& show) {
    const auto& named = rep_arg(doc, rep_name);
    auto delta = qrep::max_epi_sub(named.rep);
    auto nabla = qrep::max_mono_quot(named.rep);
    auto gamma = qrep::global_tensor(named.rep);
    if (show.empty()) {
        std::cout << "delta " << dim_string(delta.carrier.dims()) << "\n";
        std::cout << "nabla " << dim_string(nabla.carrier.dims()) << "\n";
        std::cout << "gamma " << dim_string(gamma.gamma.dims()) << "\n";
        std::cout << "rank " << gamma.global_rank << "\n";
        return 0;
    }
    const Representation<Rational>& out = show == "delta"   ? delta.carrier
                                          : show == "nabla" ? nabla.carrier
                                                            : gamma.gamma;
    std::cout << qrep::print_rep(show, named.quiver_name, out);
    return 0;
}

int run_tensor(const Document& doc, const std::vector<std::string>& rep_names,
               bool do_decompose) {
    const auto& a = rep_arg(doc, rep_names[0]);
    const auto& b = rep_arg(doc, rep_names[1]);
    Representation<Rational> t = qrep::tensor(a.rep, b.rep);
    if (do_decompose) {
        print_decomposition(doc, a, t);
        return 0;
    }
    std::cout << qrep::print_rep(a.name + "_x_" + b.name, a.quiver_name, t);
    return 0;
}

int run_decompose(const Document& doc, const std::string& rep_name) {
    const auto& named = rep_arg(doc, rep_name);
    print_decomposition(doc, named, named.rep);
    return 0;
}

int run_hom(const Document& doc, const std::vector<std::string>& rep_names) {
    const auto& a = rep_arg(doc, rep_names[0]);
    const auto& b = rep_arg(doc, rep_names[1]);
    std::cout << "dim " << qrep::hom_space(a.rep, b.rep).size() << "\n";
    return 0;
}

int run_schur(const Document& doc, const std::string& rep_name, const std::string& op,
              std::size_t k) {
    const auto& named = rep_arg(doc, rep_name);
    Representation<Rational> out = op == "ext" ? qrep::exterior(named.rep, k)
                                               : qrep::symmetric(named.rep, k);
    std::cout << qrep::print_rep(op + std::to_string(k) + "_" + named.name,
                                 named.quiver_name, out);
    return 0;
}

int run_limits(const Document& doc, const std::string& rep_name) {
    const auto& named = rep_arg(doc, rep_name);
    auto lim = qrep::limit(named.rep);
    std::cout << "lim " << lim.lim_dim << "\n";
    std::cout << "colim " << lim.colim_dim << "\n";
    std::cout << "rank_eta " << qrep::rank(lim.eta) << "\n";
    return 0;
}

int run_subquivers(const Document& doc, const std::string& quiver_name) {
    const Quiver& q = doc.quiver(quiver_name);
    auto subs = qrep::connected_subquivers(q);
    std::cout << subs.size() << "\n";
    for (const auto& s : subs) std::cout << qrep::subquiver_label(s) << "\n";
    return 0;
}

int run_ringtable(const Document& doc, const std::vector<std::string>& rep_names,
                  bool all_subquivers, const std::vector<std::string>& vias) {
    std::vector<const Document::NamedRep*> reps;
    for (const std::string& n : rep_names) reps.push_back(&rep_arg(doc, n));
    const Quiver& q = reps[0]->rep.quiver();
    for (const auto* r : reps)
        if (r->rep.quiver() != q)
            throw qrep::PreconditionError("ringtable: representations live on different quivers");
    std::vector<qrep::RankFunctionDescriptor> fns;
    if (all_subquivers) {
        for (const auto& s : qrep::connected_subquivers(q))
            fns.push_back(qrep::RankFunctionDescriptor::restriction(s));
    }
    for (const std::string& via : vias) {
        const auto& m = doc.morphism(via);
        if (m.morphism.target != q)
            throw qrep::PreconditionError("morphism '" + via +
                                          "' does not target the representations' quiver");
        fns.push_back(qrep::RankFunctionDescriptor::pushforward(m.morphism, via));
    }
    if (fns.empty())
        fns.push_back(qrep::RankFunctionDescriptor::restriction(qrep::full_subquiver(q)));
    std::cout << "#";
    for (const auto* r : reps) std::cout << ' ' << r->name;
    std::cout << "\n";
    for (const auto& fn : fns) {
        std::cout << fn.label;
        for (const auto* r : reps) std::cout << ' ' << qrep::rank_function_value(fn, r->rep);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with quiver representations"};
    app.require_subcommand(1);

    std::string file, rep_name, quiver_name, sub, via, show, op;
    std::vector<std::string> rep_names, vias;
    std::size_t schur_k = 1;
    bool flag_decompose = false, all_subquivers = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input file")->required();
    };

    CLI::App* c_check = app.add_subcommand("check", "validate the input file");
    add_file(c_check);

    CLI::App* c_rank = app.add_subcommand("rank", "global rank of a representation");
    add_file(c_rank);
    c_rank->add_option("--rep", rep_name)->required();
    c_rank->add_option("--sub", sub, "restrict to a named subquiver");
    c_rank->add_option("--via", via, "push forward along a named morphism");

    CLI::App* c_gamma = app.add_subcommand("gamma", "global tensor functor data");
    add_file(c_gamma);
    c_gamma->add_option("--rep", rep_name)->required();
    c_gamma->add_option("--show", show)->check(CLI::IsMember({"delta", "nabla", "gamma"}));

    CLI::App* c_tensor = app.add_subcommand("tensor", "tensor product of two representations");
    add_file(c_tensor);
    c_tensor->add_option("--rep", rep_names)->required()->expected(2);
    c_tensor->add_flag("--decompose", flag_decompose);

    CLI::App* c_dec = app.add_subcommand("decompose", "indecomposable summands");
    add_file(c_dec);
    c_dec->add_option("--rep", rep_name)->required();

    CLI::App* c_hom = app.add_subcommand("hom", "dimension of a Hom space");
    add_file(c_hom);
    c_hom->add_option("--rep", rep_names)->required()->expected(2);

    CLI::App* c_schur = app.add_subcommand("schur", "exterior or symmetric power");
    add_file(c_schur);
    c_schur->add_option("--rep", rep_name)->required();
    c_schur->add_option("--op", op)->required()->check(CLI::IsMember({"ext", "sym"}));
    c_schur->add_option("--k", schur_k)->required();

    CLI::App* c_lim = app.add_subcommand("limits", "limit, colimit, and rank of eta");
    add_file(c_lim);
    c_lim->add_option("--rep", rep_name)->required();

    CLI::App* c_subq = app.add_subcommand("subquivers", "connected subquivers");
    add_file(c_subq);
    c_subq->add_option("--quiver", quiver_name)->required();

    CLI::App* c_ring = app.add_subcommand("ringtable", "rank function table");
    add_file(c_ring);
    c_ring->add_option("--reps", rep_names)->required();
    c_ring->add_flag("--all-subquivers", all_subquivers);
    c_ring->add_option("--via", vias);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Document doc = qrep::parse_document(read_file(file));
        if (c_check->parsed()) return run_check(doc);
        if (c_rank->parsed()) {
            if (!sub.empty() && !via.empty())
                throw qrep::PreconditionError("rank: --sub and --via are mutually exclusive");
            return run_rank(doc, rep_name, sub, via);
        }
        if (c_gamma->parsed()) return run_gamma(doc, rep_name, show);
        if (c_tensor->parsed()) return run_tensor(doc, rep_names, flag_decompose);
        if (c_dec->parsed()) return run_decompose(doc, rep_name);
        if (c_hom->parsed()) return run_hom(doc, rep_names);
        if (c_schur->parsed()) return run_schur(doc, rep_name, op, schur_k);
        if (c_lim->parsed()) return run_limits(doc, rep_name);
        if (c_subq->parsed()) return run_subquivers(doc, quiver_name);
        if (c_ring->parsed()) return run_ringtable(doc, rep_names, all_subquivers, vias);
        return 1;
    } catch (const qrep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qrep::UndecidedError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 3;
    } catch (const qrep::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
