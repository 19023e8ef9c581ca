#pragma once

#include <algorithm>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

// Coefficients lowest degree first, trailing zeros stripped; the zero
// polynomial is the empty coefficient vector.
template <Field F>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const F& x) { return Polynomial(std::vector<F>{x}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as 0
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    F operator()(const F& x) const {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
            if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }

    std::vector<F> c_;
};

// Characteristic polynomial det(xI - m) by the Berkowitz recursion:
// division-free, so it works uniformly over every field here.
template <Field F>
Polynomial<F> char_poly(const Matrix<F>& m) {
    if (!m.is_square()) throw PreconditionError("char_poly: non-square matrix");
    std::size_t n = m.rows();
    // coefficients highest degree first
    std::vector<F> p{F(1)};
    for (std::size_t k = 0; k < n; ++k) {
        // Toeplitz column t for the k+1 x k+1 leading principal block
        std::vector<F> t(k + 2, F(0));
        t[0] = F(1);
        t[1] = -m(k, k);
        if (k > 0) {
            // t[j] = -(R . A^{j-2} . C) with A the k x k principal block,
            // R the row left of m(k,k), C the column above it
            std::vector<F> w(k);
            for (std::size_t i = 0; i < k; ++i) w[i] = m(i, k);
            for (std::size_t j = 2; j <= k + 1; ++j) {
                F dot(0);
                for (std::size_t i = 0; i < k; ++i) dot = dot + m(k, i) * w[i];
                t[j] = -dot;
                if (j <= k) {
                    std::vector<F> nw(k, F(0));
                    for (std::size_t i = 0; i < k; ++i) {
                        if (w[i] == F(0)) continue;
                        for (std::size_t r = 0; r < k; ++r)
                            nw[r] = nw[r] + m(r, i) * w[i];
                    }
                    w = std::move(nw);
                }
            }
        }
        std::vector<F> np(k + 2, F(0));
        for (std::size_t i = 0; i < np.size(); ++i)
            for (std::size_t j = 0; j <= std::min(i, k + 1); ++j)
                if (i - j < p.size()) np[i] = np[i] + t[j] * p[i - j];
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    return Polynomial<F>(std::move(p));
}

namespace detail {

inline std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    if (n == 0) return divs;
    // prime factorization by trial division
    std::vector<std::pair<BigInt, unsigned>> factors;
    for (BigInt d = 2; d * d <= n; d = (d == 2 ? BigInt(3) : d + 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    divs.push_back(1);
    for (const auto& [prime, mult] : factors) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

// All rational roots of a nonzero polynomial, ascending: clear denominators,
// strip powers of x, then test +-p/q over divisors of the trailing and
// leading integer coefficients.
inline std::vector<Rational> rational_roots(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw PreconditionError("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    // common denominator
    BigInt lcm = 1;
    for (const Rational& c : p.coeffs()) {
        BigInt den = denominator(c);
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<BigInt> ic;
    ic.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ic.push_back(numerator(c * Rational(lcm)));
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low == ic.size() || ic.size() - low == 1) return roots;
    std::vector<BigInt> nums = detail::divisors(ic[low]);
    std::vector<BigInt> dens = detail::divisors(ic.back());
    for (const BigInt& a : nums)
        for (const BigInt& b : dens) {
            if (gcd(a, b) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand = Rational(sign * a) / Rational(b);
                if (p(cand) == Rational(0)) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace qrep
