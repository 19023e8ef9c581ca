#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <sstream>
#include <string>

namespace qrep {

namespace mp = boost::multiprecision;

// Unbounded integers and reduced fractions with plain value semantics
// (expression templates off so that `a + b` has type Rational).
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

// A scalar type usable as matrix entries: exact field arithmetic, no rounding.
template <typename F>
concept Field = std::regular<F> && requires(F a, F b) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    F(0);
    F(1);
    F(-1);
};

// Prime field of order P, for the small moduli the brute-force oracles need.
template <unsigned P>
class Fp {
    static_assert(P == 2 || P == 3 || P == 5 || P == 7, "Fp supports p in {2,3,5,7}");

public:
    Fp() : v_(0) {}
    Fp(long long n) : v_(static_cast<unsigned>(((n % P) + P) % P)) {}

    unsigned value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return Fp((a.v_ + b.v_) % P); }
    friend Fp operator-(Fp a, Fp b) { return Fp((a.v_ + P - b.v_) % P); }
    friend Fp operator*(Fp a, Fp b) { return Fp((a.v_ * b.v_) % P); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return Fp((P - v_) % P); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // Fermat: v^(P-2)
        Fp r(1), base(*this);
        unsigned e = P - 2;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    unsigned v_;
};

template <typename F>
struct field_traits {
    static constexpr bool char_zero = false;
};
template <>
struct field_traits<Rational> {
    static constexpr bool char_zero = true;
};
template <unsigned P>
struct field_traits<Fp<P>> {
    static constexpr bool char_zero = false;
    static constexpr unsigned characteristic = P;
};

template <Field F>
std::string to_string(const F& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace qrep
