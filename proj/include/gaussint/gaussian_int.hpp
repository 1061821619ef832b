#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gaussint {

// Exact Gaussian integer a + bi with arbitrary-precision components.
// Values are immutable in spirit: every operation returns a new value,
// so they are safe to share and move between threads.
class GaussianInt {
public:
    mpz_class re;
    mpz_class im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(mpz_class real, mpz_class imag = 0)
        : re(std::move(real)), im(std::move(imag)) {}

    mpz_class norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    // Divisible by 1+i; equivalently the components share parity,
    // equivalently the norm is even.
    bool is_even() const {
        mpz_class s = re + im;
        return mpz_even_p(s.get_mpz_t()) != 0;
    }
    bool is_odd() const { return !is_even(); }

    // In the half-open first quadrant Re > 0, Im >= 0. Exactly one
    // associate of every nonzero value is canonical.
    bool is_canonical() const { return re > 0 && im >= 0; }

    GaussianInt times_i() const { return {mpz_class(-im), re}; }

    GaussianInt operator-() const { return {mpz_class(-re), mpz_class(-im)}; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {mpz_class(a.re + b.re), mpz_class(a.im + b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {mpz_class(a.re - b.re), mpz_class(a.im - b.im)};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {mpz_class(a.re * b.re - a.im * b.im),
                mpz_class(a.re * b.im + a.im * b.re)};
    }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) {
        return !(a == b);
    }
};

enum class Parity { even, odd };

inline Parity parity_of(const GaussianInt& g) {
    return g.is_even() ? Parity::even : Parity::odd;
}

inline std::string to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

// Total order by (norm, Re, Im); agrees with == on equality. This is the
// ordering key used by factorizations and search streams.
bool norm_lex_less(const GaussianInt& a, const GaussianInt& b);

struct NormLexLess {
    bool operator()(const GaussianInt& a, const GaussianInt& b) const {
        return norm_lex_less(a, b);
    }
};

// One of the four units 1, i, -1, -i, stored as the exponent of i.
class Unit {
public:
    Unit() = default;

    static Unit one() { return Unit(0); }
    static Unit i() { return Unit(1); }
    static Unit minus_one() { return Unit(2); }
    static Unit minus_i() { return Unit(3); }
    static Unit i_power(unsigned k) { return Unit(k % 4); }

    // Recognizes 1, i, -1, -i; nullopt for anything else.
    static std::optional<Unit> from(const GaussianInt& g);

    unsigned i_exponent() const { return k_; }
    GaussianInt value() const;

    Unit inverse() const { return Unit((4 - k_) % 4); }
    friend Unit operator*(Unit a, Unit b) { return Unit((a.k_ + b.k_) % 4); }
    friend bool operator==(Unit a, Unit b) { return a.k_ == b.k_; }
    friend bool operator!=(Unit a, Unit b) { return a.k_ != b.k_; }

private:
    explicit Unit(unsigned k) : k_(static_cast<unsigned char>(k)) {}
    unsigned char k_ = 0;
};

std::string to_string(Unit u);

// η = unit · value with value canonical.
struct Canonicalized {
    Unit unit;
    GaussianInt value;
};

// The unique canonical associate and the unit putting it back.
// Throws std::invalid_argument for zero.
Canonicalized canonicalize(const GaussianInt& g);

// {η, iη, -η, -iη}. Throws std::invalid_argument for zero.
std::array<GaussianInt, 4> associates(const GaussianInt& g);

struct DivResult {
    GaussianInt quotient;
    GaussianInt remainder;
};

// Euclidean division with each quotient coordinate rounded to the nearest
// integer (ties toward even), so norm(remainder) <= norm(divisor)/2.
// Throws std::invalid_argument when the divisor is zero.
DivResult divmod_rounded(const GaussianInt& a, const GaussianInt& b);

// Exact quotient n/d when d | n, nullopt otherwise.
// Throws std::invalid_argument when d is zero.
std::optional<GaussianInt> exact_quotient(const GaussianInt& n,
                                          const GaussianInt& d);

// True iff d | n (d nonzero).
bool divides(const GaussianInt& d, const GaussianInt& n);

// Canonical greatest common divisor via the Euclidean algorithm.
// Throws std::invalid_argument when both arguments are zero.
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

GaussianInt pow(const GaussianInt& base, unsigned long exponent);

// Textual form shared by all I/O: "a+bi" / "a-bi" / "a" / "bi" with no
// spaces and the unit coefficient left implicit, e.g. "2+i", "-1-2i", "0".
std::string to_string(const GaussianInt& g);

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parses the textual form; also accepts an optional '*' before 'i'.
// Throws parse_error naming the offending token.
GaussianInt parse_gaussian(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    return os << to_string(g);
}

}  // namespace gaussint
