#include "gaussint/gaussian_int.hpp"

#include <cctype>
#include <utility>

namespace gaussint {

bool norm_lex_less(const GaussianInt& a, const GaussianInt& b) {
    mpz_class na = a.norm();
    mpz_class nb = b.norm();
    int c = cmp(na, nb);
    if (c != 0) return c < 0;
    c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return a.im < b.im;
}

std::optional<Unit> Unit::from(const GaussianInt& g) {
    if (g.re == 1 && g.im == 0) return one();
    if (g.re == 0 && g.im == 1) return i();
    if (g.re == -1 && g.im == 0) return minus_one();
    if (g.re == 0 && g.im == -1) return minus_i();
    return std::nullopt;
}

GaussianInt Unit::value() const {
    switch (k_) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

std::string to_string(Unit u) {
    switch (u.i_exponent()) {
        case 0: return "1";
        case 1: return "i";
        case 2: return "-1";
        default: return "-i";
    }
}

Canonicalized canonicalize(const GaussianInt& g) {
    if (g.is_zero())
        throw std::invalid_argument("canonicalize: zero has no canonical associate");
    GaussianInt v = g;
    unsigned rotations = 0;
    while (!v.is_canonical()) {
        v = v.times_i();
        ++rotations;
    }
    // v = i^rotations * g, hence g = i^(4 - rotations) * v.
    return {Unit::i_power(4 - rotations), std::move(v)};
}

std::array<GaussianInt, 4> associates(const GaussianInt& g) {
    if (g.is_zero())
        throw std::invalid_argument("associates: zero has only itself");
    return {g, g.times_i(), -g, (-g).times_i()};
}

namespace {

// Nearest integer to n/d for d > 0, ties to the even quotient.
mpz_class round_div_ties_even(const mpz_class& n, const mpz_class& d) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class twice_r = 2 * r;
    int c = cmp(twice_r, d);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
        ++q;
    return q;
}

}  // namespace

DivResult divmod_rounded(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero())
        throw std::invalid_argument("divmod_rounded: division by zero");
    mpz_class den = b.norm();
    GaussianInt num = a * b.conj();
    GaussianInt q{round_div_ties_even(num.re, den),
                  round_div_ties_even(num.im, den)};
    GaussianInt r = a - q * b;
    return {std::move(q), std::move(r)};
}

std::optional<GaussianInt> exact_quotient(const GaussianInt& n,
                                          const GaussianInt& d) {
    if (d.is_zero())
        throw std::invalid_argument("exact_quotient: division by zero");
    mpz_class den = d.norm();
    GaussianInt num = n * d.conj();
    if (!mpz_divisible_p(num.re.get_mpz_t(), den.get_mpz_t()) ||
        !mpz_divisible_p(num.im.get_mpz_t(), den.get_mpz_t()))
        return std::nullopt;
    return GaussianInt{mpz_class(num.re / den), mpz_class(num.im / den)};
}

bool divides(const GaussianInt& d, const GaussianInt& n) {
    return exact_quotient(n, d).has_value();
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd: both arguments are zero");
    GaussianInt x = a;
    GaussianInt y = b;
    while (!y.is_zero()) {
        GaussianInt r = divmod_rounded(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonicalize(x).value;
}

GaussianInt pow(const GaussianInt& base, unsigned long exponent) {
    GaussianInt result{1};
    GaussianInt b = base;
    while (exponent > 0) {
        if (exponent & 1) result = result * b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    return result;
}

std::string to_string(const GaussianInt& g) {
    if (g.im == 0) return g.re.get_str();
    std::string imag_part;
    if (g.im == 1) imag_part = "i";
    else if (g.im == -1) imag_part = "-i";
    else imag_part = g.im.get_str() + "i";
    if (g.re == 0) return imag_part;
    if (g.im > 0) return g.re.get_str() + "+" + imag_part;
    return g.re.get_str() + imag_part;
}

namespace {

[[noreturn]] void fail_parse(std::string_view text) {
    throw parse_error("invalid Gaussian integer literal: '" +
                      std::string(text) + "'");
}

// One signed component: sign? (digits ('*'? 'i')? | 'i').
// Returns the value and whether it was the imaginary part.
struct Component {
    mpz_class value;
    bool imaginary;
};

Component parse_component(std::string_view text, size_t& pos) {
    size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    size_t digits_len = pos - digits_begin;

    bool imaginary = false;
    if (digits_len > 0 && pos < text.size() && text[pos] == '*') {
        if (pos + 1 >= text.size() || text[pos + 1] != 'i') fail_parse(text);
        imaginary = true;
        pos += 2;
    } else if (pos < text.size() && text[pos] == 'i') {
        imaginary = true;
        ++pos;
    }

    mpz_class value;
    if (digits_len == 0) {
        if (!imaginary) fail_parse(text);  // bare sign or empty
        value = 1;
    } else {
        value = mpz_class(std::string(text.substr(digits_begin, digits_len)), 10);
    }
    if (negative) value = -value;
    (void)start;
    return {std::move(value), imaginary};
}

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    if (text.empty()) fail_parse(text);
    size_t pos = 0;
    Component first = parse_component(text, pos);
    if (pos == text.size()) {
        if (first.imaginary) return {0, std::move(first.value)};
        return {std::move(first.value), 0};
    }
    // A second component must be the imaginary part, explicitly signed.
    if (first.imaginary) fail_parse(text);
    if (text[pos] != '+' && text[pos] != '-') fail_parse(text);
    Component second = parse_component(text, pos);
    if (pos != text.size() || !second.imaginary) fail_parse(text);
    return {std::move(first.value), std::move(second.value)};
}

}  // namespace gaussint
