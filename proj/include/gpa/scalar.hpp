#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpa {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Element of the cyclotomic field Q(zeta_N), stored as rational coefficients
/// on the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th
/// cyclotomic polynomial. Two elements with the same conductor are equal iff
/// their coefficient vectors are equal. Binary operations on elements with
/// different conductors promote both into Q(zeta_lcm) first. Immutable after
/// construction apart from assignment.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}
    Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}
    Cyclotomic(const Rational& v) : conductor_(1), coeffs_{v} {}

    static Cyclotomic zeta(unsigned n, long power = 1);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in Q (all power-basis coefficients beyond
    /// the constant one vanish).
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    /// Embed into Q(zeta_n); n must be a multiple of the conductor.
    Cyclotomic promoted(unsigned n) const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;  // negative exponents via inverse()

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// If the element is a root of unity, its exact multiplicative order
    /// (i.e. the m for which it is a primitive m-th root); otherwise absent.
    std::optional<unsigned> primitive_root_order() const;

    std::string str() const;

private:
    unsigned conductor_;
    std::vector<Rational> coeffs_;  // size phi(conductor_)

    static void align(Cyclotomic& a, Cyclotomic& b);
};

unsigned euler_phi(unsigned n);

/// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
/// Cached; safe for concurrent use.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

/// Parse the scalar expression syntax used in input files and element
/// literals: integers, rationals p/q, roots of unity z<N> and z<N>^k, the
/// operators + - * / ^, unary minus, and parentheses. Examples: "1/2 + z3^2",
/// "-z4", "(1+z6)*z6^5". Throws std::invalid_argument on malformed input.
Cyclotomic parse_scalar(std::string_view text);

}  // namespace gpa
