#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kinval/rational.hpp"

namespace kinval {

/// Univariate polynomial over Q, coefficients ascending by degree,
/// trailing zeros trimmed (zero polynomial = empty vector).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rational& r) { return QPoly({r}); }
    /// c * x^k
    static QPoly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational leading() const {
        if (is_zero()) throw std::domain_error("QPoly: leading coefficient of zero");
        return c_.back();
    }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const Rational& r) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    double eval(double x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division over Q; returns (quotient, remainder).
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);

/// Fraction-free (primitive pseudo-remainder) Euclid. Result is a primitive
/// integer polynomial with positive leading coefficient; gcd(0,0) = 0.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Exact element of Q(pi): reduced ratio num/den of Q-polynomials in pi.
/// Canonical form: gcd(num, den) = 1, both with integer coefficients of
/// joint content 1, den's leading coefficient positive. Two PiScalars are
/// equal iff their representations coincide componentwise.
class PiScalar {
public:
    PiScalar() : num_(), den_(QPoly::constant(Rational(1))) {}
    PiScalar(long n) : PiScalar(Rational(n)) {}
    PiScalar(const Rational& r);
    PiScalar(QPoly num, QPoly den);

    static PiScalar pi_power(int k);  // pi^k, any integer k
    static PiScalar pi() { return pi_power(1); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    /// The value as a Rational; throws when pi actually occurs.
    Rational to_rational() const;

    PiScalar operator-() const;
    PiScalar operator+(const PiScalar& o) const;
    PiScalar operator-(const PiScalar& o) const;
    PiScalar operator*(const PiScalar& o) const;
    PiScalar operator/(const PiScalar& o) const;
    PiScalar& operator+=(const PiScalar& o) { return *this = *this + o; }
    PiScalar& operator-=(const PiScalar& o) { return *this = *this - o; }
    PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }
    PiScalar& operator/=(const PiScalar& o) { return *this = *this / o; }

    PiScalar inverse() const;
    PiScalar pow(int k) const;

    bool operator==(const PiScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const PiScalar& o) const { return !(*this == o); }

    /// Sign when the value is a single rational multiple of an integer power
    /// of pi (num and den both monomials); nullopt otherwise.
    std::optional<int> monomial_sign() const;

    double eval_approx() const;

    /// Grammar: R ::= P | (P)/(P),  P ::= sum of a/b*pi^k terms, pi^0 elided.
    std::string str() const;
    static PiScalar parse(const std::string& text);

private:
    void normalize();
    QPoly num_, den_;
};

enum class FieldOp { Add, Sub, Mul, Div };
PiScalar field_op(const PiScalar& a, const PiScalar& b, FieldOp op);

/// Volume of the n-dimensional unit ball, exact in Q(pi).
PiScalar omega(int n);

/// Flag coefficient binom(n,k) * omega_n / (omega_k * omega_{n-k}).
PiScalar flag(int n, int k);

}  // namespace kinval
