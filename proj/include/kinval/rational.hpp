#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kinval {

/// Exact rational scalar backed by GMP. Always canonical:
/// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a" or "a/b" with arbitrary-precision decimal integers.
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    double to_double() const { return v_.get_d(); }

    /// "a" when integral, "a/b" otherwise.
    std::string str() const;

private:
    mpq_class v_;
};

Rational factorial(long n);
Rational binomial(long n, long k);

/// Odd double factorial 1*3*...*m, with (-1)!! = 1 and 0!! = 1.
/// Positive even arguments are rejected.
Rational double_factorial(long m);

}  // namespace kinval
