#include "kinval/rational.hpp"

namespace kinval {

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(text));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rational: cannot parse '" + text + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw std::domain_error("binomial: index out of range");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational double_factorial(long m) {
    if (m < -1) throw std::domain_error("double_factorial: argument below -1");
    if (m > 0 && m % 2 == 0)
        throw std::domain_error("double_factorial: positive even argument");
    if (m <= 0) return Rational(1);  // (-1)!! = 0!! = 1
    mpz_class p = 1;
    for (long i = 1; i <= m; i += 2) p *= i;
    return Rational(p);
}

}  // namespace kinval
