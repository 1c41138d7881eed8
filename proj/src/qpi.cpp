#include "kinval/qpi.hpp"

#include <cctype>
#include <cmath>
#include <mutex>

namespace kinval {

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::domain_error("QPoly: negative exponent");
    if (c.is_zero()) return QPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& r) const {
    if (r.is_zero()) return QPoly();
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * r);
    return QPoly(std::move(v));
}

double QPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    Rational lb = b.leading();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (int d = a.degree(); d >= db; --d) {
        Rational c = rem[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        Rational q = c / lb;
        quot[static_cast<std::size_t>(d - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(d - db + j)] -= q * b.coeff(j);
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

namespace {

// Scales to integer coefficients with content 1 and positive leading coeff.
QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class num = c.numerator() * lcm_den / c.denominator();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale = Rational(lcm_den, content);
    QPoly q = p.scaled(scale);
    if (q.leading().sign() < 0) q = -q;
    return q;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, integer arithmetic throughout.
QPoly pseudo_rem(const QPoly& a, const QPoly& b) {
    QPoly rem = a;
    int db = b.degree();
    Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        QPoly lead = QPoly::monomial(rem.leading(), shift);
        rem = rem.scaled(lb) - lead * b;
    }
    return rem;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = primitive_part(a);
    QPoly y = primitive_part(b);
    while (!y.is_zero()) {
        QPoly r = primitive_part(pseudo_rem(x, y));
        x = y;
        y = r;
    }
    return x;
}

// ------------------------------------------------------------- PiScalar

PiScalar::PiScalar(const Rational& r)
    : num_(r.is_zero() ? QPoly() : QPoly::constant(r)), den_(QPoly::constant(Rational(1))) {
    normalize();
}

PiScalar::PiScalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("PiScalar: zero denominator");
    normalize();
}

PiScalar PiScalar::pi_power(int k) {
    if (k >= 0) return PiScalar(QPoly::monomial(Rational(1), k), QPoly::constant(Rational(1)));
    return PiScalar(QPoly::constant(Rational(1)), QPoly::monomial(Rational(1), -k));
}

void PiScalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(Rational(1));
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    // joint integer scaling: clear denominators, divide by common content
    mpz_class lcm_den = 1;
    for (const QPoly* p : {&num_, &den_})
        for (const auto& c : p->coeffs())
            if (!c.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class content = 0;
    for (const QPoly* p : {&num_, &den_})
        for (const auto& c : p->coeffs()) {
            if (c.is_zero()) continue;
            mpz_class n = c.numerator() * lcm_den / c.denominator();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        }
    Rational scale = Rational(lcm_den, content);
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational PiScalar::to_rational() const {
    if (!is_rational()) throw std::domain_error("PiScalar: not a rational number");
    if (is_zero()) return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

PiScalar PiScalar::operator-() const {
    PiScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

PiScalar PiScalar::operator+(const PiScalar& o) const {
    return PiScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PiScalar PiScalar::operator-(const PiScalar& o) const {
    return PiScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

PiScalar PiScalar::operator*(const PiScalar& o) const {
    return PiScalar(num_ * o.num_, den_ * o.den_);
}

PiScalar PiScalar::operator/(const PiScalar& o) const {
    if (o.is_zero()) throw std::domain_error("PiScalar: division by zero");
    return PiScalar(num_ * o.den_, den_ * o.num_);
}

PiScalar PiScalar::inverse() const {
    if (is_zero()) throw std::domain_error("PiScalar: inverse of zero");
    return PiScalar(den_, num_);
}

PiScalar PiScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    PiScalar acc(1);
    PiScalar base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::optional<int> PiScalar::monomial_sign() const {
    if (is_zero()) return 0;
    auto is_monomial = [](const QPoly& p) {
        int nz = 0;
        for (const auto& c : p.coeffs())
            if (!c.is_zero()) ++nz;
        return nz == 1;
    };
    if (!is_monomial(num_) || !is_monomial(den_)) return std::nullopt;
    return num_.leading().sign() * den_.leading().sign();
}

double PiScalar::eval_approx() const {
    constexpr double kPi = 3.14159265358979323846264338327950288;
    double d = den_.eval(kPi);
    if (d == 0.0) throw std::domain_error("PiScalar: denominator vanished numerically");
    return num_.eval(kPi) / d;
}

PiScalar field_op(const PiScalar& a, const PiScalar& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    throw std::domain_error("field_op: unknown operation");
}

// --------------------------------------------------------- serialization

namespace {

std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        Rational a = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        std::string pipart = k == 0 ? "" : (k == 1 ? "pi" : "pi^" + std::to_string(k));
        if (pipart.empty()) {
            out += a.str();
        } else if (a == Rational(1)) {
            out += pipart;
        } else {
            out += a.str() + "*" + pipart;
        }
    }
    return out;
}

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    mpz_class parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::domain_error("PiScalar: expected integer in '" + s + "'");
        return mpz_class(s.substr(start, pos - start));
    }

    int parse_exponent() {
        mpz_class e = parse_int();
        if (e < 0 || e > 1000) throw std::domain_error("PiScalar: exponent out of range");
        return static_cast<int>(e.get_si());
    }

    // term := coeff [*pi[^k]] | [-]pi[^k]
    QPoly parse_term(bool negated) {
        skip_ws();
        Rational coeff(1);
        int expo = 0;
        bool have_pi = false;
        if (s.compare(pos, 2, "pi") == 0) {
            have_pi = true;
            pos += 2;
            expo = eat('^') ? parse_exponent() : 1;
        } else {
            mpz_class n = parse_int();
            mpz_class d = 1;
            if (eat('/')) d = parse_int();
            coeff = Rational(n, d);
            if (eat('*')) {
                skip_ws();
                if (s.compare(pos, 2, "pi") != 0)
                    throw std::domain_error("PiScalar: expected 'pi' in '" + s + "'");
                pos += 2;
                have_pi = true;
                expo = eat('^') ? parse_exponent() : 1;
            }
        }
        (void)have_pi;
        if (negated) coeff = -coeff;
        return QPoly::monomial(coeff, expo);
    }

    QPoly parse_poly() {
        QPoly acc;
        bool neg = false;
        if (eat('+')) neg = false;
        else if (eat('-')) neg = true;
        acc = acc + parse_term(neg);
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + parse_term(false);
            else if (eat('-')) acc = acc + parse_term(true);
            else break;
        }
        return acc;
    }
};

}  // namespace

std::string PiScalar::str() const {
    // constant denominators fold into the coefficients: 2/3, 1/2*pi, ...
    if (den_.degree() == 0) return poly_str(num_.scaled(den_.coeff(0).reciprocal()));
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

PiScalar PiScalar::parse(const std::string& text) {
    PolyParser p{text};
    p.skip_ws();
    if (p.peek() == '(') {
        p.eat('(');
        QPoly num = p.parse_poly();
        if (!p.eat(')')) throw std::domain_error("PiScalar: expected ')' in '" + text + "'");
        if (!p.eat('/')) throw std::domain_error("PiScalar: expected '/' in '" + text + "'");
        if (!p.eat('(')) throw std::domain_error("PiScalar: expected '(' in '" + text + "'");
        QPoly den = p.parse_poly();
        if (!p.eat(')')) throw std::domain_error("PiScalar: expected ')' in '" + text + "'");
        p.skip_ws();
        if (p.pos != text.size()) throw std::domain_error("PiScalar: trailing junk in '" + text + "'");
        return PiScalar(std::move(num), std::move(den));
    }
    QPoly num = p.parse_poly();
    p.skip_ws();
    if (p.pos != text.size()) throw std::domain_error("PiScalar: trailing junk in '" + text + "'");
    return PiScalar(std::move(num), QPoly::constant(Rational(1)));
}

// ------------------------------------------------------------ constants

PiScalar omega(int n) {
    if (n < 0) throw std::domain_error("omega: negative dimension");
    static std::mutex mu;
    static std::vector<PiScalar> table = {PiScalar(1), PiScalar(2)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        // omega_m = 2*pi/m * omega_{m-2}
        table.push_back(table[static_cast<std::size_t>(m - 2)] * PiScalar::pi() *
                        PiScalar(Rational(2, m)));
    }
    return table[static_cast<std::size_t>(n)];
}

PiScalar flag(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::domain_error("flag: index out of range");
    return PiScalar(binomial(n, k)) * omega(n) / (omega(k) * omega(n - k));
}

}  // namespace kinval
