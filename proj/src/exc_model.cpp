#include "kinval/exc_model.hpp"

#include <stdexcept>

namespace kinval {

namespace {

void require_exc(const Valuation& v) {
    if (v.model().group != Group::G2 && v.model().group != Group::Spin7)
        throw std::domain_error("exc_model: G2 or Spin7 valuation expected");
}

// product of two canonical basis monomials; empty result means zero
std::vector<std::pair<BasisIndex, PiScalar>> monomial_product(Group g, const BasisIndex& x,
                                                              const BasisIndex& y) {
    const bool xt = x.sub == 0, yt = y.sub == 0;  // plain t-powers?
    int top = g == Group::G2 ? 7 : 8;
    auto tpow = [&](int k, const PiScalar& c) -> std::vector<std::pair<BasisIndex, PiScalar>> {
        if (k > top || c.is_zero()) return {};
        return {{BasisIndex{k, 0}, c}};
    };
    if (xt && yt) return tpow(x.k + y.k, PiScalar(1));
    if (xt || yt) {
        const BasisIndex& letter = xt ? y : x;
        int a = xt ? x.k : y.k;  // exponent of the t-power factor
        if (g == Group::G2) {
            if (letter == BasisIndex{3, 1}) {  // t^a * u
                if (a == 0) return {{BasisIndex{3, 1}, PiScalar(1)}};
                if (a == 1) return {{BasisIndex{4, 1}, PiScalar(1)}};
                return {};  // t^2 u = 0
            }
            // t^a * tu
            if (a == 0) return {{BasisIndex{4, 1}, PiScalar(1)}};
            return {};
        }
        // Spin7: t^a * v
        if (a == 0) return {{BasisIndex{4, 1}, PiScalar(1)}};
        return {};  // v t = 0
    }
    if (g == Group::G2) {
        if (x == BasisIndex{3, 1} && y == BasisIndex{3, 1}) return tpow(6, PiScalar(-4));
        // u * tu = t u^2 = -4 t^7;  tu * tu = t^2 u^2 = 0
        if (x == BasisIndex{3, 1} || y == BasisIndex{3, 1}) return tpow(7, PiScalar(-4));
        return {};
    }
    return tpow(8, PiScalar(1));  // v * v = t^8
}

}  // namespace

Valuation exc_product(const Valuation& a, const Valuation& b) {
    require_exc(a);
    require_exc(b);
    if (a.model() != b.model()) throw std::domain_error("exc_product: model mismatch");
    Valuation r(a.model());
    for (const auto& [j, cj] : a.components())
        for (const auto& [k, ck] : b.components())
            for (std::size_t i = 0; i < cj.size(); ++i)
                for (std::size_t l = 0; l < ck.size(); ++l) {
                    PiScalar c = cj[i] * ck[l];
                    if (c.is_zero()) continue;
                    for (const auto& [idx, mc] : monomial_product(
                             a.model().group, {j, static_cast<int>(i)}, {k, static_cast<int>(l)}))
                        r.add_coord(idx.k, static_cast<std::size_t>(idx.sub), c * mc);
                }
    r.prune();
    return r;
}

Valuation exc_fourier(const Valuation& a) {
    require_exc(a);
    int m = a.model().top_degree();
    Valuation r(a.model());
    for (const auto& [k, coords] : a.components()) {
        // t^k |-> (k! omega_k pi^{m-k}) / ((m-k)! omega_{m-k} pi^k) t^{m-k},
        // the SO(m) intrinsic-volume transform in t-coordinates
        if (!coords[0].is_zero()) {
            PiScalar c = PiScalar(factorial(k)) * omega(k) * PiScalar::pi_power(m - k) /
                         (PiScalar(factorial(m - k)) * omega(m - k) * PiScalar::pi_power(k));
            r.add_coord(m - k, 0, coords[0] * c);
        }
        if (coords.size() > 1 && !coords[1].is_zero()) {
            if (a.model().group == Group::G2)
                r.add_coord(k == 3 ? 4 : 3, 1, coords[1]);  // u <-> tu
            else
                r.add_coord(4, 1, coords[1]);  // v fixed
        }
    }
    r.prune();
    return r;
}

Valuation exc_convolve(const Valuation& a, const Valuation& b) {
    return exc_fourier(exc_product(exc_fourier(a), exc_fourier(b)));
}

std::vector<int> exc_dims(Group which) {
    ModelId model = which == Group::G2 ? ModelId::g2()
                    : which == Group::Spin7
                        ? ModelId::spin7()
                        : throw std::domain_error("exc_dims: G2 or Spin7 expected");
    std::vector<int> dims;
    for (int k = 0; k <= model.top_degree(); ++k) dims.push_back(graded_dim(model, k));
    return dims;
}

int su_dim(int n, int k) {
    int base = un_dim(n, k);
    if (k != n) return base;
    return base + (n % 2 == 0 ? 4 : 2);
}

std::vector<long> sp_series_coeffs(SpFamily family, int k_max) {
    if (k_max < 0) throw std::domain_error("sp_series_coeffs: negative length");

    auto poly_mul = [](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto poly_pow = [&](const std::vector<long>& a, int e) {
        std::vector<long> r{1};
        for (int i = 0; i < e; ++i) r = poly_mul(r, a);
        return r;
    };

    const std::vector<long> one_minus_x{1, -1}, one_plus_x{1, 1};
    const std::vector<long> x2_plus_1{1, 0, 1}, x2_x_1{1, 1, 1};

    std::vector<long> num, den;
    switch (family) {
        case SpFamily::Sp:
            num = {1, -3, 6, -3, 1};
            den = poly_mul(poly_pow(one_minus_x, 7), poly_pow(one_plus_x, 3));
            break;
        case SpFamily::SpU1:
            num = {1, -2, 2, 0, 2, -2, 1};
            den = poly_mul(poly_mul(x2_plus_1, x2_x_1),
                           poly_mul(poly_pow(one_plus_x, 2), poly_pow(one_minus_x, 6)));
            break;
        case SpFamily::SpSp1:
            num = {1, 0, 0, 1, 2, 1};
            den = poly_mul(poly_mul(x2_plus_1, x2_x_1),
                           poly_mul(poly_pow(one_plus_x, 2), poly_pow(one_minus_x, 4)));
            break;
    }

    // power series long division; den[0] = 1 in all three families
    std::vector<Rational> series(static_cast<std::size_t>(k_max) + 1, Rational(0));
    for (int k = 0; k <= k_max; ++k) {
        Rational acc = k < static_cast<int>(num.size()) ? Rational(num[static_cast<std::size_t>(k)])
                                                        : Rational(0);
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
            acc -= Rational(den[static_cast<std::size_t>(j)]) *
                   series[static_cast<std::size_t>(k - j)];
        series[static_cast<std::size_t>(k)] = acc / Rational(den[0]);
    }
    std::vector<long> out;
    out.reserve(series.size());
    for (const Rational& c : series) {
        if (!c.is_integer())
            throw std::logic_error("sp_series_coeffs: non-integer series coefficient");
        out.push_back(static_cast<long>(c.numerator().get_si()));
    }
    return out;
}

}  // namespace kinval
