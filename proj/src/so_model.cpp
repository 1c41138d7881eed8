#include "kinval/so_model.hpp"

#include <stdexcept>

namespace kinval {

namespace {

void require_so(const Valuation& v) {
    if (v.model().group != Group::SO)
        throw std::domain_error("so_model: SO(n) valuation expected");
}

}  // namespace

Valuation so_product(const Valuation& a, const Valuation& b) {
    require_so(a);
    require_so(b);
    if (a.model() != b.model()) throw std::domain_error("so_product: dimension mismatch");
    int n = a.model().n;
    Valuation r(a.model());
    for (const auto& [j, cj] : a.components())
        for (const auto& [k, ck] : b.components()) {
            if (j + k > n) continue;
            PiScalar c = PiScalar(binomial(j + k, j)) * omega(j + k) / (omega(j) * omega(k));
            r.add_coord(j + k, 0, cj[0] * ck[0] * c);
        }
    r.prune();
    return r;
}

Valuation so_fourier(const Valuation& a) {
    require_so(a);
    int n = a.model().n;
    Valuation r(a.model());
    for (const auto& [k, c] : a.components()) r.add_coord(n - k, 0, c[0]);
    r.prune();
    return r;
}

Valuation so_convolve(const Valuation& a, const Valuation& b) {
    return so_fourier(so_product(so_fourier(a), so_fourier(b)));
}

PiScalar so_eval_ball(const Valuation& a, const PiScalar& r) {
    require_so(a);
    auto sign = r.monomial_sign();
    if (sign.has_value() ? *sign < 0 : r.eval_approx() < 0)
        throw std::domain_error("so_eval_ball: negative radius");
    int n = a.model().n;
    PiScalar total(0);
    for (const auto& [k, c] : a.components()) {
        // mu_k(B) = binom(n,k) omega_n / omega_{n-k}, homogeneous of degree k
        PiScalar ball = PiScalar(binomial(n, k)) * omega(n) / omega(n - k);
        total += c[0] * ball * r.pow(k);
    }
    return total;
}

PiScalar so_eval_box(const Valuation& a, const std::vector<PiScalar>& sides) {
    require_so(a);
    int n = a.model().n;
    if (static_cast<int>(sides.size()) != n)
        throw std::domain_error("so_eval_box: expected " + std::to_string(n) + " side lengths");
    for (const PiScalar& s : sides) {
        auto sign = s.monomial_sign();
        if (sign.has_value() ? *sign < 0 : s.eval_approx() < 0)
            throw std::domain_error("so_eval_box: negative side length");
    }
    // e_k(sides) via the running product prod (1 + x_i z)
    std::vector<PiScalar> e(static_cast<std::size_t>(n) + 1, PiScalar(0));
    e[0] = PiScalar(1);
    std::size_t used = 0;
    for (const PiScalar& x : sides) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += e[k - 1] * x;
    }
    PiScalar total(0);
    for (const auto& [k, c] : a.components()) total += c[0] * e[static_cast<std::size_t>(k)];
    return total;
}

Valuation so_mu(int n, int k) { return basis_element(ModelId::so(n), BasisTag::Mu, {k, 0}); }

}  // namespace kinval
