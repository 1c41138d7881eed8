#include "kinval/un_model.hpp"

#include <stdexcept>

#include "kinval/ts_quotient.hpp"

namespace kinval {

namespace {

void require_un(const Valuation& v) {
    if (v.model().group != Group::U)
        throw std::domain_error("un_model: U(n) valuation expected");
}

}  // namespace

Valuation un_product(const Valuation& a, const Valuation& b) {
    require_un(a);
    require_un(b);
    if (a.model() != b.model()) throw std::domain_error("un_product: dimension mismatch");
    return un_normal_form(ts_lift(a) * ts_lift(b), a.model().n);
}

Valuation un_fourier(const Valuation& a) {
    require_un(a);
    int n = a.model().n;
    std::vector<BasisTerm> mapped;
    for (const auto& [index, coeff] : convert_basis(a, BasisTag::Hiv))
        mapped.push_back({{2 * n - index.k, n - index.k + index.sub}, coeff});
    return construct(a.model(), BasisTag::Hiv, mapped);
}

Valuation un_convolve(const Valuation& a, const Valuation& b) {
    return un_fourier(un_product(un_fourier(a), un_fourier(b)));
}

Valuation un_mu(int n, int k, int q) {
    return basis_element(ModelId::un(n), BasisTag::Hiv, {k, q});
}

}  // namespace kinval
