#include "kinval/ops.hpp"

#include "kinval/bases.hpp"
#include "kinval/exc_model.hpp"
#include "kinval/so_model.hpp"
#include "kinval/un_model.hpp"

namespace kinval {

Valuation product(const Valuation& a, const Valuation& b) {
    switch (a.model().group) {
        case Group::SO: return so_product(a, b);
        case Group::U: return un_product(a, b);
        case Group::G2:
        case Group::Spin7: return exc_product(a, b);
    }
    throw std::domain_error("product: unknown group");
}

Valuation fourier(const Valuation& a) {
    switch (a.model().group) {
        case Group::SO: return so_fourier(a);
        case Group::U: return un_fourier(a);
        case Group::G2:
        case Group::Spin7: return exc_fourier(a);
    }
    throw std::domain_error("fourier: unknown group");
}

Valuation convolve(const Valuation& a, const Valuation& b) {
    return fourier(product(fourier(a), fourier(b)));
}

PiScalar vol_coefficient(const Valuation& v) {
    int m = v.model().top_degree();
    return v.coords(m)[0] / vol(v.model()).coords(m)[0];
}

}  // namespace kinval
