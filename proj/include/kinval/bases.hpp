#pragma once

#include "kinval/ts_quotient.hpp"
#include "kinval/valuation.hpp"

namespace kinval {

/// Index of one basis element: degree k plus the basis-specific second
/// index (p for monomials and the U-basis, q for hermitian/Tasaki, r for
/// primitive). SO uses k only (sub = 0); G2/Spin7 canonical monomials use
/// their position at degree k.
struct BasisIndex {
    int k = 0;
    int sub = 0;

    bool operator==(const BasisIndex& o) const { return k == o.k && sub == o.sub; }
    bool operator<(const BasisIndex& o) const { return k != o.k ? k < o.k : sub < o.sub; }
};

using BasisTerm = std::pair<BasisIndex, PiScalar>;

bool basis_index_valid(const ModelId& model, BasisTag tag, const BasisIndex& index);

/// Valid indices at degree k, ascending by sub index.
std::vector<BasisIndex> basis_indices(const ModelId& model, BasisTag tag, int k);

/// G2/Spin7 canonical monomial names ("t^3", "u", "tu", "v", "1", "t").
BasisIndex monomial_index(const ModelId& model, const std::string& name);
std::string monomial_name(const ModelId& model, const BasisIndex& index);

/// Column j = canonical coordinates of the j-th basis element at degree k.
/// Exactly invertible by construction; memoized.
Matrix basis_to_canonical(const ModelId& model, BasisTag tag, int k);
Matrix canonical_to_basis(const ModelId& model, BasisTag tag, int k);

Valuation construct(const ModelId& model, BasisTag tag, const std::vector<BasisTerm>& terms);

/// Exact coefficients of v in the target basis; zero terms omitted,
/// indices ascending. Inverse of construct.
std::vector<BasisTerm> convert_basis(const Valuation& v, BasisTag tag);

Valuation basis_element(const ModelId& model, BasisTag tag, const BasisIndex& index);

/// The Euler characteristic (unit of the Alesker product).
Valuation chi(const ModelId& model);

/// The Lebesgue volume, normalized through t^m = m! omega_m / pi^m mu_m.
Valuation vol(const ModelId& model);

}  // namespace kinval
