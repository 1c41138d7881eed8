#pragma once

#include "kinval/bases.hpp"

namespace kinval {

/// Product in Val^{G2} = C[t,u]/(t^2 u, u^2 + 4 t^6) and
/// Val^{Spin7} = C[t,v]/(v^2 - t^8, v t), by monomial rewriting.
Valuation exc_product(const Valuation& a, const Valuation& b);

/// Degree-reversing involution: t-powers transform like SO(m) intrinsic
/// volumes; the extra letters map by u <-> tu and v <-> v (their geometric
/// normalization is a basis choice, so this fixes the convention).
Valuation exc_fourier(const Valuation& a);

Valuation exc_convolve(const Valuation& a, const Valuation& b);

/// Graded dimensions by degree.
std::vector<int> exc_dims(Group which);

/// dim Val_k^{SU(n)}: the U(n) dimension, plus 4 at k = n for even n and
/// plus 2 at k = n for odd n.
int su_dim(int n, int k);

enum class SpFamily { Sp, SpU1, SpSp1 };

/// First k_max+1 coefficients of the stable Poincare series of the
/// symplectic families, by exact power-series division.
std::vector<long> sp_series_coeffs(SpFamily family, int k_max);

}  // namespace kinval
