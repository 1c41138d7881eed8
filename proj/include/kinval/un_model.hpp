#pragma once

#include "kinval/bases.hpp"

namespace kinval {

/// Alesker product on Val^{U(n)}: multiply TS representatives, reduce to
/// normal form in C[t,s]/(f_{n+1}, f_{n+2}).
Valuation un_product(const Valuation& a, const Valuation& b);

/// Fourier transform through the hermitian-intrinsic-volume index map
/// mu_{k,q} -> mu_{2n-k, n-k+q}.
Valuation un_fourier(const Valuation& a);

/// a * b = fourier(fourier(a) . fourier(b)).
Valuation un_convolve(const Valuation& a, const Valuation& b);

/// Convenience: the hermitian intrinsic volume mu_{k,q} in U(n).
Valuation un_mu(int n, int k, int q);

}  // namespace kinval
