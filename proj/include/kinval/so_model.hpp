#pragma once

#include "kinval/bases.hpp"

namespace kinval {

/// Graded product on Val^{SO(n)} = C[t]/(t^{n+1}) through the closed
/// constant mu_j mu_k = binom(j+k,j) omega_{j+k}/(omega_j omega_k) mu_{j+k}.
Valuation so_product(const Valuation& a, const Valuation& b);

/// mu_k -> mu_{n-k}.
Valuation so_fourier(const Valuation& a);

/// a * b = fourier(fourier(a) . fourier(b)); degree = deg a + deg b - n.
Valuation so_convolve(const Valuation& a, const Valuation& b);

/// Exact value on the ball of radius r (r a nonnegative Q(pi) scalar).
PiScalar so_eval_ball(const Valuation& a, const PiScalar& r);

/// Exact value on an axis-parallel box with the given side lengths
/// (elementary symmetric polynomials in the sides).
PiScalar so_eval_box(const Valuation& a, const std::vector<PiScalar>& sides);

/// Convenience: the intrinsic volume mu_k in SO(n).
Valuation so_mu(int n, int k);

}  // namespace kinval
