#pragma once

#include "kinval/valuation.hpp"

namespace kinval {

/// Alesker product, dispatched on the model's group.
Valuation product(const Valuation& a, const Valuation& b);

/// Alesker-Fourier transform.
Valuation fourier(const Valuation& a);

/// Convolution = fourier(fourier(a) . fourier(b)).
Valuation convolve(const Valuation& a, const Valuation& b);

/// coefficient c with (top-degree component of v) = c * vol.
PiScalar vol_coefficient(const Valuation& v);

}  // namespace kinval
