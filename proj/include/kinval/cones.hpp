#pragma once

#include "kinval/bases.hpp"

namespace kinval {

struct ConeViolation {
    std::string family;  // "first" or "second", or "sign" for positivity
    int k = 0;
    int q = 0;

    std::string id() const { return family + "@" + std::to_string(k) + "," + std::to_string(q); }
    bool operator==(const ConeViolation& o) const {
        return family == o.family && k == o.k && q == o.q;
    }
};

struct ConeVerdict {
    bool member = true;
    std::vector<ConeViolation> violated;
};

/// Positivity test in U(n): all hermitian-intrinsic-volume coefficients
/// nonnegative. Coefficients whose sign is not determined by their exact
/// monomial form are rejected with a domain error, never guessed.
ConeVerdict un_positive_check(const Valuation& phi);

/// Monotone-cone test in U(n), coefficients c_{k,q} in the hermitian
/// basis, out-of-range coefficients read as zero:
///   first:  (k-2q)   c_{k,q} >= (k-2q-1)   c_{k,q+1},  max(0,k-n)   <= q <= (k-1)/2
///   second: (n+q-k+1)c_{k,q} <= (n+q-k+3/2)c_{k,q+1},  max(0,k-n-1) <= q <= (k-2)/2
ConeVerdict un_monotone_check(const Valuation& phi);

}  // namespace kinval
