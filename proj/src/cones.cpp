#include "kinval/cones.hpp"

#include <stdexcept>

namespace kinval {

namespace {

void require_un(const Valuation& v) {
    if (v.model().group != Group::U)
        throw std::domain_error("cones: U(n) valuation expected");
}

int exact_sign(const PiScalar& c, int k, int q) {
    auto s = c.monomial_sign();
    if (!s.has_value())
        throw std::domain_error("cones: sign of coefficient at (k=" + std::to_string(k) +
                                ", q=" + std::to_string(q) + ") is not a monomial in pi");
    return *s;
}

// HIV coefficients per degree, zero-extended lookup
std::map<int, std::map<int, PiScalar>> hiv_coeffs(const Valuation& phi) {
    std::map<int, std::map<int, PiScalar>> table;
    for (const auto& [index, c] : convert_basis(phi, BasisTag::Hiv))
        table[index.k][index.sub] = c;
    return table;
}

PiScalar lookup(const std::map<int, PiScalar>& row, int q) {
    auto it = row.find(q);
    return it == row.end() ? PiScalar(0) : it->second;
}

}  // namespace

ConeVerdict un_positive_check(const Valuation& phi) {
    require_un(phi);
    ConeVerdict verdict;
    for (const auto& [k, row] : hiv_coeffs(phi))
        for (const auto& [q, c] : row)
            if (exact_sign(c, k, q) < 0) verdict.violated.push_back({"sign", k, q});
    verdict.member = verdict.violated.empty();
    return verdict;
}

ConeVerdict un_monotone_check(const Valuation& phi) {
    require_un(phi);
    int n = phi.model().n;
    ConeVerdict verdict;
    for (const auto& [k, row] : hiv_coeffs(phi)) {
        for (int q = std::max(0, k - n); q <= (k - 1) / 2; ++q) {
            // (k-2q) c_{k,q} >= (k-2q-1) c_{k,q+1}
            PiScalar lhs = PiScalar(k - 2 * q) * lookup(row, q);
            PiScalar rhs = PiScalar(k - 2 * q - 1) * lookup(row, q + 1);
            if (exact_sign(lhs - rhs, k, q) < 0) verdict.violated.push_back({"first", k, q});
        }
        for (int q = std::max(0, k - n - 1); q <= (k - 2) / 2; ++q) {
            // (n+q-k+1) c_{k,q} <= (n+q-k+3/2) c_{k,q+1}
            PiScalar lhs = PiScalar(n + q - k + 1) * lookup(row, q);
            PiScalar rhs = (PiScalar(n + q - k + 1) + PiScalar(Rational(1, 2))) * lookup(row, q + 1);
            if (exact_sign(rhs - lhs, k, q) < 0) verdict.violated.push_back({"second", k, q});
        }
    }
    verdict.member = verdict.violated.empty();
    return verdict;
}

}  // namespace kinval
