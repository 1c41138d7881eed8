#pragma once

#include <map>

#include "kinval/valuation.hpp"

namespace kinval {

/// Polynomial in the generators t (degree 1) and s (degree 2) with Q(pi)
/// coefficients. Keys are (t-exponent, s-exponent); the weighted degree of
/// t^a s^b is a + 2b.
class TsPoly {
public:
    TsPoly() = default;
    static TsPoly monomial(const PiScalar& c, int t_exp, int s_exp);

    const std::map<std::pair<int, int>, PiScalar>& terms() const { return terms_; }
    PiScalar coeff(int t_exp, int s_exp) const;
    void add_term(int t_exp, int s_exp, const PiScalar& c);

    bool is_zero() const { return terms_.empty(); }
    /// Highest weighted degree, -1 for zero.
    int weighted_degree() const;
    bool is_homogeneous() const;

    TsPoly operator+(const TsPoly& o) const;
    TsPoly operator-(const TsPoly& o) const;
    TsPoly operator*(const TsPoly& o) const;
    TsPoly scaled(const PiScalar& c) const;
    bool operator==(const TsPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TsPoly& o) const { return !(*this == o); }

private:
    std::map<std::pair<int, int>, PiScalar> terms_;
};

/// Weighted-degree-m homogeneous part of log(1 + t + s).
TsPoly log_expansion_term(int m);

/// dim Val_k^{U(n)} = min(floor(k/2), floor((2n-k)/2)) + 1.
int un_dim(int n, int k);

/// Reduction table for C[t,s]/(f_{n+1}, f_{n+2}): for each weighted degree
/// d in [n+1, 2n] it rewrites the monomials with s-exponent above
/// floor((2n-d)/2) in terms of the basis monomials of that degree.
/// Built once per n by exact row reduction; degrees above 2n map to zero.
class NormalFormTable {
public:
    explicit NormalFormTable(int n);

    /// Rebuilds a table from stored reduction matrices (cache path);
    /// shapes are validated, contents are trusted.
    NormalFormTable(int n, std::map<int, Matrix> reductions);

    int n() const { return n_; }
    /// Image of p in the quotient, coordinates in the monomial basis.
    Valuation reduce(const TsPoly& p) const;

    /// Reduction matrix at degree d: rows = non-basis monomials (s-exponent
    /// descending from floor(d/2)), columns = basis monomials (s-exponent
    /// ascending); empty for d <= n.
    const Matrix& reduction_matrix(int d) const;

private:
    void check_shapes() const;
    int n_;
    std::map<int, Matrix> reductions_;
};

/// Memoized per-n table (honors the KINVAL_CACHE_DIR persistence hook).
const NormalFormTable& normal_form_table(int n);

Valuation un_normal_form(const TsPoly& p, int n);

/// TS representative of canonical U(n) coordinates.
TsPoly ts_lift(const Valuation& v);

/// Scalar c with s^p t^{k-2p} = c * U_{k,p}.
PiScalar un_ubasis_scale(int n, int k, int p);

}  // namespace kinval
