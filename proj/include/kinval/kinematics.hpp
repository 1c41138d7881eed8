#pragma once

#include "kinval/bases.hpp"
#include "kinval/ops.hpp"

namespace kinval {

/// Poincare pairing at degree k: M[i][j] = vol-coefficient of
/// b_i^{(k)} . b_j^{(m-k)} in the canonical bases. Perfect (invertible)
/// in all four models.
Matrix pairing_matrix(const ModelId& model, int k);

/// Principal kinematic formula k_G(chi): the tensor inverse of the
/// Poincare pairing, sum over degrees of b_i (x) (dual basis of b_i).
TensorValuation kf_chi(const ModelId& model);

/// (phi (x) chi) . T: multiply the first tensor slot by phi.
TensorValuation tensor_left_product(const Valuation& phi, const TensorValuation& tensor);

/// k_G(phi) = (phi (x) chi) . k_G(chi): left-multiply the first tensor
/// slot of the principal formula.
TensorValuation kf(const ModelId& model, const Valuation& phi);

/// Additive kinematic formula a_G(phi) = (F (x) F)(k_G(F phi)).
TensorValuation akf(const ModelId& model, const Valuation& phi);

/// Coefficient table c^i_{k,l} = flag(n+i,i) flag(n+i,k)^{-1} of the
/// classical SO(n) kinematic formula, as a tensor over the mu-basis.
TensorValuation so_kf_closed_form(int n, int i);

/// Closed form of the SO(n) additive formula:
/// d^i_{k,l} = flag(2n-i, n-i) flag(2n-i, n-k)^{-1}, k + l = i.
TensorValuation so_akf_closed_form(int n, int i);

/// True iff re-expressing kf(mu~_i) in the renormalized basis
/// mu~_k = pi^n k! omega_k / (pi^k n! omega_n) mu_k gives coefficient 1
/// on every mu~_k (x) mu~_l with k + l = n + i, for all 0 <= i <= n.
bool nijenhuis_check(int n);

/// Principal U(n) kinematic formula from the primitive-basis closed form
/// (independent of kf_chi's pairing inversion).
TensorValuation un_kf_closed_form(int n);

/// Valuation-valued coefficients c_k = flag(n,k)^{-1} phi . mu_k pairing
/// with mu_{n-k}(L) in the general Hadwiger expansion.
std::vector<std::pair<int, Valuation>> general_hadwiger_coeffs(int n, const Valuation& phi);

/// Kinematic coefficient table: one TensorValuation row per source basis
/// element phi_i.
struct KinematicTable {
    ModelId model;
    BasisTag source_basis;
    std::vector<TensorValuation> rows;
};

/// Solves for the additive SO(n) coefficients d^i_{k,l} by evaluating
/// mu_i((r+s)B) = sum d^i_{k,l} mu_k(rB) mu_l(sB) on ball templates and
/// matching monomials r^j s^{i-j}; rows indexed by i.
KinematicTable template_additive_solver(int n);

/// L = multiplication by mu_1 = (pi/2) t.
Valuation lefschetz_L(const Valuation& a);

/// Lambda = 2 F(L(F a)).
Valuation lefschetz_Lambda(const Valuation& a);

/// True iff multiplication by t^{m-2k}: Val_k -> Val_{m-k} has full rank.
bool hard_lefschetz_check(const ModelId& model, int k);

}  // namespace kinval
