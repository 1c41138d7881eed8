#include "kinval/kinematics.hpp"

#include <stdexcept>

#include "kinval/so_model.hpp"

namespace kinval {

namespace {

// phi . b, where b is the canonical basis element (k, i)
Valuation times_basis_element(const Valuation& phi, int k, std::size_t i) {
    Valuation e(phi.model());
    e.set_coord(k, i, PiScalar(1));
    return product(phi, e);
}

}  // namespace

Matrix pairing_matrix(const ModelId& model, int k) {
    int m = model.top_degree();
    if (k < 0 || k > m) throw std::domain_error("pairing_matrix: degree out of range");
    std::size_t dk = static_cast<std::size_t>(graded_dim(model, k));
    std::size_t dl = static_cast<std::size_t>(graded_dim(model, m - k));
    Matrix p(dk, dl);
    for (std::size_t i = 0; i < dk; ++i) {
        Valuation bi(model);
        bi.set_coord(k, i, PiScalar(1));
        for (std::size_t j = 0; j < dl; ++j) {
            Valuation bj(model);
            bj.set_coord(m - k, j, PiScalar(1));
            p.at(i, j) = vol_coefficient(product(bi, bj));
        }
    }
    return p;
}

TensorValuation kf_chi(const ModelId& model) {
    int m = model.top_degree();
    TensorValuation out(model);
    for (int k = 0; k <= m; ++k) {
        Matrix p = pairing_matrix(model, k);
        Matrix inv;
        try {
            inv = invert(p);
        } catch (const std::domain_error&) {
            throw std::logic_error("kf_chi: Poincare pairing degenerate at degree " +
                                   std::to_string(k));
        }
        // block (k, m-k): row i = dual basis of b_i^{(k)} in degree m-k,
        // i.e. the transpose of the inverse pairing
        out.add_block(k, m - k, inv.transpose());
    }
    return out;
}

TensorValuation tensor_left_product(const Valuation& phi, const TensorValuation& tensor) {
    if (phi.model() != tensor.model())
        throw std::domain_error("tensor_left_product: model mismatch");
    TensorValuation out(tensor.model());
    for (const auto& [kl, block] : tensor.blocks()) {
        auto [k, l] = kl;
        for (std::size_t i = 0; i < block.rows(); ++i) {
            Valuation prod = times_basis_element(phi, k, i);
            for (const auto& [deg, coords] : prod.components())
                for (std::size_t r = 0; r < coords.size(); ++r) {
                    if (coords[r].is_zero()) continue;
                    for (std::size_t j = 0; j < block.cols(); ++j) {
                        if (block.at(i, j).is_zero()) continue;
                        out.add_entry(deg, l, r, j, coords[r] * block.at(i, j));
                    }
                }
        }
    }
    out.prune();
    return out;
}

TensorValuation kf(const ModelId& model, const Valuation& phi) {
    if (phi.model() != model) throw std::domain_error("kf: model mismatch");
    return tensor_left_product(phi, kf_chi(model));
}

namespace {

// per-degree matrices of the Fourier transform in canonical coordinates
std::map<int, Matrix> fourier_matrices(const ModelId& model) {
    std::map<int, Matrix> f;
    int m = model.top_degree();
    for (int k = 0; k <= m; ++k) {
        std::size_t dk = static_cast<std::size_t>(graded_dim(model, k));
        std::size_t dl = static_cast<std::size_t>(graded_dim(model, m - k));
        Matrix fk(dl, dk);
        for (std::size_t i = 0; i < dk; ++i) {
            Valuation e(model);
            e.set_coord(k, i, PiScalar(1));
            std::vector<PiScalar> img = fourier(e).coords(m - k);
            for (std::size_t r = 0; r < dl; ++r) fk.at(r, i) = img[r];
        }
        f.emplace(k, std::move(fk));
    }
    return f;
}

}  // namespace

TensorValuation akf(const ModelId& model, const Valuation& phi) {
    if (phi.model() != model) throw std::domain_error("akf: model mismatch");
    TensorValuation inner = kf(model, fourier(phi));
    std::map<int, Matrix> f = fourier_matrices(model);
    int m = model.top_degree();
    TensorValuation out(model);
    for (const auto& [kl, block] : inner.blocks()) {
        auto [k, l] = kl;
        out.add_block(m - k, m - l, f.at(k) * block * f.at(l).transpose());
    }
    out.prune();
    return out;
}

TensorValuation so_kf_closed_form(int n, int i) {
    if (i < 0 || i > n) throw std::domain_error("so_kf_closed_form: index out of range");
    TensorValuation out(ModelId::so(n));
    for (int k = 0; k <= n; ++k) {
        int l = n + i - k;
        if (l < 0 || l > n) continue;
        out.set_entry(k, l, 0, 0, flag(n + i, i) / flag(n + i, k));
    }
    return out;
}

TensorValuation so_akf_closed_form(int n, int i) {
    if (i < 0 || i > n) throw std::domain_error("so_akf_closed_form: index out of range");
    TensorValuation out(ModelId::so(n));
    for (int k = 0; k <= i; ++k)
        out.set_entry(k, i - k, 0, 0, flag(2 * n - i, n - i) / flag(2 * n - i, n - k));
    return out;
}

bool nijenhuis_check(int n) {
    if (n < 1) throw std::domain_error("nijenhuis_check: n must be >= 1");
    ModelId model = ModelId::so(n);
    // mu~_k = pi^n k! omega_k / (pi^k n! omega_n) mu_k
    std::vector<PiScalar> scale;
    for (int k = 0; k <= n; ++k)
        scale.push_back(PiScalar::pi_power(n - k) * PiScalar(factorial(k) / factorial(n)) *
                        omega(k) / omega(n));
    for (int i = 0; i <= n; ++i) {
        TensorValuation table = kf(model, so_mu(n, i).scaled(scale[static_cast<std::size_t>(i)]));
        for (int k = 0; k <= n; ++k) {
            int l = n + i - k;
            if (l < 0 || l > n) continue;
            // coefficient on mu~_k (x) mu~_l
            PiScalar c = table.block(k, l).at(0, 0) / (scale[static_cast<std::size_t>(k)] *
                                                       scale[static_cast<std::size_t>(l)]);
            if (c != PiScalar(1)) return false;
        }
    }
    return true;
}

TensorValuation un_kf_closed_form(int n) {
    ModelId model = ModelId::un(n);
    TensorValuation out(model);
    PiScalar front = PiScalar::pi_power(-n);
    for (int k = 0; k <= 2 * n; ++k) {
        int p = std::min(k / 2, (2 * n - k) / 2);
        for (int r = 0; r <= p; ++r) {
            Rational c = factorial(n - r) / factorial(2 * n - 4 * r) *
                         double_factorial(2 * n - 2 * r + 1) /
                         double_factorial(2 * n - 4 * r + 1) / binomial(n, 2 * r);
            for (int i = 0; i < r; ++i) c = c / Rational(8);
            PiScalar coeff = front * omega(k) * omega(2 * n - k) * PiScalar(c);
            std::vector<PiScalar> left =
                basis_element(model, BasisTag::Prim, {k, r}).coords(k);
            std::vector<PiScalar> right =
                basis_element(model, BasisTag::Prim, {2 * n - k, r}).coords(2 * n - k);
            for (std::size_t a = 0; a < left.size(); ++a)
                for (std::size_t b = 0; b < right.size(); ++b)
                    out.add_entry(k, 2 * n - k, a, b, coeff * left[a] * right[b]);
        }
    }
    out.prune();
    return out;
}

std::vector<std::pair<int, Valuation>> general_hadwiger_coeffs(int n, const Valuation& phi) {
    if (phi.model() != ModelId::so(n))
        throw std::domain_error("general_hadwiger_coeffs: SO(n) valuation expected");
    std::vector<std::pair<int, Valuation>> out;
    for (int k = 0; k <= n; ++k) {
        Valuation c = so_product(phi, so_mu(n, k)).scaled(flag(n, k).inverse());
        if (!c.is_zero()) out.emplace_back(k, std::move(c));
    }
    return out;
}

KinematicTable template_additive_solver(int n) {
    ModelId model = ModelId::so(n);
    KinematicTable table{model, BasisTag::Mu, {}};
    // mu_k(B) = binom(n,k) omega_n / omega_{n-k}
    std::vector<PiScalar> ball;
    for (int k = 0; k <= n; ++k)
        ball.push_back(PiScalar(binomial(n, k)) * omega(n) / omega(n - k));
    for (int i = 0; i <= n; ++i) {
        // unknowns d_{j, i-j}, j = 0..i; matching r^j s^{i-j} in
        // mu_i((r+s)B) = sum_j d_{j,i-j} mu_j(rB) mu_{i-j}(sB)
        std::size_t m = static_cast<std::size_t>(i) + 1;
        Matrix sys(m, m), rhs(m, 1);
        for (int j = 0; j <= i; ++j) {
            std::size_t row = static_cast<std::size_t>(j);
            sys.at(row, row) = ball[static_cast<std::size_t>(j)] *
                               ball[static_cast<std::size_t>(i - j)];
            rhs.at(row, 0) = PiScalar(binomial(i, j)) * ball[static_cast<std::size_t>(i)];
        }
        Matrix sol = solve(sys, rhs);
        TensorValuation row_tensor(model);
        for (int j = 0; j <= i; ++j)
            row_tensor.set_entry(j, i - j, 0, 0, sol.at(static_cast<std::size_t>(j), 0));
        table.rows.push_back(std::move(row_tensor));
    }
    return table;
}

Valuation lefschetz_L(const Valuation& a) {
    Valuation mu1(a.model());
    if (a.model().group == Group::SO) {
        mu1.set_coord(1, 0, PiScalar(1));
    } else {
        // mu_1 = (pi/2) t in t-coordinates
        mu1.set_coord(1, 0, PiScalar::pi() / PiScalar(2));
    }
    return product(mu1, a);
}

Valuation lefschetz_Lambda(const Valuation& a) {
    return fourier(lefschetz_L(fourier(a))).scaled(PiScalar(2));
}

bool hard_lefschetz_check(const ModelId& model, int k) {
    int m = model.top_degree();
    if (k < 0 || 2 * k > m) throw std::domain_error("hard_lefschetz_check: need 2k <= m");
    std::size_t dk = static_cast<std::size_t>(graded_dim(model, k));
    std::size_t dl = static_cast<std::size_t>(graded_dim(model, m - k));
    if (dk != dl) return false;
    Valuation tpow(model);
    if (model.group == Group::SO) {
        tpow = basis_element(model, BasisTag::Ts, {m - 2 * k, 0});
    } else {
        tpow.set_coord(m - 2 * k, 0, PiScalar(1));
    }
    Matrix map(dl, dk);
    for (std::size_t i = 0; i < dk; ++i) {
        Valuation e(model);
        e.set_coord(k, i, PiScalar(1));
        std::vector<PiScalar> img = product(tpow, e).coords(m - k);
        for (std::size_t r = 0; r < dl; ++r) map.at(r, i) = img[r];
    }
    return rank(map) == dk;
}

}  // namespace kinval
