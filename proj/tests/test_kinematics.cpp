#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kinval/kinematics.hpp"
#include "kinval/so_model.hpp"
#include "kinval/un_model.hpp"
#include "testutil.hpp"

using namespace kinval;
using testutil::random_rational;

namespace {

Valuation random_valuation(std::mt19937_64& rng, const ModelId& model) {
    Valuation v(model);
    for (int k = 0; k <= model.top_degree(); ++k)
        for (int i = 0; i < graded_dim(model, k); ++i)
            v.set_coord(k, static_cast<std::size_t>(i), PiScalar(random_rational(rng)));
    v.prune();
    return v;
}

}  // namespace

TEST_CASE("pairing matrix examples") {
    // SO(n): <mu_k, mu_{n-k}> = flag(n,k)
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            Matrix p = pairing_matrix(ModelId::so(n), k);
            CHECK(p.at(0, 0) == flag(n, k));
        }
    // G2 degree 3: [[1,0],[0,-4]] in t^7 units; vol units scale by 7! w_7 / pi^7
    Matrix g = pairing_matrix(ModelId::g2(), 3);
    PiScalar unit = PiScalar(factorial(7)) * omega(7) * PiScalar::pi_power(-7);
    CHECK(g.at(0, 0) == unit);
    CHECK(g.at(0, 1) == PiScalar(0));
    CHECK(g.at(1, 0) == PiScalar(0));
    CHECK(g.at(1, 1) == PiScalar(-4) * unit);
    // degree 0 row is the vol-coefficient of the top-degree basis
    Matrix row = pairing_matrix(ModelId::un(2), 0);
    CHECK(row.rows() == 1);
    CHECK_FALSE(row.at(0, 0).is_zero());
}

TEST_CASE("principal kinematic formula for SO(2)") {
    TensorValuation k = kf_chi(ModelId::so(2));
    CHECK(k.block(0, 2).at(0, 0) == PiScalar(1));
    CHECK(k.block(1, 1).at(0, 0) == PiScalar(2) / PiScalar::pi());
    CHECK(k.block(2, 0).at(0, 0) == PiScalar(1));
    // without renormalization the middle coefficient is not 1
    CHECK(k.block(1, 1).at(0, 0) != PiScalar(1));
}

TEST_CASE("kf_chi coefficients are inverse flag coefficients for SO(n)") {
    for (int n = 1; n <= 6; ++n) {
        TensorValuation k = kf_chi(ModelId::so(n));
        for (int j = 0; j <= n; ++j)
            CHECK(k.block(j, n - j).at(0, 0) == flag(n, j).inverse());
    }
}

TEST_CASE("U(1) principal formula degenerates to SO(2)") {
    TensorValuation k = kf_chi(ModelId::un(1));
    // chi (x) vol + (2/pi) mu_1 (x) mu_1 + vol (x) chi in t-coordinates:
    // vol = (pi/2) t^2 and mu_1 = (pi/2) t, so every block is [pi/2]
    for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{2, 0}})
        CHECK(k.block(a, b).at(0, 0) == PiScalar::pi() / PiScalar(2));
}

TEST_CASE("FTAIG inverse identity in all four models") {
    for (const ModelId& model :
         {ModelId::so(3), ModelId::un(2), ModelId::un(3), ModelId::g2(), ModelId::spin7()}) {
        TensorValuation k = kf_chi(model);
        int m = model.top_degree();
        for (int deg = 0; deg <= m; ++deg) {
            Matrix block = k.block(deg, m - deg);
            Matrix p = pairing_matrix(model, deg);
            CHECK(block * p.transpose() == Matrix::identity(block.rows()));
        }
    }
}

TEST_CASE("kf examples") {
    ModelId so2 = ModelId::so(2);
    TensorValuation k = kf(so2, so_mu(2, 1));
    CHECK(k.block(1, 2).at(0, 0) == PiScalar(1));
    CHECK(k.block(2, 1).at(0, 0) == PiScalar(1));
    CHECK(k.block(1, 1).is_zero());

    CHECK(kf(so2, chi(so2)) == kf_chi(so2));

    for (int n : {2, 3, 4}) {
        TensorValuation kv = kf(ModelId::so(n), vol(ModelId::so(n)));
        CHECK(kv.blocks().size() == 1);
        CHECK(kv.block(n, n).at(0, 0) == PiScalar(1));
    }
}

TEST_CASE("closed form SO kinematic tables") {
    TensorValuation c0 = so_kf_closed_form(2, 0);
    CHECK(c0.block(0, 2).at(0, 0) == PiScalar(1));
    CHECK(c0.block(1, 1).at(0, 0) == PiScalar(2) / PiScalar::pi());
    CHECK(c0.block(2, 0).at(0, 0) == PiScalar(1));
    TensorValuation c1 = so_kf_closed_form(2, 1);
    CHECK(c1.block(1, 2).at(0, 0) == PiScalar(1));
    CHECK(c1.block(2, 1).at(0, 0) == PiScalar(1));

    // engine equals closed form; coefficients symmetric
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
            TensorValuation engine = kf(ModelId::so(n), so_mu(n, i));
            TensorValuation closed = so_kf_closed_form(n, i);
            CHECK(engine == closed);
            for (const auto& [kl, blk] : closed.blocks())
                CHECK(blk.at(0, 0) == closed.block(kl.second, kl.first).at(0, 0));
        }
}

TEST_CASE("nijenhuis renormalization") {
    CHECK(nijenhuis_check(2));
    CHECK(nijenhuis_check(5));
}

TEST_CASE("additive formulas") {
    // akf(SO(2), mu_1) = mu_1 (x) mu_0 + mu_0 (x) mu_1
    TensorValuation a = akf(ModelId::so(2), so_mu(2, 1));
    CHECK(a.block(1, 0).at(0, 0) == PiScalar(1));
    CHECK(a.block(0, 1).at(0, 0) == PiScalar(1));

    // akf(SO(n), vol) has inverse flag coefficients
    for (int n : {2, 3}) {
        TensorValuation av = akf(ModelId::so(n), vol(ModelId::so(n)));
        for (int k = 0; k <= n; ++k)
            CHECK(av.block(k, n - k).at(0, 0) == flag(n, k).inverse());
    }

    // akf(chi) = chi (x) chi in every model
    for (const ModelId& model :
         {ModelId::so(3), ModelId::un(2), ModelId::g2(), ModelId::spin7()}) {
        TensorValuation ac = akf(model, chi(model));
        CHECK(ac.blocks().size() == 1);
        CHECK(ac.block(0, 0).at(0, 0) == PiScalar(1));
    }

    // engine akf equals the closed form for SO(n)
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(akf(ModelId::so(n), so_mu(n, i)) == so_akf_closed_form(n, i));
}

TEST_CASE("template solver matches the closed form") {
    for (int n = 1; n <= 6; ++n) {
        KinematicTable table = template_additive_solver(n);
        REQUIRE(table.rows.size() == static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            CHECK(table.rows[static_cast<std::size_t>(i)] == so_akf_closed_form(n, i));
    }
    // spot values: n=2, i=1 -> d_{0,1} = d_{1,0} = 1; i=0 -> d_{0,0} = 1
    KinematicTable t2 = template_additive_solver(2);
    CHECK(t2.rows[1].block(0, 1).at(0, 0) == PiScalar(1));
    CHECK(t2.rows[1].block(1, 0).at(0, 0) == PiScalar(1));
    CHECK(t2.rows[0].block(0, 0).at(0, 0) == PiScalar(1));
}

TEST_CASE("primitive-basis closed form equals the engine") {
    // independent routes: primitive-basis closed form vs pairing inversion
    for (int n : {1, 2, 3}) CHECK(un_kf_closed_form(n) == kf_chi(ModelId::un(n)));
    // hand value at n = 1
    TensorValuation k1 = un_kf_closed_form(1);
    CHECK(k1.block(1, 1).at(0, 0) == PiScalar::pi() / PiScalar(2));
}

TEST_CASE("general Hadwiger coefficients") {
    ModelId so2 = ModelId::so(2);
    auto rows = general_hadwiger_coeffs(2, chi(so2));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].second == chi(so2));
    CHECK(rows[1].second == so_mu(2, 1).scaled(PiScalar(2) / PiScalar::pi()));
    CHECK(rows[2].second == vol(so2));

    auto vol_rows = general_hadwiger_coeffs(2, vol(so2));
    REQUIRE(vol_rows.size() == 1);
    CHECK(vol_rows[0].first == 0);
    CHECK(vol_rows[0].second == vol(so2));

    // chi row reproduces the principal formula coefficients
    TensorValuation k = kf_chi(so2);
    for (const auto& [kk, c] : rows)
        CHECK(c == so_mu(2, kk).scaled(k.block(kk, 2 - kk).at(0, 0)));
}

TEST_CASE("coassociativity via the Fubini identity for SO(n)") {
    for (int n = 1; n <= 4; ++n) {
        auto c = [&](int i, int k, int l) -> PiScalar {
            if (k < 0 || k > n || l < 0 || l > n || k + l != n + i) return PiScalar(0);
            return flag(n + i, i) / flag(n + i, k);
        };
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l)
                    for (int m = 0; m <= n; ++m) {
                        PiScalar lhs(0), rhs(0);
                        for (int r = 0; r <= n; ++r) {
                            lhs += c(i, r, m) * c(r, k, l);
                            rhs += c(i, r, l) * c(r, k, m);
                        }
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("cocommutativity of kf and akf blocks") {
    std::mt19937_64 rng(61);
    for (const ModelId& model : {ModelId::so(3), ModelId::un(2), ModelId::g2()}) {
        Valuation phi = random_valuation(rng, model);
        for (const TensorValuation& t : {kf(model, phi), akf(model, phi)})
            for (const auto& [kl, blk] : t.blocks())
                CHECK(blk == t.block(kl.second, kl.first).transpose());
    }
}

TEST_CASE("product-coproduct identity on random U(2) pairs") {
    std::mt19937_64 rng(67);
    ModelId u2 = ModelId::un(2);
    for (int trial = 0; trial < 10; ++trial) {
        Valuation phi = random_valuation(rng, u2);
        Valuation psi = random_valuation(rng, u2);
        CHECK(kf(u2, un_product(phi, psi)) == tensor_left_product(phi, kf(u2, psi)));
    }
}

TEST_CASE("Lefschetz operators") {
    // L mu_0 = mu_1
    CHECK(lefschetz_L(chi(ModelId::so(4))) == so_mu(4, 1));
    // Lambda mu_1 = pi mu_0 in SO(2)
    CHECK(lefschetz_Lambda(so_mu(2, 1)) == chi(ModelId::so(2)).scaled(PiScalar::pi()));
    // L mu_k = (k+1) omega_{k+1} / (2 omega_k) mu_{k+1}
    for (int n : {3, 5})
        for (int k = 0; k < n; ++k) {
            PiScalar c = PiScalar(k + 1) * omega(k + 1) / (PiScalar(2) * omega(k));
            CHECK(lefschetz_L(so_mu(n, k)) == so_mu(n, k + 1).scaled(c));
        }
    // Lambda mu_k = (n-k+1) omega_{n-k+1} / omega_{n-k} mu_{k-1}
    for (int n : {3, 4})
        for (int k = 1; k <= n; ++k) {
            PiScalar c = PiScalar(n - k + 1) * omega(n - k + 1) / omega(n - k);
            CHECK(lefschetz_Lambda(so_mu(n, k)) == so_mu(n, k - 1).scaled(c));
        }
    // the commutator acts degree-diagonally on the mu-basis
    for (int k = 0; k <= 4; ++k) {
        Valuation mu = so_mu(4, k);
        Valuation comm = lefschetz_Lambda(lefschetz_L(mu)) - lefschetz_L(lefschetz_Lambda(mu));
        for (const auto& [deg, coords] : comm.components())
            if (!coords[0].is_zero()) CHECK(deg == k);
    }
    // L on U(n) is the product with mu_1 = (pi/2) t
    Valuation a = un_mu(2, 2, 1);
    Valuation mu1_u2 =
        basis_element(ModelId::un(2), BasisTag::Ts, {1, 0}).scaled(PiScalar::pi() / PiScalar(2));
    CHECK(lefschetz_L(a) == un_product(mu1_u2, a));
}

TEST_CASE("hard Lefschetz rank checks") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; 2 * k <= n; ++k) CHECK(hard_lefschetz_check(ModelId::so(n), k));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) CHECK(hard_lefschetz_check(ModelId::un(n), k));
    for (int k = 0; 2 * k <= 7; ++k) CHECK(hard_lefschetz_check(ModelId::g2(), k));
    for (int k = 0; 2 * k <= 8; ++k) CHECK(hard_lefschetz_check(ModelId::spin7(), k));
    CHECK_THROWS_AS(hard_lefschetz_check(ModelId::so(3), 2), std::domain_error);
}
