#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kinval/bases.hpp"
#include "testutil.hpp"

using namespace kinval;
using testutil::random_rational;

TEST_CASE("construct: SO intrinsic volume in t-coordinates") {
    ModelId so3 = ModelId::so(3);
    Valuation mu1 = basis_element(so3, BasisTag::Mu, {1, 0});
    // t = 2/pi mu_1, so mu_1 = (pi/2) t
    auto ts = convert_basis(mu1, BasisTag::Ts);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].first == BasisIndex{1, 0});
    CHECK(ts[0].second == PiScalar::pi() / PiScalar(2));
}

TEST_CASE("construct: Tasaki element in ts coordinates") {
    Valuation tau21 = basis_element(ModelId::un(2), BasisTag::Tasaki, {2, 1});
    // tau_{2,1} = 2 pi s - (pi/2) t^2
    std::vector<PiScalar> coords = tau21.coords(2);
    REQUIRE(coords.size() == 2);
    CHECK(coords[0] == -(PiScalar::pi() / PiScalar(2)));  // t^2
    CHECK(coords[1] == PiScalar(2) * PiScalar::pi());     // s
}

TEST_CASE("degree zero unit is chi in every model and basis") {
    for (const ModelId& model :
         {ModelId::so(4), ModelId::un(3), ModelId::g2(), ModelId::spin7()}) {
        BasisTag tag = model.group == Group::SO ? BasisTag::Mu : BasisTag::Ts;
        CHECK(basis_element(model, tag, {0, 0}) == chi(model));
    }
    CHECK(basis_element(ModelId::un(2), BasisTag::Hiv, {0, 0}) == chi(ModelId::un(2)));
}

TEST_CASE("hermitian intrinsic volumes vs Tasaki") {
    // mu_{2,1} = tau_{2,1}
    for (int n : {2, 3, 4}) {
        ModelId model = ModelId::un(n);
        CHECK(basis_element(model, BasisTag::Hiv, {2, 1}) ==
              basis_element(model, BasisTag::Tasaki, {2, 1}));
    }
    // mu_{2,0} = tau_{2,0} - tau_{2,1}
    ModelId u3 = ModelId::un(3);
    Valuation lhs = basis_element(u3, BasisTag::Hiv, {2, 0});
    Valuation rhs = basis_element(u3, BasisTag::Tasaki, {2, 0}) -
                    basis_element(u3, BasisTag::Tasaki, {2, 1});
    CHECK(lhs == rhs);
}

TEST_CASE("primitive basis at r = 0") {
    // pi_{k,0} = k! tau_{k,0}
    for (int n : {2, 3}) {
        ModelId model = ModelId::un(n);
        for (int k = 0; k <= 2 * n; ++k) {
            auto terms = convert_basis(basis_element(model, BasisTag::Prim, {k, 0}),
                                       BasisTag::Tasaki);
            REQUIRE(terms.size() == 1);
            CHECK(terms[0].first == BasisIndex{k, 0});
            CHECK(terms[0].second == PiScalar(factorial(k)));
        }
    }
}

TEST_CASE("primitive elements in U(1)") {
    ModelId u1 = ModelId::un(1);
    // pi_{1,0} = mu_1 = (pi/2) t and pi_{2,0} = 2 vol
    Valuation mu1 = basis_element(u1, BasisTag::Ts, {1, 0}).scaled(PiScalar::pi() / PiScalar(2));
    CHECK(basis_element(u1, BasisTag::Prim, {1, 0}) == mu1);
    CHECK(basis_element(u1, BasisTag::Prim, {2, 0}) == vol(u1).scaled(PiScalar(2)));
    CHECK(basis_element(u1, BasisTag::Prim, {0, 0}) == chi(u1));
}

TEST_CASE("top degree identities") {
    // in U(1): mu_{2,1} = tau_{2,0} = vol
    ModelId u1 = ModelId::un(1);
    CHECK(basis_element(u1, BasisTag::Hiv, {2, 1}) == vol(u1));
    CHECK(basis_element(u1, BasisTag::Tasaki, {2, 0}) == vol(u1));
    // mu_{2n,n} = vol in general
    for (int n : {2, 3}) {
        ModelId model = ModelId::un(n);
        CHECK(basis_element(model, BasisTag::Hiv, {2 * n, n}) == vol(model));
    }
}

TEST_CASE("index validity") {
    ModelId u3 = ModelId::un(3);
    CHECK(basis_index_valid(u3, BasisTag::Hiv, {4, 1}));
    CHECK(basis_index_valid(u3, BasisTag::Hiv, {4, 2}));
    CHECK_FALSE(basis_index_valid(u3, BasisTag::Hiv, {4, 0}));  // q >= k - n
    CHECK_FALSE(basis_index_valid(u3, BasisTag::Hiv, {4, 3}));
    CHECK(basis_index_valid(u3, BasisTag::Tasaki, {4, 1}));
    CHECK_FALSE(basis_index_valid(u3, BasisTag::Tasaki, {5, 1}));  // min(5,1)/2 = 0
    CHECK_FALSE(basis_index_valid(u3, BasisTag::Mu, {1, 0}));      // Mu is SO-only
    CHECK_THROWS_AS(construct(u3, BasisTag::Hiv, {{{4, 0}, PiScalar(1)}}), std::domain_error);

    // HIV index count matches the dimension formula
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 2 * n; ++k) {
            CHECK(basis_indices(ModelId::un(n), BasisTag::Hiv, k).size() ==
                  static_cast<std::size_t>(un_dim(n, k)));
            CHECK(basis_indices(ModelId::un(n), BasisTag::Tasaki, k).size() ==
                  static_cast<std::size_t>(un_dim(n, k)));
        }
}

TEST_CASE("conversion matrices invertible for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        ModelId model = ModelId::un(n);
        for (int k = 0; k <= 2 * n; ++k)
            for (BasisTag tag : {BasisTag::Ts, BasisTag::UBasis, BasisTag::Hiv,
                                 BasisTag::Tasaki, BasisTag::Prim}) {
                Matrix m = basis_to_canonical(model, tag, k);
                CHECK(rank(m) == m.rows());
                CHECK(canonical_to_basis(model, tag, k) * m ==
                      Matrix::identity(m.rows()));
            }
    }
}

TEST_CASE("construct and convert_basis are inverse on random inputs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        ModelId model = ModelId::un(n);
        BasisTag tag = std::vector<BasisTag>{BasisTag::Ts, BasisTag::UBasis, BasisTag::Hiv,
                                             BasisTag::Tasaki,
                                             BasisTag::Prim}[rng() % 5];
        std::vector<BasisTerm> terms;
        for (int k = 0; k <= 2 * n; ++k)
            for (const BasisIndex& idx : basis_indices(model, tag, k)) {
                Rational c = random_rational(rng, 5);
                if (!c.is_zero()) terms.push_back({idx, PiScalar(c)});
            }
        Valuation v = construct(model, tag, terms);
        auto back = convert_basis(v, tag);
        CHECK(back.size() == terms.size());
        CHECK(construct(model, tag, back) == v);
    }
}

TEST_CASE("add_scale") {
    ModelId so2 = ModelId::so(2);
    Valuation mu1 = basis_element(so2, BasisTag::Mu, {1, 0});
    CHECK(add_scale(mu1, mu1, PiScalar(-1)).is_zero());

    Valuation cv = add_scale(chi(so2), vol(so2), PiScalar(1));
    CHECK_FALSE(cv.coords(0)[0].is_zero());
    CHECK_FALSE(cv.coords(2)[0].is_zero());
    CHECK(cv.coords(1)[0].is_zero());

    ModelId u2 = ModelId::un(2);
    std::vector<BasisTerm> both = {{{2, 0}, PiScalar(3)}, {{4, 0}, PiScalar::pi()}};
    Valuation combined = construct(u2, BasisTag::Tasaki, both);
    Valuation split = add_scale(construct(u2, BasisTag::Tasaki, {both[0]}),
                                construct(u2, BasisTag::Tasaki, {both[1]}), PiScalar(1));
    CHECK(combined == split);

    CHECK_THROWS_AS(add_scale(mu1, chi(u2), PiScalar(1)), std::domain_error);
}

TEST_CASE("high-degree hermitian basis is restriction-stable") {
    // the degree-k basis of U(n) with k > n must be the image of the
    // k <= N realization of a larger model under the quotient map
    // U(N) -> U(n) (the identity on ts-polynomials); indices with
    // k - q > n must die
    for (auto [n, k, big] : {std::tuple{6, 8, 8}, std::tuple{4, 6, 6}, std::tuple{3, 4, 4}}) {
        ModelId small = ModelId::un(n);
        ModelId large = ModelId::un(big);
        for (const BasisIndex& idx : basis_indices(large, BasisTag::Hiv, k)) {
            Valuation down = un_normal_form(ts_lift(basis_element(large, BasisTag::Hiv, idx)), n);
            if (idx.sub >= k - n) {
                CHECK(down == basis_element(small, BasisTag::Hiv, idx));
            } else {
                CHECK(down.is_zero());
            }
        }
        for (const BasisIndex& idx : basis_indices(large, BasisTag::Tasaki, k)) {
            Valuation down =
                un_normal_form(ts_lift(basis_element(large, BasisTag::Tasaki, idx)), n);
            if (basis_index_valid(small, BasisTag::Tasaki, idx))
                CHECK(down == basis_element(small, BasisTag::Tasaki, idx));
        }
    }
}

TEST_CASE("exceptional monomial names") {
    ModelId g2 = ModelId::g2();
    CHECK(monomial_index(g2, "u") == BasisIndex{3, 1});
    CHECK(monomial_index(g2, "tu") == BasisIndex{4, 1});
    CHECK(monomial_index(g2, "t^3") == BasisIndex{3, 0});
    CHECK(monomial_index(g2, "t") == BasisIndex{1, 0});
    CHECK(monomial_name(g2, {4, 1}) == "tu");
    ModelId spin7 = ModelId::spin7();
    CHECK(monomial_index(spin7, "v") == BasisIndex{4, 1});
    CHECK(monomial_name(spin7, {8, 0}) == "t^8");
    CHECK_THROWS_AS(monomial_index(spin7, "u"), std::domain_error);
}
