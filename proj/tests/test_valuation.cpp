#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kinval/valuation.hpp"

using namespace kinval;

TEST_CASE("model identities") {
    CHECK(ModelId::so(3).top_degree() == 3);
    CHECK(ModelId::un(3).top_degree() == 6);
    CHECK(ModelId::g2().top_degree() == 7);
    CHECK(ModelId::spin7().top_degree() == 8);
    CHECK_THROWS_AS(ModelId::so(0), std::domain_error);
    CHECK(parse_group("so") == Group::SO);
    CHECK(parse_group("Spin7") == Group::Spin7);
    CHECK_THROWS_AS(parse_group("spin9"), std::domain_error);
}

TEST_CASE("graded dimensions") {
    for (int k = 0; k <= 5; ++k) CHECK(graded_dim(ModelId::so(5), k) == 1);
    std::vector<int> u3;
    for (int k = 0; k <= 6; ++k) u3.push_back(graded_dim(ModelId::un(3), k));
    CHECK(u3 == std::vector<int>{1, 1, 2, 2, 2, 1, 1});
    CHECK(graded_dim(ModelId::g2(), 3) == 2);
    CHECK(graded_dim(ModelId::spin7(), 4) == 2);
    CHECK_THROWS_AS(graded_dim(ModelId::so(2), 3), std::domain_error);
}

TEST_CASE("canonical names") {
    CHECK(canonical_basis_names(ModelId::so(4), 2) == std::vector<std::string>{"mu_2"});
    CHECK(canonical_basis_names(ModelId::un(2), 4) == std::vector<std::string>{"t^4"});
    CHECK(canonical_basis_names(ModelId::un(3), 3) ==
          std::vector<std::string>{"t^3", "t*s"});
    CHECK(canonical_basis_names(ModelId::g2(), 4) == std::vector<std::string>{"t^4", "tu"});
    CHECK(canonical_basis_names(ModelId::spin7(), 4) == std::vector<std::string>{"t^4", "v"});
}

TEST_CASE("valuation storage") {
    Valuation v(ModelId::un(2));
    CHECK(v.is_zero());
    v.set_coord(2, 1, PiScalar::pi());
    CHECK_FALSE(v.is_zero());
    CHECK(v.coords(2)[1] == PiScalar::pi());
    CHECK(v.coords(3)[0] == PiScalar(0));
    CHECK(v.component(2) == v);
    CHECK(v.component(1).is_zero());
    CHECK_THROWS_AS(v.set_coord(4, 1, PiScalar(1)), std::domain_error);  // dim 1 at top
    Valuation w = v.scaled(PiScalar(2));
    CHECK(w - v == v);
}

TEST_CASE("tensor blocks") {
    TensorValuation t(ModelId::un(2));
    t.set_entry(2, 2, 0, 1, PiScalar::pi());
    CHECK(t.block(2, 2).at(0, 1) == PiScalar::pi());
    CHECK(t.block(1, 1).is_zero());
    TensorValuation s = t.swapped();
    CHECK(s.block(2, 2).at(1, 0) == PiScalar::pi());
    CHECK(s.block(2, 2).at(0, 1) == PiScalar(0));
    Matrix bad(1, 1);
    CHECK_THROWS_AS(t.add_block(2, 2, bad), std::domain_error);
}
