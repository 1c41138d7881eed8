#pragma once

#include <string>

#include <json.hpp>

#include "kinval/bases.hpp"
#include "kinval/cones.hpp"

namespace kinval {

/// {"group":"U","n":3,"basis":"hiv","terms":[{"k":4,"q":1,"coeff":"2/3"}]}
/// Term index keys per basis: SO uses "k" only; ts/u carry "p", hiv/tasaki
/// "q", prim "r"; G2/Spin7 canonical monomials carry "name".
nlohmann::json valuation_to_json(const Valuation& v, BasisTag basis);
std::pair<Valuation, BasisTag> valuation_from_json(const nlohmann::json& j);

/// {"group":...,"n":...,"basis":...,"blocks":[{"k":1,"l":1,"matrix":[["2/pi"]]}]}
/// Blocks are converted into the requested basis coordinates.
nlohmann::json tensor_to_json(const TensorValuation& t, BasisTag basis);

nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json verdict_to_json(const ConeVerdict& verdict);

std::string pi_scalar_to_latex(const PiScalar& c);
std::string valuation_to_latex(const Valuation& v, BasisTag basis);
std::string tensor_to_latex(const TensorValuation& t, BasisTag basis);

}  // namespace kinval
