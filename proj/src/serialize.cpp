#include "kinval/serialize.hpp"

#include <stdexcept>

namespace kinval {

namespace {

const char* index_key(BasisTag tag) {
    switch (tag) {
        case BasisTag::Ts:
        case BasisTag::UBasis: return "p";
        case BasisTag::Hiv:
        case BasisTag::Tasaki: return "q";
        case BasisTag::Prim: return "r";
        case BasisTag::Mu: return "";
    }
    return "";
}

bool uses_monomial_names(const ModelId& model) {
    return model.group == Group::G2 || model.group == Group::Spin7;
}

nlohmann::json model_header(const ModelId& model, BasisTag basis) {
    nlohmann::json j;
    j["group"] = group_name(model.group);
    if (model.group == Group::SO || model.group == Group::U) j["n"] = model.n;
    j["basis"] = basis_tag_name(basis);
    return j;
}

ModelId model_from_json(const nlohmann::json& j) {
    Group g = parse_group(j.at("group").get<std::string>());
    switch (g) {
        case Group::SO: return ModelId::so(j.at("n").get<int>());
        case Group::U: return ModelId::un(j.at("n").get<int>());
        case Group::G2: return ModelId::g2();
        case Group::Spin7: return ModelId::spin7();
    }
    throw std::domain_error("model_from_json: unknown group");
}

}  // namespace

nlohmann::json valuation_to_json(const Valuation& v, BasisTag basis) {
    const ModelId& model = v.model();
    nlohmann::json j = model_header(model, basis);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [index, coeff] : convert_basis(v, basis)) {
        nlohmann::json term;
        if (uses_monomial_names(model)) {
            term["name"] = monomial_name(model, index);
        } else {
            term["k"] = index.k;
            const char* key = index_key(basis);
            if (*key != '\0') term[key] = index.sub;
        }
        term["coeff"] = coeff.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::pair<Valuation, BasisTag> valuation_from_json(const nlohmann::json& j) {
    ModelId model = model_from_json(j);
    BasisTag basis = parse_basis_tag(j.at("basis").get<std::string>());
    std::vector<BasisTerm> terms;
    for (const auto& term : j.at("terms")) {
        BasisIndex index;
        if (uses_monomial_names(model)) {
            index = monomial_index(model, term.at("name").get<std::string>());
        } else {
            index.k = term.at("k").get<int>();
            const char* key = index_key(basis);
            if (*key != '\0') index.sub = term.at(key).get<int>();
        }
        terms.push_back({index, PiScalar::parse(term.at("coeff").get<std::string>())});
    }
    return {construct(model, basis, terms), basis};
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json tensor_to_json(const TensorValuation& t, BasisTag basis) {
    const ModelId& model = t.model();
    nlohmann::json j = model_header(model, basis);
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [kl, block] : t.blocks()) {
        auto [k, l] = kl;
        Matrix converted = canonical_to_basis(model, basis, k) * block *
                           canonical_to_basis(model, basis, l).transpose();
        nlohmann::json b;
        b["k"] = k;
        b["l"] = l;
        b["matrix"] = matrix_to_json(converted);
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

nlohmann::json verdict_to_json(const ConeVerdict& verdict) {
    nlohmann::json j;
    j["member"] = verdict.member;
    nlohmann::json violated = nlohmann::json::array();
    for (const ConeViolation& v : verdict.violated) violated.push_back(v.id());
    j["violated"] = std::move(violated);
    return j;
}

// ------------------------------------------------------------------ LaTeX

namespace {

std::string rational_latex(const Rational& r, bool leading) {
    std::string sign = r.sign() < 0 ? "-" : (leading ? "" : "+");
    Rational a = r.sign() < 0 ? -r : r;
    if (a.is_integer()) return sign + a.numerator().get_str();
    return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string poly_latex(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string pi_part = k == 0 ? "" : (k == 1 ? "\\pi" : "\\pi^{" + std::to_string(k) + "}");
        bool unit = (c == Rational(1) || c == Rational(-1)) && !pi_part.empty();
        std::string coeff;
        if (unit) {
            coeff = c.sign() < 0 ? "-" : (out.empty() ? "" : "+");
        } else {
            coeff = rational_latex(c, out.empty());
        }
        out += coeff + pi_part;
    }
    return out;
}

}  // namespace

std::string pi_scalar_to_latex(const PiScalar& c) {
    if (c.den().degree() == 0)
        return poly_latex(c.num().scaled(c.den().coeff(0).reciprocal()));
    return "\\frac{" + poly_latex(c.num()) + "}{" + poly_latex(c.den()) + "}";
}

namespace {

std::string basis_symbol_latex(const ModelId& model, BasisTag basis, const BasisIndex& index) {
    auto sub2 = [](const std::string& head, int a, int b) {
        return head + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    };
    if (uses_monomial_names(model)) {
        std::string name = monomial_name(model, index);
        std::string out;
        for (char ch : name)  // t^4 -> t^{4}, tu/u/v pass through
            if (ch == '^') out += "^{";
            else out += ch;
        if (out.find('{') != std::string::npos) out += "}";
        return out == "1" ? "\\chi" : out;
    }
    switch (basis) {
        case BasisTag::Mu: return "\\mu_{" + std::to_string(index.k) + "}";
        case BasisTag::UBasis: return sub2("U", index.k, index.sub);
        case BasisTag::Hiv: return sub2("\\mu", index.k, index.sub);
        case BasisTag::Tasaki: return sub2("\\tau", index.k, index.sub);
        case BasisTag::Prim: return sub2("\\pi", index.k, index.sub);
        case BasisTag::Ts: {
            if (model.group == Group::SO)
                return index.k == 0 ? "\\chi"
                                    : (index.k == 1 ? "t" : "t^{" + std::to_string(index.k) + "}");
            int a = index.k - 2 * index.sub, b = index.sub;
            if (a == 0 && b == 0) return "\\chi";
            std::string out;
            if (a == 1) out += "t";
            else if (a > 1) out += "t^{" + std::to_string(a) + "}";
            if (b == 1) out += "s";
            else if (b > 1) out += "s^{" + std::to_string(b) + "}";
            return out;
        }
    }
    throw std::domain_error("basis_symbol_latex: unknown basis");
}

std::string wrap_coeff(const PiScalar& c, bool leading) {
    if (c == PiScalar(1)) return leading ? "" : "+";
    if (c == PiScalar(-1)) return "-";
    std::string s = pi_scalar_to_latex(c);
    bool needs_parens = s.find('+') != std::string::npos ||
                        (s.rfind('-') != std::string::npos && s.rfind('-') > 0);
    if (needs_parens) s = "\\left(" + s + "\\right)";
    if (!leading && !s.empty() && s[0] != '-') s = "+" + s;
    return s;
}

}  // namespace

std::string valuation_to_latex(const Valuation& v, BasisTag basis) {
    auto terms = convert_basis(v, basis);
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [index, coeff] : terms) {
        out += wrap_coeff(coeff, out.empty());
        out += basis_symbol_latex(v.model(), basis, index);
    }
    return out;
}

std::string tensor_to_latex(const TensorValuation& t, BasisTag basis) {
    const ModelId& model = t.model();
    std::string out;
    for (const auto& [kl, block] : t.blocks()) {
        auto [k, l] = kl;
        Matrix converted = canonical_to_basis(model, basis, k) * block *
                           canonical_to_basis(model, basis, l).transpose();
        std::vector<BasisIndex> rows = basis_indices(model, basis, k);
        std::vector<BasisIndex> cols = basis_indices(model, basis, l);
        for (std::size_t i = 0; i < converted.rows(); ++i)
            for (std::size_t j = 0; j < converted.cols(); ++j) {
                const PiScalar& c = converted.at(i, j);
                if (c.is_zero()) continue;
                out += wrap_coeff(c, out.empty());
                out += basis_symbol_latex(model, basis, rows[i]) + " \\otimes " +
                       basis_symbol_latex(model, basis, cols[j]);
            }
    }
    return out.empty() ? "0" : out;
}

}  // namespace kinval
