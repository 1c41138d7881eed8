#include "kinval/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kinval {

std::string group_name(Group g) {
    switch (g) {
        case Group::SO: return "SO";
        case Group::U: return "U";
        case Group::G2: return "G2";
        case Group::Spin7: return "Spin7";
    }
    throw std::domain_error("group_name: unknown group");
}

Group parse_group(const std::string& name) {
    std::string low;
    for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "so") return Group::SO;
    if (low == "u") return Group::U;
    if (low == "g2") return Group::G2;
    if (low == "spin7") return Group::Spin7;
    throw std::domain_error("parse_group: unknown group '" + name + "'");
}

ModelId ModelId::so(int n) {
    if (n < 1) throw std::domain_error("ModelId: SO(n) needs n >= 1");
    return {Group::SO, n};
}

ModelId ModelId::un(int n) {
    if (n < 1) throw std::domain_error("ModelId: U(n) needs n >= 1");
    return {Group::U, n};
}

int ModelId::top_degree() const {
    switch (group) {
        case Group::SO: return n;
        case Group::U: return 2 * n;
        case Group::G2: return 7;
        case Group::Spin7: return 8;
    }
    throw std::domain_error("ModelId: unknown group");
}

int graded_dim(const ModelId& model, int k) {
    int m = model.top_degree();
    if (k < 0 || k > m) throw std::domain_error("graded_dim: degree out of range");
    switch (model.group) {
        case Group::SO: return 1;
        case Group::U: return std::min(k / 2, (2 * model.n - k) / 2) + 1;
        case Group::G2: return (k == 3 || k == 4) ? 2 : 1;
        case Group::Spin7: return k == 4 ? 2 : 1;
    }
    throw std::domain_error("graded_dim: unknown group");
}

std::vector<std::string> canonical_basis_names(const ModelId& model, int k) {
    std::vector<std::string> names;
    auto tpow = [](int e) { return e == 1 ? std::string("t") : "t^" + std::to_string(e); };
    switch (model.group) {
        case Group::SO:
            names.push_back("mu_" + std::to_string(k));
            break;
        case Group::U:
            for (int p = 0; p < graded_dim(model, k); ++p) {
                int a = k - 2 * p, b = p;
                std::string s;
                if (a == 0 && b == 0) s = "1";
                else if (b == 0) s = tpow(a);
                else if (a == 0) s = b == 1 ? "s" : "s^" + std::to_string(b);
                else s = tpow(a) + "*" + (b == 1 ? "s" : "s^" + std::to_string(b));
                names.push_back(s);
            }
            break;
        case Group::G2:
            names.push_back(k == 0 ? "1" : tpow(k));
            if (k == 3) names.push_back("u");
            if (k == 4) names.push_back("tu");
            break;
        case Group::Spin7:
            names.push_back(k == 0 ? "1" : tpow(k));
            if (k == 4) names.push_back("v");
            break;
    }
    return names;
}

std::string basis_tag_name(BasisTag tag) {
    switch (tag) {
        case BasisTag::Mu: return "mu";
        case BasisTag::Ts: return "ts";
        case BasisTag::UBasis: return "u";
        case BasisTag::Hiv: return "hiv";
        case BasisTag::Tasaki: return "tasaki";
        case BasisTag::Prim: return "prim";
    }
    throw std::domain_error("basis_tag_name: unknown tag");
}

BasisTag parse_basis_tag(const std::string& name) {
    if (name == "mu") return BasisTag::Mu;
    if (name == "ts") return BasisTag::Ts;
    if (name == "u") return BasisTag::UBasis;
    if (name == "hiv") return BasisTag::Hiv;
    if (name == "tasaki") return BasisTag::Tasaki;
    if (name == "prim") return BasisTag::Prim;
    throw std::domain_error("parse_basis_tag: unknown basis '" + name + "'");
}

bool basis_tag_valid(const ModelId& model, BasisTag tag) {
    switch (tag) {
        case BasisTag::Mu: return model.group == Group::SO;
        case BasisTag::Ts: return true;
        case BasisTag::UBasis:
        case BasisTag::Hiv:
        case BasisTag::Tasaki:
        case BasisTag::Prim: return model.group == Group::U;
    }
    return false;
}

// ------------------------------------------------------------- Valuation

void Valuation::check_degree(int k, std::size_t index) const {
    if (index >= static_cast<std::size_t>(graded_dim(model_, k)))
        throw std::domain_error("Valuation: basis index out of range");
}

std::vector<PiScalar> Valuation::coords(int k) const {
    auto it = comps_.find(k);
    if (it != comps_.end()) return it->second;
    return std::vector<PiScalar>(static_cast<std::size_t>(graded_dim(model_, k)), PiScalar(0));
}

void Valuation::set_coord(int k, std::size_t index, const PiScalar& value) {
    check_degree(k, index);
    auto it = comps_.find(k);
    if (it == comps_.end())
        it = comps_.emplace(k, std::vector<PiScalar>(static_cast<std::size_t>(graded_dim(model_, k)),
                                                     PiScalar(0)))
                 .first;
    it->second[index] = value;
}

void Valuation::add_coord(int k, std::size_t index, const PiScalar& value) {
    check_degree(k, index);
    auto it = comps_.find(k);
    if (it == comps_.end())
        it = comps_.emplace(k, std::vector<PiScalar>(static_cast<std::size_t>(graded_dim(model_, k)),
                                                     PiScalar(0)))
                 .first;
    it->second[index] += value;
}

bool Valuation::is_zero() const {
    for (const auto& [k, v] : comps_)
        for (const auto& c : v)
            if (!c.is_zero()) return false;
    return true;
}

Valuation Valuation::component(int k) const {
    Valuation r(model_);
    auto it = comps_.find(k);
    if (it != comps_.end()) r.comps_[k] = it->second;
    r.prune();
    return r;
}

Valuation Valuation::scaled(const PiScalar& c) const {
    Valuation r(model_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : comps_) {
        auto& out = r.comps_[k];
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(x * c);
    }
    r.prune();
    return r;
}

Valuation Valuation::operator+(const Valuation& o) const { return add_scale(*this, o, PiScalar(1)); }

Valuation Valuation::operator-(const Valuation& o) const {
    return add_scale(*this, o, PiScalar(-1));
}

bool Valuation::operator==(const Valuation& o) const {
    if (model_ != o.model_) return false;
    Valuation d = *this - o;
    return d.is_zero();
}

void Valuation::prune() {
    for (auto it = comps_.begin(); it != comps_.end();) {
        bool zero = true;
        for (const auto& c : it->second)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        it = zero ? comps_.erase(it) : std::next(it);
    }
}

Valuation add_scale(const Valuation& a, const Valuation& b, const PiScalar& lambda) {
    if (a.model() != b.model()) throw std::domain_error("add_scale: model mismatch");
    Valuation r = a;
    for (const auto& [k, v] : b.components())
        for (std::size_t i = 0; i < v.size(); ++i) r.add_coord(k, i, v[i] * lambda);
    r.prune();
    return r;
}

// ------------------------------------------------------- TensorValuation

Matrix TensorValuation::block(int k, int l) const {
    auto it = blocks_.find({k, l});
    if (it != blocks_.end()) return it->second;
    return Matrix(static_cast<std::size_t>(graded_dim(model_, k)),
                  static_cast<std::size_t>(graded_dim(model_, l)));
}

void TensorValuation::add_block(int k, int l, const Matrix& m) {
    std::size_t dk = static_cast<std::size_t>(graded_dim(model_, k));
    std::size_t dl = static_cast<std::size_t>(graded_dim(model_, l));
    if (m.rows() != dk || m.cols() != dl)
        throw std::domain_error("TensorValuation: block shape mismatch");
    auto it = blocks_.find({k, l});
    if (it == blocks_.end()) blocks_.emplace(std::make_pair(k, l), m);
    else it->second = it->second + m;
}

void TensorValuation::set_entry(int k, int l, std::size_t i, std::size_t j, const PiScalar& v) {
    auto it = blocks_.find({k, l});
    if (it == blocks_.end()) {
        Matrix m(static_cast<std::size_t>(graded_dim(model_, k)),
                 static_cast<std::size_t>(graded_dim(model_, l)));
        it = blocks_.emplace(std::make_pair(k, l), std::move(m)).first;
    }
    it->second.at(i, j) = v;
}

void TensorValuation::add_entry(int k, int l, std::size_t i, std::size_t j, const PiScalar& v) {
    auto it = blocks_.find({k, l});
    if (it == blocks_.end()) {
        Matrix m(static_cast<std::size_t>(graded_dim(model_, k)),
                 static_cast<std::size_t>(graded_dim(model_, l)));
        it = blocks_.emplace(std::make_pair(k, l), std::move(m)).first;
    }
    it->second.at(i, j) += v;
}

bool TensorValuation::operator==(const TensorValuation& o) const {
    if (model_ != o.model_) return false;
    auto keys = blocks_;
    for (const auto& [kl, m] : o.blocks_)
        if (keys.find(kl) == keys.end()) keys.emplace(kl, Matrix(m.rows(), m.cols()));
    for (const auto& [kl, m] : keys) {
        (void)m;
        if (block(kl.first, kl.second) != o.block(kl.first, kl.second)) return false;
    }
    return true;
}

TensorValuation TensorValuation::swapped() const {
    TensorValuation r(model_);
    for (const auto& [kl, m] : blocks_) r.add_block(kl.second, kl.first, m.transpose());
    return r;
}

void TensorValuation::prune() {
    for (auto it = blocks_.begin(); it != blocks_.end();)
        it = it->second.is_zero() ? blocks_.erase(it) : std::next(it);
}

}  // namespace kinval
