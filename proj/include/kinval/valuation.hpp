#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kinval/matrix.hpp"
#include "kinval/qpi.hpp"

namespace kinval {

enum class Group { SO, U, G2, Spin7 };

std::string group_name(Group g);
Group parse_group(const std::string& name);

/// Identifies one invariant algebra: group plus its free dimension
/// parameter (SO: ambient n; U: complex n, ambient 2n; G2 and Spin7 are
/// fixed at ambient 7 and 8 and carry no parameter).
struct ModelId {
    Group group;
    int n = 0;

    static ModelId so(int n);
    static ModelId un(int n);
    static ModelId g2() { return {Group::G2, 7}; }
    static ModelId spin7() { return {Group::Spin7, 8}; }

    int top_degree() const;

    bool operator==(const ModelId& o) const { return group == o.group && n == o.n; }
    bool operator!=(const ModelId& o) const { return !(*this == o); }
    bool operator<(const ModelId& o) const {
        return group != o.group ? group < o.group : n < o.n;
    }
};

/// Dimension of the degree-k graded piece in the model's canonical basis.
int graded_dim(const ModelId& model, int k);

/// Names of the canonical basis elements at degree k.
/// SO: "mu_k". U: "t^a*s^b" monomials, s-exponent ascending.
/// G2: t-powers plus "u" (deg 3), "tu" (deg 4). Spin7: t-powers plus "v" (deg 4).
std::vector<std::string> canonical_basis_names(const ModelId& model, int k);

enum class BasisTag { Mu, Ts, UBasis, Hiv, Tasaki, Prim };

std::string basis_tag_name(BasisTag tag);
BasisTag parse_basis_tag(const std::string& name);

bool basis_tag_valid(const ModelId& model, BasisTag tag);

/// Graded element of a model's invariant algebra, stored degree-by-degree
/// in the model's canonical basis. Absent degrees are zero.
class Valuation {
public:
    explicit Valuation(ModelId model) : model_(model) {}

    const ModelId& model() const { return model_; }

    /// Degrees with a stored (possibly zero) component.
    const std::map<int, std::vector<PiScalar>>& components() const { return comps_; }

    /// Canonical coordinate vector at degree k (zeros when absent).
    std::vector<PiScalar> coords(int k) const;

    void set_coord(int k, std::size_t index, const PiScalar& value);
    void add_coord(int k, std::size_t index, const PiScalar& value);

    bool is_zero() const;
    Valuation component(int k) const;  // the degree-k homogeneous part

    Valuation scaled(const PiScalar& c) const;
    Valuation operator+(const Valuation& o) const;
    Valuation operator-(const Valuation& o) const;
    bool operator==(const Valuation& o) const;
    bool operator!=(const Valuation& o) const { return !(*this == o); }

    /// Drops stored zero components (canonical storage form).
    void prune();

private:
    void check_degree(int k, std::size_t index) const;
    ModelId model_;
    std::map<int, std::vector<PiScalar>> comps_;
};

/// a + lambda * b, degree-wise; models must agree.
Valuation add_scale(const Valuation& a, const Valuation& b, const PiScalar& lambda);

/// Element of Val^G (x) Val^G: for each degree pair (k,l) a matrix whose
/// rows index the degree-k canonical basis and columns the degree-l one.
class TensorValuation {
public:
    explicit TensorValuation(ModelId model) : model_(model) {}

    const ModelId& model() const { return model_; }
    const std::map<std::pair<int, int>, Matrix>& blocks() const { return blocks_; }

    Matrix block(int k, int l) const;  // zero matrix when absent
    void add_block(int k, int l, const Matrix& m);
    void set_entry(int k, int l, std::size_t i, std::size_t j, const PiScalar& v);
    void add_entry(int k, int l, std::size_t i, std::size_t j, const PiScalar& v);

    bool operator==(const TensorValuation& o) const;
    bool operator!=(const TensorValuation& o) const { return !(*this == o); }

    TensorValuation swapped() const;  // exchange the tensor factors

    void prune();

private:
    ModelId model_;
    std::map<std::pair<int, int>, Matrix> blocks_;
};

}  // namespace kinval
