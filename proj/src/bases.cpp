#include "kinval/bases.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace kinval {

namespace {

int tasaki_qmax(int n, int k) { return std::min(k, 2 * n - k) / 2; }
int hiv_qmin(int n, int k) { return std::max(0, k - n); }

// tau_{k,q} as an element of C[t,s]:
//   pi^k / (omega_k (k-2q)! (2q)!) * t^{k-2q} (4s - t^2)^q
TsPoly tasaki_poly(int k, int q) {
    TsPoly base = TsPoly::monomial(PiScalar(4), 0, 1) - TsPoly::monomial(PiScalar(1), 2, 0);
    TsPoly pow = TsPoly::monomial(PiScalar(1), 0, 0);
    for (int i = 0; i < q; ++i) pow = pow * base;
    PiScalar c = PiScalar::pi_power(k) /
                 (omega(k) * PiScalar(factorial(k - 2 * q) * factorial(2 * q)));
    return (TsPoly::monomial(PiScalar(1), k - 2 * q, 0) * pow).scaled(c);
}

// tau coordinates of the hermitian intrinsic volumes at degree k: inverts
// tau_{k,q} = sum_{i >= max(q, k-n)} binom(i,q) mu_{k,i}, the out-of-range
// mu's dropped. For k <= n this reproduces the alternating-sign inversion
// mu_{k,q} = sum_i (-1)^{i-q} binom(i,q) tau_{k,i}.
Matrix hiv_in_tasaki(int n, int k) {
    int qmin = hiv_qmin(n, k);
    int qmax = tasaki_qmax(n, k);
    std::size_t dim = static_cast<std::size_t>(qmax) + 1;
    Matrix b(dim, dim);  // rows: tau index q, cols: hiv index i = qmin..k/2
    for (int q = 0; q <= qmax; ++q)
        for (int i = qmin; i <= k / 2; ++i)
            b.at(static_cast<std::size_t>(q), static_cast<std::size_t>(i - qmin)) =
                i >= q ? PiScalar(binomial(i, q)) : PiScalar(0);
    return invert(b.transpose());
}

// tau coordinates of the primitive basis at degree k.
Matrix prim_in_tasaki(int n, int k) {
    int qmax = tasaki_qmax(n, k);
    std::size_t dim = static_cast<std::size_t>(qmax) + 1;
    Matrix m(dim, dim);
    for (int r = 0; r <= qmax; ++r) {
        Rational lead = double_factorial(2 * n - 4 * r + 1);
        if (r % 2 != 0) lead = -lead;
        for (int i = 0; i <= r; ++i) {
            Rational c = lead * factorial(k - 2 * i) / factorial(2 * r - 2 * i) *
                         double_factorial(2 * r - 2 * i - 1) /
                         double_factorial(2 * n - 2 * r - 2 * i + 1);
            if (i % 2 != 0) c = -c;
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(r)) = PiScalar(c);
        }
    }
    return m;
}

Matrix compute_basis_to_canonical(const ModelId& model, BasisTag tag, int k) {
    std::size_t dim = static_cast<std::size_t>(graded_dim(model, k));
    switch (model.group) {
        case Group::SO:
            if (tag == BasisTag::Mu) return Matrix::identity(dim);
            if (tag == BasisTag::Ts) {
                // t^k = k! omega_k / pi^k mu_k
                Matrix m(1, 1);
                m.at(0, 0) = PiScalar(factorial(k)) * omega(k) * PiScalar::pi_power(-k);
                return m;
            }
            break;
        case Group::G2:
        case Group::Spin7:
            if (tag == BasisTag::Ts) return Matrix::identity(dim);
            break;
        case Group::U: {
            int n = model.n;
            switch (tag) {
                case BasisTag::Ts: return Matrix::identity(dim);
                case BasisTag::UBasis: {
                    Matrix m(dim, dim);
                    for (std::size_t p = 0; p < dim; ++p)
                        m.at(p, p) = un_ubasis_scale(n, k, static_cast<int>(p)).inverse();
                    return m;
                }
                case BasisTag::Tasaki: {
                    Matrix m(dim, dim);
                    for (int q = 0; q <= tasaki_qmax(n, k); ++q) {
                        Valuation v = un_normal_form(tasaki_poly(k, q), n);
                        std::vector<PiScalar> coords = v.coords(k);
                        for (std::size_t i = 0; i < dim; ++i)
                            m.at(i, static_cast<std::size_t>(q)) = coords[i];
                    }
                    if (rank(m) != dim)
                        throw std::logic_error("bases: Tasaki valuations not independent");
                    return m;
                }
                case BasisTag::Hiv:
                    return compute_basis_to_canonical(model, BasisTag::Tasaki, k) *
                           hiv_in_tasaki(n, k);
                case BasisTag::Prim:
                    return compute_basis_to_canonical(model, BasisTag::Tasaki, k) *
                           prim_in_tasaki(n, k);
                default: break;
            }
            break;
        }
    }
    throw std::domain_error("bases: basis '" + basis_tag_name(tag) + "' not valid for " +
                            group_name(model.group));
}

using MatrixKey = std::tuple<Group, int, int, int, bool>;

const Matrix& cached_matrix(const ModelId& model, BasisTag tag, int k, bool inverse) {
    static std::mutex mu;
    static std::map<MatrixKey, Matrix> cache;
    MatrixKey key{model.group, model.n, static_cast<int>(tag), k, inverse};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Matrix m = compute_basis_to_canonical(model, tag, k);
        if (inverse) m = invert(m);
        it = cache.emplace(key, std::move(m)).first;
    }
    return it->second;
}

}  // namespace

bool basis_index_valid(const ModelId& model, BasisTag tag, const BasisIndex& index) {
    if (!basis_tag_valid(model, tag)) return false;
    int k = index.k, sub = index.sub;
    if (k < 0 || k > model.top_degree()) return false;
    switch (tag) {
        case BasisTag::Mu: return sub == 0;
        case BasisTag::Ts:
        case BasisTag::UBasis: return sub >= 0 && sub < graded_dim(model, k);
        case BasisTag::Hiv: return sub >= hiv_qmin(model.n, k) && sub <= k / 2;
        case BasisTag::Tasaki:
        case BasisTag::Prim: return sub >= 0 && sub <= tasaki_qmax(model.n, k);
    }
    return false;
}

std::vector<BasisIndex> basis_indices(const ModelId& model, BasisTag tag, int k) {
    if (!basis_tag_valid(model, tag))
        throw std::domain_error("basis_indices: basis not valid for model");
    if (k < 0 || k > model.top_degree())
        throw std::domain_error("basis_indices: degree out of range");
    std::vector<BasisIndex> out;
    int lo = tag == BasisTag::Hiv ? hiv_qmin(model.n, k) : 0;
    for (int sub = lo; basis_index_valid(model, tag, {k, sub}); ++sub) out.push_back({k, sub});
    return out;
}

BasisIndex monomial_index(const ModelId& model, const std::string& name) {
    for (int k = 0; k <= model.top_degree(); ++k) {
        std::vector<std::string> names = canonical_basis_names(model, k);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name || (k == 1 && name == "t^1" && names[i] == "t"))
                return {k, static_cast<int>(i)};
    }
    if (name == "t^0") return {0, 0};
    throw std::domain_error("monomial_index: unknown monomial '" + name + "'");
}

std::string monomial_name(const ModelId& model, const BasisIndex& index) {
    std::vector<std::string> names = canonical_basis_names(model, index.k);
    if (index.sub < 0 || index.sub >= static_cast<int>(names.size()))
        throw std::domain_error("monomial_name: index out of range");
    return names[static_cast<std::size_t>(index.sub)];
}

Matrix basis_to_canonical(const ModelId& model, BasisTag tag, int k) {
    return cached_matrix(model, tag, k, /*inverse=*/false);
}

Matrix canonical_to_basis(const ModelId& model, BasisTag tag, int k) {
    return cached_matrix(model, tag, k, /*inverse=*/true);
}

namespace {

std::size_t index_position(const ModelId& model, BasisTag tag, const BasisIndex& index) {
    int lo = tag == BasisTag::Hiv ? hiv_qmin(model.n, index.k) : 0;
    return static_cast<std::size_t>(index.sub - lo);
}

}  // namespace

Valuation construct(const ModelId& model, BasisTag tag, const std::vector<BasisTerm>& terms) {
    if (!basis_tag_valid(model, tag))
        throw std::domain_error("construct: basis not valid for model");
    // accumulate coordinate vectors per degree, then convert
    std::map<int, std::vector<PiScalar>> per_degree;
    for (const auto& [index, coeff] : terms) {
        if (!basis_index_valid(model, tag, index))
            throw std::domain_error("construct: invalid basis index (k=" +
                                    std::to_string(index.k) + ", " + std::to_string(index.sub) +
                                    ")");
        auto it = per_degree.find(index.k);
        if (it == per_degree.end())
            it = per_degree
                     .emplace(index.k, std::vector<PiScalar>(
                                           static_cast<std::size_t>(graded_dim(model, index.k)),
                                           PiScalar(0)))
                     .first;
        it->second[index_position(model, tag, index)] += coeff;
    }
    Valuation out(model);
    for (const auto& [k, coords] : per_degree) {
        Matrix m = basis_to_canonical(model, tag, k);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            PiScalar acc(0);
            for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * coords[j];
            out.add_coord(k, i, acc);
        }
    }
    out.prune();
    return out;
}

std::vector<BasisTerm> convert_basis(const Valuation& v, BasisTag tag) {
    const ModelId& model = v.model();
    if (!basis_tag_valid(model, tag))
        throw std::domain_error("convert_basis: basis not valid for model");
    std::vector<BasisTerm> out;
    for (const auto& [k, coords] : v.components()) {
        Matrix m = canonical_to_basis(model, tag, k);
        std::vector<BasisIndex> indices = basis_indices(model, tag, k);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            PiScalar acc(0);
            for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * coords[j];
            if (!acc.is_zero()) out.emplace_back(indices[i], acc);
        }
    }
    return out;
}

Valuation basis_element(const ModelId& model, BasisTag tag, const BasisIndex& index) {
    return construct(model, tag, {{index, PiScalar(1)}});
}

Valuation chi(const ModelId& model) {
    Valuation v(model);
    v.set_coord(0, 0, PiScalar(1));
    return v;
}

Valuation vol(const ModelId& model) {
    int m = model.top_degree();
    Valuation v(model);
    if (model.group == Group::SO) {
        v.set_coord(m, 0, PiScalar(1));
    } else {
        // vol = pi^m / (m! omega_m) t^m
        v.set_coord(m, 0, PiScalar::pi_power(m) / (PiScalar(factorial(m)) * omega(m)));
    }
    return v;
}

}  // namespace kinval
