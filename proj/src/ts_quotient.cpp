#include "kinval/ts_quotient.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace kinval {

// ---------------------------------------------------------------- TsPoly

TsPoly TsPoly::monomial(const PiScalar& c, int t_exp, int s_exp) {
    if (t_exp < 0 || s_exp < 0) throw std::domain_error("TsPoly: negative exponent");
    TsPoly p;
    p.add_term(t_exp, s_exp, c);
    return p;
}

PiScalar TsPoly::coeff(int t_exp, int s_exp) const {
    auto it = terms_.find({t_exp, s_exp});
    return it == terms_.end() ? PiScalar(0) : it->second;
}

void TsPoly::add_term(int t_exp, int s_exp, const PiScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(t_exp, s_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int TsPoly::weighted_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + 2 * key.second);
    return d;
}

bool TsPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [key, c] : terms_) {
        int w = key.first + 2 * key.second;
        if (d == -1) d = w;
        else if (w != d) return false;
    }
    return true;
}

TsPoly TsPoly::operator+(const TsPoly& o) const {
    TsPoly r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
    return r;
}

TsPoly TsPoly::operator-(const TsPoly& o) const {
    TsPoly r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, -c);
    return r;
}

TsPoly TsPoly::operator*(const TsPoly& o) const {
    TsPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TsPoly TsPoly::scaled(const PiScalar& c) const {
    TsPoly r;
    for (const auto& [key, x] : terms_) r.add_term(key.first, key.second, x * c);
    return r;
}

TsPoly log_expansion_term(int m) {
    if (m < 1) throw std::domain_error("log_expansion_term: m must be >= 1");
    // log(1+t+s) = sum_j (-1)^{j+1} (t+s)^j / j; the (t^{m-2b} s^b)-term
    // comes from j = m - b.
    TsPoly f;
    for (int b = 0; 2 * b <= m; ++b) {
        int j = m - b;
        Rational c = binomial(j, b) / Rational(j);
        if ((j + 1) % 2 != 0) c = -c;
        f.add_term(m - 2 * b, b, PiScalar(c));
    }
    return f;
}

int un_dim(int n, int k) {
    if (n < 1) throw std::domain_error("un_dim: n must be >= 1");
    if (k < 0 || k > 2 * n) throw std::domain_error("un_dim: degree out of range");
    return std::min(k / 2, (2 * n - k) / 2) + 1;
}

// ------------------------------------------------------- NormalFormTable

namespace {

// column layout at weighted degree d: s-exponent descending, so that row
// reduction pivots on the monomials that must be rewritten
std::size_t column_of(int d, int s_exp) { return static_cast<std::size_t>(d / 2 - s_exp); }

}  // namespace

NormalFormTable::NormalFormTable(int n) : n_(n) {
    if (n < 1) throw std::domain_error("NormalFormTable: n must be >= 1");
    TsPoly fa = log_expansion_term(n + 1);
    TsPoly fb = log_expansion_term(n + 2);
    for (int d = n + 1; d <= 2 * n; ++d) {
        std::size_t total = static_cast<std::size_t>(d / 2) + 1;
        int pmax = (2 * n - d) / 2;
        std::size_t nred = static_cast<std::size_t>(d / 2 - pmax);

        std::vector<TsPoly> gens;
        for (const auto& [f, fdeg] : {std::pair{&fa, n + 1}, std::pair{&fb, n + 2}}) {
            int w = d - fdeg;
            if (w < 0) continue;
            for (int b = 0; 2 * b <= w; ++b)
                gens.push_back(TsPoly::monomial(PiScalar(1), w - 2 * b, b) * (*f));
        }

        Matrix m(gens.size(), total);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (const auto& [key, c] : gens[i].terms())
                m.at(i, column_of(d, key.second)) = c;

        RrefResult r = rref(m);
        if (r.pivots.size() != nred)
            throw std::logic_error("NormalFormTable: ideal slice rank does not match the "
                                   "graded dimension formula");
        for (std::size_t j = 0; j < nred; ++j)
            if (r.pivots[j] != j)
                throw std::logic_error("NormalFormTable: pivot fell on a basis monomial");

        Matrix red(nred, static_cast<std::size_t>(pmax) + 1);
        for (std::size_t row = 0; row < nred; ++row)
            for (int p = 0; p <= pmax; ++p)
                red.at(row, static_cast<std::size_t>(p)) = -r.matrix.at(row, column_of(d, p));
        reductions_.emplace(d, std::move(red));
    }
    check_shapes();
}

NormalFormTable::NormalFormTable(int n, std::map<int, Matrix> reductions)
    : n_(n), reductions_(std::move(reductions)) {
    if (n < 1) throw std::domain_error("NormalFormTable: n must be >= 1");
    check_shapes();
}

void NormalFormTable::check_shapes() const {
    for (int d = n_ + 1; d <= 2 * n_; ++d) {
        auto it = reductions_.find(d);
        if (it == reductions_.end())
            throw std::domain_error("NormalFormTable: missing degree " + std::to_string(d));
        int pmax = (2 * n_ - d) / 2;
        if (it->second.rows() != static_cast<std::size_t>(d / 2 - pmax) ||
            it->second.cols() != static_cast<std::size_t>(pmax) + 1)
            throw std::domain_error("NormalFormTable: bad matrix shape at degree " +
                                    std::to_string(d));
    }
    if (reductions_.size() != static_cast<std::size_t>(n_))
        throw std::domain_error("NormalFormTable: unexpected degree set");
}

const Matrix& NormalFormTable::reduction_matrix(int d) const {
    auto it = reductions_.find(d);
    if (it == reductions_.end())
        throw std::domain_error("NormalFormTable: no reduction at degree " + std::to_string(d));
    return it->second;
}

Valuation NormalFormTable::reduce(const TsPoly& p) const {
    Valuation out(ModelId::un(n_));
    for (const auto& [key, c] : p.terms()) {
        int a = key.first, b = key.second;
        int d = a + 2 * b;
        if (d > 2 * n_) continue;
        int pmax = (2 * n_ - d) / 2;
        if (b <= pmax) {
            out.add_coord(d, static_cast<std::size_t>(b), c);
            continue;
        }
        const Matrix& red = reduction_matrix(d);
        std::size_t row = static_cast<std::size_t>(d / 2 - b);
        for (int q = 0; q <= pmax; ++q)
            out.add_coord(d, static_cast<std::size_t>(q), c * red.at(row, static_cast<std::size_t>(q)));
    }
    out.prune();
    return out;
}

// ------------------------------------------------------------ memo/cache

namespace {

std::filesystem::path cache_file(int n) {
    const char* dir = std::getenv("KINVAL_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::filesystem::path(dir) / ("nf-u" + std::to_string(n) + "-v1.json");
}

std::unique_ptr<NormalFormTable> load_cached_table(int n) {
    std::filesystem::path path = cache_file(n);
    if (path.empty() || !std::filesystem::exists(path)) return nullptr;
    try {
        std::ifstream in(path);
        nlohmann::json j;
        in >> j;
        if (j.at("group") != "U" || j.at("n") != n || j.at("format") != 1) return nullptr;
        std::map<int, Matrix> reductions;
        for (const auto& deg : j.at("degrees")) {
            int d = deg.at("d");
            const auto& rows = deg.at("matrix");
            std::size_t nrows = rows.size();
            std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
            Matrix m(nrows, ncols);
            for (std::size_t i = 0; i < nrows; ++i)
                for (std::size_t jj = 0; jj < ncols; ++jj)
                    m.at(i, jj) = PiScalar::parse(rows[i][jj].get<std::string>());
            reductions.emplace(d, std::move(m));
        }
        return std::make_unique<NormalFormTable>(n, std::move(reductions));
    } catch (...) {
        return nullptr;  // unreadable cache: rebuild
    }
}

void save_cached_table(const NormalFormTable& table) {
    std::filesystem::path path = cache_file(table.n());
    if (path.empty()) return;
    try {
        nlohmann::json degrees = nlohmann::json::array();
        for (int d = table.n() + 1; d <= 2 * table.n(); ++d) {
            const Matrix& m = table.reduction_matrix(d);
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
                rows.push_back(std::move(row));
            }
            degrees.push_back({{"d", d}, {"matrix", std::move(rows)}});
        }
        nlohmann::json j{{"group", "U"}, {"n", table.n()}, {"format", 1},
                         {"degrees", std::move(degrees)}};
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        out << j.dump();
    } catch (...) {
        // cache is best-effort only
    }
}

}  // namespace

const NormalFormTable& normal_form_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<NormalFormTable>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n);
    if (it == tables.end()) {
        std::unique_ptr<NormalFormTable> t = load_cached_table(n);
        if (t == nullptr) {
            t = std::make_unique<NormalFormTable>(n);
            save_cached_table(*t);
        }
        it = tables.emplace(n, std::move(t)).first;
    }
    return *it->second;
}

Valuation un_normal_form(const TsPoly& p, int n) { return normal_form_table(n).reduce(p); }

TsPoly ts_lift(const Valuation& v) {
    if (v.model().group != Group::U) throw std::domain_error("ts_lift: U(n) valuation expected");
    TsPoly p;
    for (const auto& [k, coords] : v.components())
        for (std::size_t i = 0; i < coords.size(); ++i)
            p.add_term(k - 2 * static_cast<int>(i), static_cast<int>(i), coords[i]);
    return p;
}

PiScalar un_ubasis_scale(int n, int k, int p) {
    if (p < 0 || k < 0 || k > 2 * n || p > std::min(k / 2, (2 * n - k) / 2))
        throw std::domain_error("un_ubasis_scale: invalid index");
    Rational num = factorial(k - 2 * p) * factorial(n);
    Rational den = factorial(n - p);
    return PiScalar(num / den) * omega(k - 2 * p) * PiScalar::pi_power(-(k - 2 * p));
}

}  // namespace kinval
