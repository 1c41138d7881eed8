#include "kinval/geo2d.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "kinval/qpi.hpp"

namespace kinval {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 add(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }

double body_scale(const std::vector<Vec2>& verts) {
    double s = 1.0;
    for (const Vec2& v : verts) s = std::max({s, std::fabs(v.x), std::fabs(v.y)});
    return s;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw std::domain_error("ConvexPolygon: need at least 3 vertices");
    double tol = 1e-12 * body_scale(vertices) * body_scale(vertices);
    // drop collinear points, then verify strict convexity and CCW order
    std::vector<Vec2> kept;
    std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& prev = vertices[(i + n - 1) % n];
        const Vec2& cur = vertices[i];
        const Vec2& next = vertices[(i + 1) % n];
        double c = cross(sub(cur, prev), sub(next, cur));
        if (std::fabs(c) <= tol) continue;  // collinear (or repeated) point
        kept.push_back(cur);
    }
    if (kept.size() < 3) throw std::domain_error("ConvexPolygon: degenerate polygon");
    n = kept.size();
    for (std::size_t i = 0; i < n; ++i) {
        double c = cross(sub(kept[(i + 1) % n], kept[i]), sub(kept[(i + 2) % n], kept[(i + 1) % n]));
        if (c <= tol) throw std::domain_error("ConvexPolygon: not strictly convex CCW");
    }
    verts_ = std::move(kept);
}

double ConvexPolygon::area() const {
    double a = 0.0;
    std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(verts_[i], verts_[(i + 1) % n]);
    return a / 2.0;
}

double ConvexPolygon::perimeter() const {
    double p = 0.0;
    std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = sub(verts_[(i + 1) % n], verts_[i]);
        p += std::hypot(e.x, e.y);
    }
    return p;
}

ConvexPolygon ConvexPolygon::rotated(double angle) const {
    double c = std::cos(angle), s = std::sin(angle);
    std::vector<Vec2> out;
    out.reserve(verts_.size());
    for (const Vec2& v : verts_) out.push_back({c * v.x - s * v.y, s * v.x + c * v.y});
    return ConvexPolygon(std::move(out));
}

ConvexPolygon ConvexPolygon::negated() const {
    std::vector<Vec2> out;
    out.reserve(verts_.size());
    for (const Vec2& v : verts_) out.push_back({-v.x, -v.y});
    return ConvexPolygon(std::move(out));
}

ConvexPolygon ConvexPolygon::translated(const Vec2& offset) const {
    std::vector<Vec2> out;
    out.reserve(verts_.size());
    for (const Vec2& v : verts_) out.push_back(add(v, offset));
    return ConvexPolygon(std::move(out));
}

std::array<double, 3> intrinsic_volumes_2d(const ConvexBody2D& body) {
    if (const auto* disc = std::get_if<Disc>(&body)) {
        if (disc->radius <= 0.0) throw std::domain_error("Disc: radius must be positive");
        constexpr double kPi = 3.141592653589793238462643383279503;
        return {1.0, kPi * disc->radius, kPi * disc->radius * disc->radius};
    }
    const auto& poly = std::get<ConvexPolygon>(body);
    return {1.0, poly.perimeter() / 2.0, poly.area()};
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    auto bottom = [](const std::vector<Vec2>& v) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
        return best;
    };
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    std::size_t np = pv.size(), nq = qv.size();
    std::size_t ip = bottom(pv), iq = bottom(qv);

    std::vector<Vec2> out;
    out.reserve(np + nq);
    Vec2 cur = add(pv[ip], qv[iq]);
    std::size_t cp = 0, cq = 0;
    while (cp < np || cq < nq) {
        out.push_back(cur);
        Vec2 ep = sub(pv[(ip + 1) % np], pv[ip % np]);
        Vec2 eq = sub(qv[(iq + 1) % nq], qv[iq % nq]);
        if (cq >= nq) {
            cur = add(cur, ep);
            ++ip, ++cp;
        } else if (cp >= np) {
            cur = add(cur, eq);
            ++iq, ++cq;
        } else {
            double c = cross(ep, eq);
            if (c > 0) {
                cur = add(cur, ep);
                ++ip, ++cp;
            } else if (c < 0) {
                cur = add(cur, eq);
                ++iq, ++cq;
            } else {  // parallel edges merge
                cur = add(cur, add(ep, eq));
                ++ip, ++cp, ++iq, ++cq;
            }
        }
    }
    return ConvexPolygon(std::move(out));
}

double steiner_volume(const std::vector<double>& mu, int n, double t) {
    if (t < 0.0) throw std::domain_error("steiner_volume: negative tube radius");
    if (static_cast<int>(mu.size()) != n + 1)
        throw std::domain_error("steiner_volume: expected n+1 intrinsic volumes");
    double total = 0.0;
    double tk = 1.0;
    for (int k = 0; k <= n; ++k) {
        total += mu[static_cast<std::size_t>(n - k)] * omega(k).eval_approx() * tk;
        tk *= t;
    }
    return total;
}

namespace {

// area of K + (-M) for one rotated copy M; exact in each case
double area_of_difference_body(const ConvexBody2D& k, const ConvexBody2D& m) {
    constexpr double kPi = 3.141592653589793238462643383279503;
    if (const auto* dk = std::get_if<Disc>(&k)) {
        if (const auto* dm = std::get_if<Disc>(&m)) {
            double r = dk->radius + dm->radius;
            return kPi * r * r;
        }
        // disc + polygon: Steiner formula
        const auto& poly = std::get<ConvexPolygon>(m);
        double r = dk->radius;
        return poly.area() + poly.perimeter() * r + kPi * r * r;
    }
    const auto& pk = std::get<ConvexPolygon>(k);
    if (const auto* dm = std::get_if<Disc>(&m)) {
        double r = dm->radius;
        return pk.area() + pk.perimeter() * r + kPi * r * r;
    }
    return minkowski_sum(pk, std::get<ConvexPolygon>(m).negated()).area();
}

}  // namespace

PkfCheck check_pkf_2d(const ConvexBody2D& k, const ConvexBody2D& l, int nodes) {
    if (nodes < 16) throw std::domain_error("check_pkf_2d: need at least 16 nodes");

    double lhs = 0.0;
    if (std::holds_alternative<Disc>(k) && std::holds_alternative<Disc>(l)) {
        lhs = area_of_difference_body(k, l);  // rotation invariant
    } else {
        for (int i = 0; i < nodes; ++i) {
            double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(nodes);
            ConvexBody2D rotated = l;
            if (const auto* poly = std::get_if<ConvexPolygon>(&l))
                rotated = poly->rotated(theta);
            lhs += area_of_difference_body(k, rotated);
        }
        lhs /= static_cast<double>(nodes);
    }

    std::array<double, 3> mk = intrinsic_volumes_2d(k);
    std::array<double, 3> ml = intrinsic_volumes_2d(l);
    double rhs = 0.0;
    for (int j = 0; j <= 2; ++j)
        rhs += flag(2, j).inverse().eval_approx() * mk[static_cast<std::size_t>(j)] *
               ml[static_cast<std::size_t>(2 - j)];

    double rel_err = std::fabs(lhs - rhs) / std::max(std::fabs(rhs), 1e-300);
    return {lhs, rhs, rel_err};
}

ConvexPolygon random_convex_polygon(std::uint64_t seed, int min_vertices, int max_vertices) {
    if (min_vertices < 3 || max_vertices < min_vertices)
        throw std::domain_error("random_convex_polygon: bad vertex bounds");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(min_vertices, max_vertices);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    int m = count(rng);
    double r = radius(rng);
    for (;;) {
        std::vector<double> angles;
        for (int i = 0; i < m; ++i) angles.push_back(angle(rng));
        std::sort(angles.begin(), angles.end());
        double min_gap = angles[0] + kTwoPi - angles.back();
        for (std::size_t i = 1; i < angles.size(); ++i)
            min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        if (min_gap < 0.05) continue;  // avoid near-degenerate slivers
        std::vector<Vec2> verts;
        for (double a : angles) verts.push_back({r * std::cos(a), r * std::sin(a)});
        return ConvexPolygon(std::move(verts));
    }
}

}  // namespace kinval
