#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

namespace kinval {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Convex polygon, counter-clockwise vertices, collinear points removed.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return verts_; }
    double area() const;
    double perimeter() const;
    ConvexPolygon rotated(double angle) const;
    ConvexPolygon negated() const;  // point reflection through the origin
    ConvexPolygon translated(const Vec2& offset) const;  // sum with a point

private:
    std::vector<Vec2> verts_;
};

struct Disc {
    Vec2 center;
    double radius = 1.0;
};

using ConvexBody2D = std::variant<ConvexPolygon, Disc>;

/// (mu_0, mu_1, mu_2) = (1, perimeter/2, area).
std::array<double, 3> intrinsic_volumes_2d(const ConvexBody2D& body);

/// Edge-merge by slope order; vertex count <= |p| + |q|.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// vol(K + tB) = sum_k mu_{n-k}(K) omega_k t^k with floating-point omega.
double steiner_volume(const std::vector<double>& mu, int n, double t);

struct PkfCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;
};

/// Quadrature check of the planar principal kinematic formula: the motion
/// integral over translations is the area of K + (-R_theta L), leaving a
/// 1-dimensional uniform rotation quadrature; the right-hand side uses the
/// exact formula coefficients evaluated in floating point.
PkfCheck check_pkf_2d(const ConvexBody2D& k, const ConvexBody2D& l, int nodes);

/// Seeded polygon generator: vertices on a circle (hence convex), CCW.
ConvexPolygon random_convex_polygon(std::uint64_t seed, int min_vertices = 3,
                                    int max_vertices = 12);

}  // namespace kinval
