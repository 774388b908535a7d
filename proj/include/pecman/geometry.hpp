#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace pecman {

// Parametric tolerance for intersection tests (normalized coordinates).
inline constexpr double kParamEps = 1e-9;
// Metric tolerance for distance comparisons, meters.
inline constexpr double kDistEps = 1e-6;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    Point2& operator+=(const Point2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(const Point2& p) { return p.x * p.x + p.y * p.y; }
inline double norm(const Point2& p) { return std::sqrt(norm_sq(p)); }
inline double dist(const Point2& a, const Point2& b) { return norm(b - a); }
inline double dist_sq(const Point2& a, const Point2& b) { return norm_sq(b - a); }
inline Point2 lerp(const Point2& a, const Point2& b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}
inline Point2 normalized(const Point2& p) {
    double n = norm(p);
    return n > 0.0 ? Point2{p.x / n, p.y / n} : Point2{0.0, 0.0};
}
// Counter-clockwise rotation.
inline Point2 rotated(const Point2& p, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}
inline Point2 perp_left(const Point2& p) { return {-p.y, p.x}; }
inline Point2 perp_right(const Point2& p) { return {p.y, -p.x}; }
inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct WallSegment {
    Point2 a;
    Point2 b;
    int id = -1;

    double length() const { return dist(a, b); }
};

struct Disc {
    Point2 center;
    double radius = 0.0;
};

struct Rect {
    Point2 min;
    Point2 max;

    bool contains(const Point2& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
};

inline double clamp01(double t) { return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t); }

// Closest-point parameter of p on segment ab, in [0,1].
inline double project_param(const Point2& p, const Point2& a, const Point2& b) {
    Point2 d = b - a;
    double l2 = norm_sq(d);
    if (l2 <= 0.0) return 0.0;
    return clamp01(dot(p - a, d) / l2);
}

inline double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    return dist(p, lerp(a, b, project_param(p, a, b)));
}

inline bool segments_properly_intersect(const Point2& a1, const Point2& b1, const Point2& a2,
                                        const Point2& b2) {
    Point2 d1 = b1 - a1, d2 = b2 - a2;
    double denom = cross(d1, d2);
    double scale = norm(d1) * norm(d2);
    if (std::abs(denom) <= kParamEps * scale) return false;
    double t = cross(a2 - a1, d2) / denom;
    double u = cross(a2 - a1, d1) / denom;
    return t >= -kParamEps && t <= 1.0 + kParamEps && u >= -kParamEps && u <= 1.0 + kParamEps;
}

// Minimum distance between two closed segments; zero when they cross.
inline double segment_segment_distance(const Point2& a1, const Point2& b1, const Point2& a2,
                                       const Point2& b2) {
    if (segments_properly_intersect(a1, b1, a2, b2)) return 0.0;
    double d = point_segment_distance(a2, a1, b1);
    d = std::min(d, point_segment_distance(b2, a1, b1));
    d = std::min(d, point_segment_distance(a1, a2, b2));
    d = std::min(d, point_segment_distance(b1, a2, b2));
    return d;
}

// Intersection point of two closed segments. Collinear overlaps return the
// overlap endpoint nearest s1.a; disjoint segments return nullopt.
inline std::optional<Point2> seg_seg_intersect(const WallSegment& s1, const WallSegment& s2) {
    Point2 d1 = s1.b - s1.a, d2 = s2.b - s2.a;
    double len1 = norm(d1), len2 = norm(d2);
    double denom = cross(d1, d2);
    if (std::abs(denom) > kParamEps * len1 * len2) {
        double t = cross(s2.a - s1.a, d2) / denom;
        double u = cross(s2.a - s1.a, d1) / denom;
        if (t >= -kParamEps && t <= 1.0 + kParamEps && u >= -kParamEps && u <= 1.0 + kParamEps) {
            return lerp(s1.a, s1.b, clamp01(t));
        }
        return std::nullopt;
    }
    // Parallel: collinear only if s2.a sits on the s1 support line.
    double off = cross(s2.a - s1.a, d1);
    if (std::abs(off) > kParamEps * len1 * (len1 + norm(s2.a - s1.a))) return std::nullopt;
    double l2 = norm_sq(d1);
    double ta = dot(s2.a - s1.a, d1) / l2;
    double tb = dot(s2.b - s1.a, d1) / l2;
    double lo = std::max(0.0, std::min(ta, tb));
    double hi = std::min(1.0, std::max(ta, tb));
    if (lo > hi + kParamEps) return std::nullopt;
    return lerp(s1.a, s1.b, clamp01(lo));
}

// True iff the closed segment comes within d.radius of d.center.
inline bool seg_disc_intersect(const WallSegment& s, const Disc& d) {
    return point_segment_distance(d.center, s.a, s.b) <= d.radius;
}

struct RayHit {
    double distance = kInfinity;
    int wall_index = -1;   // index into the walls span, not the wall id
    double wall_param = 0; // hit position along the wall, in [0,1]
    Point2 point;
};

// Ray (origin, unit dir) against one segment; returns travel distance and the
// hit parameter on the segment.
inline std::optional<std::pair<double, double>> ray_segment_hit(const Point2& origin,
                                                                const Point2& dir, const Point2& a,
                                                                const Point2& b) {
    Point2 s = b - a;
    double slen = norm(s);
    double denom = cross(dir, s);
    if (std::abs(denom) <= kParamEps * slen) {
        // Parallel; collinear segments contribute their nearest endpoint.
        if (std::abs(cross(a - origin, dir)) > kParamEps * (slen + norm(a - origin) + 1.0))
            return std::nullopt;
        double ta = dot(a - origin, dir);
        double tb = dot(b - origin, dir);
        double t = std::min(ta < -kParamEps ? kInfinity : std::max(ta, 0.0),
                            tb < -kParamEps ? kInfinity : std::max(tb, 0.0));
        if (t == kInfinity) return std::nullopt;
        double u = slen > 0.0 ? clamp01(dot(origin + dir * t - a, s) / (slen * slen)) : 0.0;
        return std::make_pair(t, u);
    }
    // Solve origin + t*dir = a + u*s.
    double t = cross(a - origin, s) / denom;
    double u = cross(a - origin, dir) / denom;
    if (t < -kParamEps || u < -kParamEps || u > 1.0 + kParamEps) return std::nullopt;
    return std::make_pair(std::max(t, 0.0), clamp01(u));
}

// Nearest hit over all walls, exhaustive scan. Occlusion is implicit.
inline std::optional<RayHit> raycast_hit(const Point2& origin, double angle,
                                         std::span<const WallSegment> walls, double max_range) {
    Point2 dir{std::cos(angle), std::sin(angle)};
    RayHit best;
    for (size_t i = 0; i < walls.size(); ++i) {
        auto h = ray_segment_hit(origin, dir, walls[i].a, walls[i].b);
        if (h && h->first < best.distance && h->first <= max_range) {
            best.distance = h->first;
            best.wall_index = static_cast<int>(i);
            best.wall_param = h->second;
            best.point = origin + dir * h->first;
        }
    }
    if (best.wall_index < 0) return std::nullopt;
    return best;
}

// Distance to the nearest wall along the ray, clamped to max_range.
inline double raycast(const Point2& origin, double angle, std::span<const WallSegment> walls,
                      double max_range) {
    auto hit = raycast_hit(origin, angle, walls, max_range);
    return hit ? hit->distance : max_range;
}

// Travel distance until the ray enters the disc, if it does.
inline std::optional<double> ray_disc_hit(const Point2& origin, const Point2& dir, const Disc& d) {
    Point2 oc = origin - d.center;
    double b = dot(oc, dir);
    double c = norm_sq(oc) - d.radius * d.radius;
    if (c <= 0.0) return 0.0; // origin already inside
    double disc = b * b - c;
    if (disc < 0.0) return std::nullopt;
    double t = -b - std::sqrt(disc);
    if (t < 0.0) return std::nullopt;
    return t;
}

} // namespace pecman
