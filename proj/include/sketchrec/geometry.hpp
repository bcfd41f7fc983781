#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sketchrec {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double px, double py) : x(px), y(py) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    bool operator==(const Vec2& o) const = default;

    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

inline Vec2 lerp(const Vec2& a, const Vec2& b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline Vec2 rotated(const Vec2& v, double rad) {
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Wraps an angle in degrees into [0, 360).
inline double wrap_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    if (w == 360.0) w = 0.0;
    return w;
}

/// Unsigned difference between two directions in degrees, in [0, 180].
inline double angle_diff_deg(double a, double b) {
    double d = std::fabs(wrap_deg(a) - wrap_deg(b));
    return d > 180.0 ? 360.0 - d : d;
}

/// Difference between two undirected directions (mod 180), in [0, 90].
inline double axial_diff_deg(double a, double b) {
    double d = std::fmod(std::fabs(a - b), 180.0);
    return d > 90.0 ? 180.0 - d : d;
}

/// Angle of the vector in degrees, in (-180, 180].
inline double heading_deg(const Vec2& v) { return rad_to_deg(std::atan2(v.y, v.x)); }

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len_sq = ab.norm_sq();
    if (len_sq == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len_sq, 0.0, 1.0);
    return distance(p, a + ab * t);
}

/// Distance from p to the infinite line through a and b (assumes a != b).
inline double point_line_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    return std::fabs(cross(ab, p - a)) / ab.norm();
}

}  // namespace sketchrec
