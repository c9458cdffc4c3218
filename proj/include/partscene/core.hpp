#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partscene {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Wrap angle into [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    double norm_sq() const { return x * x + y * y; }
    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
    }
    // 90 degree counterclockwise rotation
    Vec2 perp() const { return {-y, x}; }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm_sq() const { return x * x + y * y + z * z; }
    Vec3 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec3{x / n, y / n, z / n} : Vec3{0.0, 0.0, 0.0};
    }
    Vec2 xy() const { return {x, y}; }
};

// Row-major 3x3 matrix. Columns are the transformed basis vectors, so a
// rotation's columns are the body axes expressed in the parent frame.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return Mat3{}; }

    static Mat3 rot_z(double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
    }

    // Rodrigues rotation about a unit axis.
    static Mat3 axis_angle(const Vec3& axis, double angle) {
        const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
        const double ax = axis.x, ay = axis.y, az = axis.z;
        return Mat3{{t * ax * ax + c,      t * ax * ay - s * az, t * ax * az + s * ay,
                     t * ax * ay + s * az, t * ay * ay + c,      t * ay * az - s * ax,
                     t * ax * az - s * ay, t * ay * az + s * ax, t * az * az + c}};
    }

    double operator()(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }

    Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 transposed() const {
        return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    bool is_rotation(double tol = 1e-9) const {
        const Mat3 rtr = transposed() * (*this);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double want = (i == j) ? 1.0 : 0.0;
                if (std::abs(rtr(i, j) - want) > tol) return false;
            }
        return std::abs(det() - 1.0) <= 1e-6;
    }
};

// The six labeled surfaces of a part, assigned in canonical pose
// (+Z up, +Y front; left is -X) and carried rigidly afterwards.
enum class FaceLabel : int { Top = 0, Bottom, Front, Back, Left, Right };

constexpr std::array<FaceLabel, 6> kAllFaces = {FaceLabel::Top,  FaceLabel::Bottom,
                                                FaceLabel::Front, FaceLabel::Back,
                                                FaceLabel::Left,  FaceLabel::Right};

inline Vec3 face_direction(FaceLabel f) {
    switch (f) {
        case FaceLabel::Top: return {0, 0, 1};
        case FaceLabel::Bottom: return {0, 0, -1};
        case FaceLabel::Front: return {0, 1, 0};
        case FaceLabel::Back: return {0, -1, 0};
        case FaceLabel::Left: return {-1, 0, 0};
        case FaceLabel::Right: return {1, 0, 0};
    }
    return {0, 0, 1};
}

inline FaceLabel opposite_face(FaceLabel f) {
    switch (f) {
        case FaceLabel::Top: return FaceLabel::Bottom;
        case FaceLabel::Bottom: return FaceLabel::Top;
        case FaceLabel::Front: return FaceLabel::Back;
        case FaceLabel::Back: return FaceLabel::Front;
        case FaceLabel::Left: return FaceLabel::Right;
        case FaceLabel::Right: return FaceLabel::Left;
    }
    return FaceLabel::Bottom;
}

inline std::string_view face_name(FaceLabel f) {
    switch (f) {
        case FaceLabel::Top: return "top";
        case FaceLabel::Bottom: return "bottom";
        case FaceLabel::Front: return "front";
        case FaceLabel::Back: return "back";
        case FaceLabel::Left: return "left";
        case FaceLabel::Right: return "right";
    }
    return "top";
}

inline std::optional<FaceLabel> face_from_name(std::string_view s) {
    for (FaceLabel f : kAllFaces)
        if (face_name(f) == s) return f;
    return std::nullopt;
}

}  // namespace partscene
