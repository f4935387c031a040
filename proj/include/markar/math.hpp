#pragma once

#include <array>
#include <cmath>

namespace markar {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return a * s; }
constexpr Vec3& operator+=(Vec3& a, const Vec3& b) { return a = a + b; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Throws DegenerateVector for inputs shorter than 1e-12.
Vec3 normalize(const Vec3& v);

constexpr double deg_to_rad(double deg) { return deg * (3.14159265358979323846 / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / 3.14159265358979323846); }

// 4x4 matrix stored column-major, OpenGL style: element (row r, col c) lives
// at m[c * 4 + r] and a pose keeps its translation in column 3 (m[12..14]).
// Points are column vectors, so `a * b` applied to a point runs b first.
//
// Some texts print the same pose in row-vector layout (translation in the
// bottom row); that printed matrix is the transpose of what is stored here.
struct Mat4 {
    std::array<double, 16> m{};

    constexpr double operator()(int row, int col) const { return m[col * 4 + row]; }
    constexpr double& operator()(int row, int col) { return m[col * 4 + row]; }

    static constexpr Mat4 identity() {
        Mat4 r;
        r.m[0] = r.m[5] = r.m[10] = r.m[15] = 1.0;
        return r;
    }

    static constexpr Mat4 translation(double tx, double ty, double tz) {
        Mat4 r = identity();
        r.m[12] = tx;
        r.m[13] = ty;
        r.m[14] = tz;
        return r;
    }

    static constexpr Mat4 scaling(double sx, double sy, double sz) {
        Mat4 r;
        r.m[0] = sx;
        r.m[5] = sy;
        r.m[10] = sz;
        r.m[15] = 1.0;
        return r;
    }

    // Right-handed rotation of `angle_deg` degrees about `axis` (any length
    // above 1e-12). Throws DegenerateAxis.
    static Mat4 rotation(double angle_deg, const Vec3& axis);

    constexpr Vec3 translation_part() const { return {m[12], m[13], m[14]}; }
    constexpr Vec3 column(int c) const { return {m[c * 4], m[c * 4 + 1], m[c * 4 + 2]}; }

    friend constexpr bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 multiply(const Mat4& a, const Mat4& b);
inline Mat4 operator*(const Mat4& a, const Mat4& b) { return multiply(a, b); }

Mat4 transpose(const Mat4& m);
double determinant(const Mat4& m);

// General inverse by cofactor expansion. Throws SingularMatrix when
// |det| <= 1e-12.
Mat4 inverse(const Mat4& m);

Vec3 transform_point(const Mat4& m, const Vec3& p);
Vec3 transform_direction(const Mat4& m, const Vec3& d);

// Right-multiplying pose helpers: each returns m * E for the corresponding
// elementary matrix E, i.e. the transform is expressed in m's local frame.
Mat4 translate_pose(const Mat4& m, double tx, double ty, double tz);
Mat4 rotate_pose(const Mat4& m, double angle_deg, const Vec3& axis);
Mat4 scale_pose(const Mat4& m, double s);

// Upper-left 3x3 orthonormal and det +1, bottom row (0,0,0,1), all within tol.
bool is_rigid(const Mat4& m, double tol = 1e-6);
bool is_finite(const Mat4& m);

}  // namespace markar
