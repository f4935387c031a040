#include "markar/math.hpp"

#include "markar/errors.hpp"

namespace markar {

Vec3 normalize(const Vec3& v) {
    const double len = length(v);
    if (len < 1e-12) throw DegenerateVector();
    return v * (1.0 / len);
}

Mat4 Mat4::rotation(double angle_deg, const Vec3& axis) {
    if (length(axis) <= 1e-12) throw DegenerateAxis();
    const Vec3 a = normalize(axis);
    const double rad = deg_to_rad(angle_deg);
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const double t = 1.0 - c;

    Mat4 r = identity();
    r(0, 0) = a.x * a.x * t + c;
    r(0, 1) = a.x * a.y * t - a.z * s;
    r(0, 2) = a.x * a.z * t + a.y * s;
    r(1, 0) = a.y * a.x * t + a.z * s;
    r(1, 1) = a.y * a.y * t + c;
    r(1, 2) = a.y * a.z * t - a.x * s;
    r(2, 0) = a.z * a.x * t - a.y * s;
    r(2, 1) = a.z * a.y * t + a.x * s;
    r(2, 2) = a.z * a.z * t + c;
    return r;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int col = 0; col < 4; ++col) {
        for (int row = 0; row < 4; ++row) {
            double sum = 0.0;
            for (int k = 0; k < 4; ++k) sum += a(row, k) * b(k, col);
            r(row, col) = sum;
        }
    }
    return r;
}

Mat4 transpose(const Mat4& m) {
    Mat4 r;
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) r(row, col) = m(col, row);
    return r;
}

namespace {

// Adjugate (transposed cofactor matrix) in the layout of the MESA
// gluInvertMatrix routine; works on the flat column-major array directly.
std::array<double, 16> adjugate(const std::array<double, 16>& m) {
    std::array<double, 16> inv{};
    inv[0] = m[5] * m[10] * m[15] - m[5] * m[11] * m[14] - m[9] * m[6] * m[15] +
             m[9] * m[7] * m[14] + m[13] * m[6] * m[11] - m[13] * m[7] * m[10];
    inv[4] = -m[4] * m[10] * m[15] + m[4] * m[11] * m[14] + m[8] * m[6] * m[15] -
             m[8] * m[7] * m[14] - m[12] * m[6] * m[11] + m[12] * m[7] * m[10];
    inv[8] = m[4] * m[9] * m[15] - m[4] * m[11] * m[13] - m[8] * m[5] * m[15] +
             m[8] * m[7] * m[13] + m[12] * m[5] * m[11] - m[12] * m[7] * m[9];
    inv[12] = -m[4] * m[9] * m[14] + m[4] * m[10] * m[13] + m[8] * m[5] * m[14] -
              m[8] * m[6] * m[13] - m[12] * m[5] * m[10] + m[12] * m[6] * m[9];
    inv[1] = -m[1] * m[10] * m[15] + m[1] * m[11] * m[14] + m[9] * m[2] * m[15] -
             m[9] * m[3] * m[14] - m[13] * m[2] * m[11] + m[13] * m[3] * m[10];
    inv[5] = m[0] * m[10] * m[15] - m[0] * m[11] * m[14] - m[8] * m[2] * m[15] +
             m[8] * m[3] * m[14] + m[12] * m[2] * m[11] - m[12] * m[3] * m[10];
    inv[9] = -m[0] * m[9] * m[15] + m[0] * m[11] * m[13] + m[8] * m[1] * m[15] -
             m[8] * m[3] * m[13] - m[12] * m[1] * m[11] + m[12] * m[3] * m[9];
    inv[13] = m[0] * m[9] * m[14] - m[0] * m[10] * m[13] - m[8] * m[1] * m[14] +
              m[8] * m[2] * m[13] + m[12] * m[1] * m[10] - m[12] * m[2] * m[9];
    inv[2] = m[1] * m[6] * m[15] - m[1] * m[7] * m[14] - m[5] * m[2] * m[15] +
             m[5] * m[3] * m[14] + m[13] * m[2] * m[7] - m[13] * m[3] * m[6];
    inv[6] = -m[0] * m[6] * m[15] + m[0] * m[7] * m[14] + m[4] * m[2] * m[15] -
             m[4] * m[3] * m[14] - m[12] * m[2] * m[7] + m[12] * m[3] * m[6];
    inv[10] = m[0] * m[5] * m[15] - m[0] * m[7] * m[13] - m[4] * m[1] * m[15] +
              m[4] * m[3] * m[13] + m[12] * m[1] * m[7] - m[12] * m[3] * m[5];
    inv[14] = -m[0] * m[5] * m[14] + m[0] * m[6] * m[13] + m[4] * m[1] * m[14] -
              m[4] * m[2] * m[13] - m[12] * m[1] * m[6] + m[12] * m[2] * m[5];
    inv[3] = -m[1] * m[6] * m[11] + m[1] * m[7] * m[10] + m[5] * m[2] * m[11] -
             m[5] * m[3] * m[10] - m[9] * m[2] * m[7] + m[9] * m[3] * m[6];
    inv[7] = m[0] * m[6] * m[11] - m[0] * m[7] * m[10] - m[4] * m[2] * m[11] +
             m[4] * m[3] * m[10] + m[8] * m[2] * m[7] - m[8] * m[3] * m[6];
    inv[11] = -m[0] * m[5] * m[11] + m[0] * m[7] * m[9] + m[4] * m[1] * m[11] -
              m[4] * m[3] * m[9] - m[8] * m[1] * m[7] + m[8] * m[3] * m[5];
    inv[15] = m[0] * m[5] * m[10] - m[0] * m[6] * m[9] - m[4] * m[1] * m[10] +
              m[4] * m[2] * m[9] + m[8] * m[1] * m[6] - m[8] * m[2] * m[5];
    return inv;
}

double det_from_adjugate(const std::array<double, 16>& m, const std::array<double, 16>& adj) {
    return m[0] * adj[0] + m[1] * adj[4] + m[2] * adj[8] + m[3] * adj[12];
}

}  // namespace

double determinant(const Mat4& m) { return det_from_adjugate(m.m, adjugate(m.m)); }

Mat4 inverse(const Mat4& m) {
    const auto adj = adjugate(m.m);
    const double det = det_from_adjugate(m.m, adj);
    if (!(std::abs(det) > 1e-12)) throw SingularMatrix();
    const double inv_det = 1.0 / det;
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = adj[i] * inv_det;
    return r;
}

Vec3 transform_point(const Mat4& m, const Vec3& p) {
    return {m(0, 0) * p.x + m(0, 1) * p.y + m(0, 2) * p.z + m(0, 3),
            m(1, 0) * p.x + m(1, 1) * p.y + m(1, 2) * p.z + m(1, 3),
            m(2, 0) * p.x + m(2, 1) * p.y + m(2, 2) * p.z + m(2, 3)};
}

Vec3 transform_direction(const Mat4& m, const Vec3& d) {
    return {m(0, 0) * d.x + m(0, 1) * d.y + m(0, 2) * d.z,
            m(1, 0) * d.x + m(1, 1) * d.y + m(1, 2) * d.z,
            m(2, 0) * d.x + m(2, 1) * d.y + m(2, 2) * d.z};
}

Mat4 translate_pose(const Mat4& m, double tx, double ty, double tz) {
    Mat4 r = m;
    for (int row = 0; row < 4; ++row)
        r(row, 3) = m(row, 0) * tx + m(row, 1) * ty + m(row, 2) * tz + m(row, 3);
    return r;
}

Mat4 rotate_pose(const Mat4& m, double angle_deg, const Vec3& axis) {
    return m * Mat4::rotation(angle_deg, axis);
}

Mat4 scale_pose(const Mat4& m, double s) {
    if (!(s > 0.0)) throw NonPositiveScale();
    Mat4 r = m;
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 4; ++row) r(row, col) = m(row, col) * s;
    return r;
}

bool is_rigid(const Mat4& m, double tol) {
    if (!is_finite(m)) return false;
    if (std::abs(m(3, 0)) > tol || std::abs(m(3, 1)) > tol || std::abs(m(3, 2)) > tol ||
        std::abs(m(3, 3) - 1.0) > tol)
        return false;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = dot(m.column(i), m.column(j));
            if (std::abs(d - (i == j ? 1.0 : 0.0)) > tol) return false;
        }
    }
    const double det3 = dot(m.column(0), cross(m.column(1), m.column(2)));
    return std::abs(det3 - 1.0) <= tol;
}

bool is_finite(const Mat4& m) {
    for (double v : m.m)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace markar
