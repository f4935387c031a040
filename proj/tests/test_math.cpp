#include <doctest.h>

#include <random>

#include "markar/errors.hpp"
#include "markar/math.hpp"
#include "oracles.hpp"

using namespace markar;

namespace {

bool near(const Mat4& a, const Mat4& b, double tol) { return oracle::max_abs_diff(a, b) <= tol; }

}  // namespace

TEST_CASE("identity and multiply") {
    const Mat4 I = Mat4::identity();
    CHECK(I.m == std::array<double, 16>{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});

    std::mt19937_64 rng(1);
    const Mat4 m = oracle::random_rigid_pose(rng);
    CHECK(I * m == m);
    CHECK(m * I == m);

    CHECK(Mat4::translation(1, 2, 3) * Mat4::translation(4, 5, 6) == Mat4::translation(5, 7, 9));

    const Mat4 rx90 = Mat4::rotation(90, {1, 0, 0});
    CHECK(near(rx90 * rx90, oracle::rotation(180, {1, 0, 0}), 1e-9));
    // Column-major: translation lives in m[12..14].
    CHECK(Mat4::translation(7, 8, 9).m[12] == 7);
    CHECK(Mat4::translation(7, 8, 9).m[14] == 9);
}

TEST_CASE("multiply matches explicit product") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int n = 0; n < 100; ++n) {
        Mat4 a, b;
        for (auto& v : a.m) v = u(rng);
        for (auto& v : b.m) v = u(rng);
        CHECK(near(a * b, oracle::product(a, b), 1e-12));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Mat4::identity()) == Mat4::identity());
    CHECK(near(inverse(Mat4::translation(1, 2, 3)), Mat4::translation(-1, -2, -3), 1e-15));

    const Mat4 r = Mat4::rotation(37, {1, 2, 3});
    CHECK(near(inverse(r), transpose(r), 1e-9));

    Mat4 singular = Mat4::identity();
    singular.m[10] = 0.0;
    CHECK_THROWS_AS(inverse(singular), SingularMatrix);
    CHECK_THROWS_AS(inverse(Mat4{}), SingularMatrix);
    CHECK_THROWS_AS(inverse(Mat4::scaling(1e-5, 1e-5, 1e-5)), SingularMatrix);
}

TEST_CASE("property: pose times its inverse is identity") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 1000; ++n) {
        const Mat4 m = oracle::random_rigid_pose(rng);
        REQUIRE(near(m * inverse(m), Mat4::identity(), 1e-7));
        REQUIRE(is_rigid(m));
    }
}

TEST_CASE("transpose") {
    CHECK(transpose(Mat4::identity()) == Mat4::identity());
    std::mt19937_64 rng(4);
    for (int n = 0; n < 100; ++n) {
        const Mat4 m = oracle::random_rigid_pose(rng);
        CHECK(transpose(transpose(m)) == m);
        // Inverse of a rotation is its transpose.
        Mat4 rot = m;
        rot.m[12] = rot.m[13] = rot.m[14] = 0.0;
        CHECK(near(inverse(rot), transpose(rot), 1e-9));
    }

    // Row-vector display of a pose: translation in the bottom row. Its
    // transpose is the stored column-major layout with translation in column 3.
    const double row_layout[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {4, 5, 6, 1}};
    const Mat4 a = oracle::from_rows(row_layout);
    const Mat4 t = transpose(a);
    CHECK(t.translation_part() == Vec3{4, 5, 6});
    CHECK(t(3, 0) == 0.0);
}

TEST_CASE("translate_pose") {
    CHECK(translate_pose(Mat4::identity(), 1, 2, 3) == Mat4::translation(1, 2, 3));
    std::mt19937_64 rng(5);
    const Mat4 m = oracle::random_rigid_pose(rng);
    CHECK(translate_pose(m, 0, 0, 0) == m);

    const Mat4 rx = Mat4::rotation(90, {1, 0, 0});
    const Mat4 moved = translate_pose(rx, 0, 0, 5);
    CHECK(near(moved, oracle::product(rx, oracle::translation(0, 0, 5)), 1e-12));
    // Local +Z becomes world -Y under a 90 degree turn about X.
    CHECK(moved.translation_part().y == doctest::Approx(-5.0));
    CHECK(std::abs(moved.translation_part().z) < 1e-12);
}

TEST_CASE("rotate_pose") {
    CHECK(rotate_pose(Mat4::identity(), 0, {1, 0, 0}) == Mat4::identity());
    CHECK(near(rotate_pose(Mat4::identity(), 360, {0.3, -2, 5}), Mat4::identity(), 1e-9));

    const Vec3 y_rot = transform_direction(rotate_pose(Mat4::identity(), 90, {1, 0, 0}), {0, 1, 0});
    const Vec3 y_expected = oracle::apply(oracle::rotation(90, {1, 0, 0}), {0, 1, 0});
    CHECK(y_rot.x == doctest::Approx(y_expected.x).epsilon(1e-12));
    CHECK(std::abs(y_rot.y) < 1e-12);
    CHECK(y_rot.z == doctest::Approx(1.0));

    CHECK_THROWS_AS(rotate_pose(Mat4::identity(), 10, {0, 0, 0}), DegenerateAxis);
    CHECK_THROWS_AS(Mat4::rotation(10, {1e-13, 0, 0}), DegenerateAxis);
}

TEST_CASE("scale_pose") {
    CHECK(scale_pose(Mat4::identity(), 1) == Mat4::identity());
    const Mat4 s2 = scale_pose(Mat4::identity(), 2);
    for (int c = 0; c < 3; ++c) CHECK(length(s2.column(c)) == 2.0);

    const Mat4 t = scale_pose(Mat4::translation(1, 0, 0), 2);
    CHECK(t.translation_part() == Vec3{1, 0, 0});
    CHECK(near(t, oracle::product(Mat4::translation(1, 0, 0), oracle::scaling(2)), 1e-15));

    CHECK_THROWS_AS(scale_pose(Mat4::identity(), 0), NonPositiveScale);
    CHECK_THROWS_AS(scale_pose(Mat4::identity(), -1), NonPositiveScale);
}

TEST_CASE("property: pose helpers equal product with the elementary matrix") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-100, 100);
    std::uniform_real_distribution<double> s(0.1, 5);
    for (int n = 0; n < 500; ++n) {
        const Mat4 m = oracle::random_rigid_pose(rng);
        const double x = u(rng), y = u(rng), z = u(rng), angle = u(rng) * 3.6, k = s(rng);
        const Vec3 axis{u(rng), u(rng), u(rng)};
        REQUIRE(near(translate_pose(m, x, y, z), oracle::product(m, oracle::translation(x, y, z)), 1e-9));
        REQUIRE(near(rotate_pose(m, angle, axis), oracle::product(m, oracle::rotation(angle, axis)), 1e-9));
        REQUIRE(near(scale_pose(m, k), oracle::product(m, oracle::scaling(k)), 1e-9));
    }
}

TEST_CASE("normalize") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int n = 0; n < 1000; ++n) {
        const Vec3 v{u(rng), u(rng), u(rng)};
        CHECK(std::abs(length(normalize(v)) - 1.0) < 1e-9);
    }
    CHECK_THROWS_AS(normalize({0, 0, 0}), DegenerateVector);
    CHECK_THROWS_AS(normalize({1e-13, 0, 0}), DegenerateVector);
}

TEST_CASE("is_rigid") {
    CHECK(is_rigid(Mat4::identity()));
    CHECK(is_rigid(Mat4::rotation(33, {1, 1, 0}) * Mat4::translation(3, 4, 5)));
    CHECK_FALSE(is_rigid(Mat4::scaling(2, 2, 2)));
    CHECK_FALSE(is_rigid(Mat4::scaling(1, 1, -1)));  // reflection, det -1
    Mat4 nan = Mat4::identity();
    nan.m[3] = std::nan("");
    CHECK_FALSE(is_rigid(nan));
    CHECK_FALSE(is_finite(nan));
}
