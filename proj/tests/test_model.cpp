#include <doctest.h>

#include <sstream>

#include "markar/errors.hpp"
#include "markar/model.hpp"

using namespace markar;

namespace {

std::vector<Part> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_obj(in, "test.obj");
}

}  // namespace

TEST_CASE("two-cube fixture has two parts of twelve triangles") {
    const auto parts = load_model(MARKAR_TEST_DATA "/two_cubes.obj");
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].name == "LEFT");
    CHECK(parts[1].name == "RIGHT");
    CHECK(parts[0].triangles.size() == 12);
    CHECK(parts[1].triangles.size() == 12);
    CHECK(parts[0].pickable);
    CHECK_FALSE(parts[0].offset_applied);
}

TEST_CASE("faces and index forms") {
    const auto quad = parse("v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n");
    REQUIRE(quad.size() == 1);
    CHECK(quad[0].name == "default");
    REQUIRE(quad[0].triangles.size() == 2);
    CHECK(quad[0].triangles[1].a == Vec3{0, 0, 0});
    CHECK(quad[0].triangles[1].b == Vec3{1, 1, 0});
    CHECK(quad[0].triangles[1].c == Vec3{0, 1, 0});

    const auto forms = parse(
        "v 0 0 0\nv 1 0 0\nv 0 1 0\nvt 0 0\nvn 0 0 1\n"
        "g a\nf 1/1 2/1 3/1\n"
        "g b\nf 1//1 2//1 3//1\n"
        "g c\nf 1/1/1 2/1/1 3/1/1\n"
        "g d\nf -3 -2 -1\n");
    REQUIRE(forms.size() == 4);
    for (const auto& p : forms) {
        REQUIRE(p.triangles.size() == 1);
        CHECK(p.triangles[0].b == Vec3{1, 0, 0});
    }
}

TEST_CASE("groups") {
    const auto parts = parse(
        "v 0 0 0\nv 1 0 0\nv 0 1 0\n"
        "o Front Door\nf 1 2 3\n"
        "g empty\n"
        "g Hood\nf 1 2 3\n"
        "g Front Door\nf 3 2 1\n"
        "s off\nusemtl red\n");
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].name == "Front Door");
    CHECK(parts[0].triangles.size() == 2);
    CHECK(parts[1].name == "Hood");
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(parse("v 0 0 0\nv 1 0 0\nv 0 1 0\n"), EmptyModel);
    CHECK_THROWS_AS(parse(""), EmptyModel);

    const char* bad[] = {
        "v 0 0 0\nf 1 2 5\n",      // index past the end
        "v 0 0 0\nf 1 2\n",        // too few vertices
        "v 0 0 0\nv 1 x 0\n",      // bad coordinate
        "v 0 0 0\nf 0 1 1\n",      // zero index
        "v 0 0 0\nf -4 1 1\n",     // relative index before the start
    };
    for (const char* text : bad) {
        try {
            parse(text);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    CHECK_THROWS_AS(load_model("/nonexistent/model.obj"), ParseError);
}
