#pragma once

#include <istream>
#include <string>
#include <vector>

#include "markar/math.hpp"

namespace markar {

struct Triangle {
    Vec3 a, b, c;
};

// A named sub-object of the model (an OBJ group). Geometry is in model space;
// highlight_offset is a model-local translation that is only in effect while
// offset_applied is set.
struct Part {
    std::string name;
    std::vector<Triangle> triangles;
    bool pickable = true;
    Vec3 highlight_offset{};
    bool offset_applied = false;

    Vec3 effective_offset() const { return offset_applied ? highlight_offset : Vec3{}; }
};

// OBJ subset: `v`, `f`, `g`/`o`. Faces are fan-triangulated, index forms
// v, v/vt, v//vn, v/vt/vn and negative (relative) indices are accepted, other
// statements are skipped. One part per group name in order of first
// appearance; faces seen before any group land in "default". Groups that end
// up without faces are dropped.
//
// Throws ParseError(line) on malformed lines and EmptyModel when no face was
// read.
std::vector<Part> parse_obj(std::istream& in, const std::string& source);
std::vector<Part> load_model(const std::string& path);

}  // namespace markar
