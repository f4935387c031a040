#include "markar/model.hpp"

#include <fstream>
#include <unordered_map>

#include "markar/errors.hpp"
#include "markar/text.hpp"

namespace markar {

namespace {

// Resolves one face corner ("7", "7/2", "7//3", "-1/2/3") to a 0-based
// vertex index.
std::optional<std::size_t> resolve_index(std::string_view corner, std::size_t vertex_count) {
    const auto slash = corner.find('/');
    const auto idx = text::parse_int(corner.substr(0, slash));
    if (!idx || *idx == 0) return std::nullopt;
    const auto n = static_cast<std::int64_t>(vertex_count);
    const std::int64_t resolved = *idx > 0 ? *idx - 1 : n + *idx;
    if (resolved < 0 || resolved >= n) return std::nullopt;
    return static_cast<std::size_t>(resolved);
}

}  // namespace

std::vector<Part> parse_obj(std::istream& in, const std::string& source) {
    std::vector<Vec3> vertices;
    std::vector<Part> parts;
    std::unordered_map<std::string, std::size_t> by_name;
    std::string current = "default";

    auto part_for = [&](const std::string& name) -> Part& {
        auto [it, inserted] = by_name.try_emplace(name, parts.size());
        if (inserted) parts.push_back(Part{name, {}});
        return parts[it->second];
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto tok = text::split_ws(body);
        const std::string_view key = tok[0];

        if (key == "v") {
            if (tok.size() < 4) throw ParseError(source, lineno, "vertex needs 3 coordinates");
            const auto x = text::parse_double(tok[1]);
            const auto y = text::parse_double(tok[2]);
            const auto z = text::parse_double(tok[3]);
            if (!x || !y || !z) throw ParseError(source, lineno, "bad vertex coordinate");
            vertices.push_back({*x, *y, *z});
        } else if (key == "f") {
            if (tok.size() < 4) throw ParseError(source, lineno, "face needs at least 3 vertices");
            std::vector<std::size_t> idx;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const auto r = resolve_index(tok[i], vertices.size());
                if (!r) throw ParseError(source, lineno, "bad face index '" + std::string(tok[i]) + "'");
                idx.push_back(*r);
            }
            Part& part = part_for(current);
            for (std::size_t i = 1; i + 1 < idx.size(); ++i)
                part.triangles.push_back({vertices[idx[0]], vertices[idx[i]], vertices[idx[i + 1]]});
        } else if (key == "g" || key == "o") {
            const std::string_view name = text::trim(body.substr(1));
            current = name.empty() ? "default" : std::string(name);
        }
    }

    std::erase_if(parts, [](const Part& p) { return p.triangles.empty(); });
    if (parts.empty()) throw EmptyModel();
    return parts;
}

std::vector<Part> load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_obj(in, path);
}

}  // namespace markar
