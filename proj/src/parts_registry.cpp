#include "markar/parts_registry.hpp"

#include <fstream>

#include "markar/errors.hpp"
#include "markar/text.hpp"

namespace markar {

namespace {
const std::string kNoneString(kNoneInfo);
}

bool PartsRegistry::set(std::string name, PartInfo info) {
    auto [it, inserted] = entries_.insert_or_assign(std::move(name), std::move(info));
    return !inserted;
}

PartInfo PartsRegistry::lookup(std::string_view name) const {
    const auto it = entries_.find(name);
    if (it == entries_.end()) return PartInfo{kNoneString, {}};
    return it->second;
}

const std::string& PartsRegistry::information(std::string_view name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? kNoneString : it->second.info_text;
}

Vec3 PartsRegistry::translation(std::string_view name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? Vec3{} : it->second.offset;
}

PartsRegistry parse_registry(std::istream& in, const std::string& source) {
    PartsRegistry registry;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;

        const auto bar1 = body.find('|');
        const auto bar2 = bar1 == std::string_view::npos ? bar1 : body.find('|', bar1 + 1);
        if (bar2 == std::string_view::npos)
            throw ParseError(source, lineno, "expected <name>|<dx> <dy> <dz>|<info>");

        const std::string_view name = text::trim(body.substr(0, bar1));
        if (name.empty()) throw ParseError(source, lineno, "empty part name");

        const auto coords = text::split_ws(body.substr(bar1 + 1, bar2 - bar1 - 1));
        if (coords.size() != 3) throw ParseError(source, lineno, "offset needs 3 numbers");
        Vec3 offset;
        for (int i = 0; i < 3; ++i) {
            const auto v = text::parse_double(coords[static_cast<std::size_t>(i)]);
            if (!v) throw ParseError(source, lineno, "bad offset value");
            offset[i] = *v;
        }

        PartInfo info{std::string(text::trim(body.substr(bar2 + 1))), offset};
        if (registry.set(std::string(name), std::move(info)))
            registry.add_warning(source + ":" + std::to_string(lineno) + ": duplicate part '" +
                                 std::string(name) + "', later entry wins");
    }
    return registry;
}

PartsRegistry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_registry(in, path);
}

}  // namespace markar
