#pragma once

#include <functional>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markar/math.hpp"

namespace markar {

// Info text returned for parts without an entry.
inline constexpr std::string_view kNoneInfo = "NONE";

struct PartInfo {
    std::string info_text;
    Vec3 offset{};

    bool is_none() const { return info_text == kNoneInfo; }
};

// Part name -> (info text, highlight offset). Lookups never fail: unknown
// names yield the NONE entry with a zero offset.
class PartsRegistry {
public:
    // Later entries replace earlier ones; returns true when `name` was
    // already present.
    bool set(std::string name, PartInfo info);

    PartInfo lookup(std::string_view name) const;
    const std::string& information(std::string_view name) const;
    Vec3 translation(std::string_view name) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Non-fatal issues seen while loading (duplicate names).
    const std::vector<std::string>& warnings() const { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

private:
    std::map<std::string, PartInfo, std::less<>> entries_;
    std::vector<std::string> warnings_;
};

// Line format: `<part_name>|<dx> <dy> <dz>|<info text...>`. Lines starting
// with '#' and blank lines are skipped. Only the first two '|' separate
// fields, so the info text may itself contain '|'. Throws ParseError(line).
PartsRegistry parse_registry(std::istream& in, const std::string& source);
PartsRegistry load_registry(const std::string& path);

}  // namespace markar
