#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace markar::text {

std::string_view trim(std::string_view s);

// Splits on runs of spaces/tabs; no empty tokens.
std::vector<std::string_view> split_ws(std::string_view s);

// Whole-token parses; nullopt on any trailing garbage or non-finite value.
std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);

// Shortest-safe round-trip form: 17 significant digits.
std::string format_double(double v);

}  // namespace markar::text
