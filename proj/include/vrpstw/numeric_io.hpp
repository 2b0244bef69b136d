#pragma once

#include <string>
#include <string_view>

namespace vrpstw {

// Shortest representation that round-trips the exact double (60 -> "60",
// 0.7 -> "0.7"). Used by every text format that promises byte-exact IO.
std::string format_number(double value);

// Strict inverse: the whole token must be a number. Throws ParseError.
double parse_number(std::string_view token);

int parse_int(std::string_view token);

}  // namespace vrpstw
