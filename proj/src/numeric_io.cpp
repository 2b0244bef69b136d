#include "vrpstw/numeric_io.hpp"

#include <charconv>
#include <system_error>

#include "vrpstw/errors.hpp"

namespace vrpstw {

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) {
        throw InputError("number not representable");
    }
    return std::string(buf, end);
}

double parse_number(std::string_view token) {
    double value = 0.0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError("invalid number '" + std::string(token) + "'");
    }
    return value;
}

int parse_int(std::string_view token) {
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError("invalid integer '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace vrpstw
