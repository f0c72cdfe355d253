#include "nbrw/rational.hpp"

#include <charconv>

namespace nbrw {

std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

} // namespace nbrw
