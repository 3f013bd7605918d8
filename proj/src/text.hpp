#pragma once

#include <cstdio>
#include <string>

namespace aggmdp::detail {

template <class... Args>
std::string strf(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return std::string(buf);
}

}  // namespace aggmdp::detail
