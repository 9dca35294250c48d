#include "misoic/warn.hpp"

#include <cstdio>
#include <utility>

namespace misoic {

namespace {
WarnHandler g_handler;
}

void warn(const std::string& msg) {
    if (g_handler) {
        g_handler(msg);
        return;
    }
    std::fprintf(stderr, "misoic: warning: %s\n", msg.c_str());
}

void set_warn_handler(WarnHandler handler) { g_handler = std::move(handler); }

} // namespace misoic
