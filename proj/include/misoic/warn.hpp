#pragma once

#include <functional>
#include <string>

namespace misoic {

// Non-fatal diagnostics (degenerate families, omitted candidates). Default
// sink writes to stderr; tests can install a collector or silence it.
using WarnHandler = std::function<void(const std::string&)>;

void warn(const std::string& msg);
void set_warn_handler(WarnHandler handler); // empty handler restores the default

} // namespace misoic
