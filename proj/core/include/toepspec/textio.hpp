#pragma once

#include <string>

namespace toepspec {

// Shortest fixed-width float rendering used by every CSV/JSON writer:
// 17 significant digits, enough to round-trip a double exactly.
std::string format_sig17(double x);

}  // namespace toepspec
