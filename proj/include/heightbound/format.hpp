#pragma once

#include <string>

namespace heightbound {

/// Renders a double with exactly 17 significant digits. Positional
/// notation when the exponent is in [-4, 16], scientific otherwise;
/// 17 digits round-trip to the same double.
std::string fmt17(double v);

/// Reduced fraction text for n/d ("1", "1/3", "2/5"). d > 0 required.
std::string ratio_string(int num, int den);

/// JSON string escaping (control characters, quotes, backslash).
std::string json_escape(const std::string& s);

} // namespace heightbound
