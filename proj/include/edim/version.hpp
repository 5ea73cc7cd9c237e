#pragma once

namespace edim {
inline constexpr const char* version = "edim 1.0.0";
}
