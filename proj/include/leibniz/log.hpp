#pragma once

#include <string>

namespace leibniz::log {

enum class Level { quiet = 0, info = 1, debug = 2 };

// Read once from LEIBNIZ_LOG ("debug" or "info"); anything else is quiet.
Level level();

void info(const std::string& message);
void debug(const std::string& message);

} // namespace leibniz::log
