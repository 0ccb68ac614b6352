#include "leibniz/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace leibniz::log {

namespace {

std::mutex sink_mutex;

Level read_env()
{
    const char* v = std::getenv("LEIBNIZ_LOG");
    if (!v)
        return Level::quiet;
    const std::string s(v);
    if (s == "debug")
        return Level::debug;
    if (s == "info")
        return Level::info;
    return Level::quiet;
}

void emit(const char* tag, const std::string& message)
{
    std::lock_guard<std::mutex> lock(sink_mutex);
    std::clog << "[" << tag << "] " << message << '\n';
}

} // namespace

Level level()
{
    static const Level cached = read_env();
    return cached;
}

void info(const std::string& message)
{
    if (level() >= Level::info)
        emit("info", message);
}

void debug(const std::string& message)
{
    if (level() >= Level::debug)
        emit("debug", message);
}

} // namespace leibniz::log
