#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace lgv::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// level comes from LGV_LOG (error|warn|info|debug), default warn
inline Level level() {
    static const Level lvl = [] {
        const char* env = std::getenv("LGV_LOG");
        if (!env) return Level::Warn;
        if (!std::strcmp(env, "error")) return Level::Error;
        if (!std::strcmp(env, "info")) return Level::Info;
        if (!std::strcmp(env, "debug")) return Level::Debug;
        return Level::Warn;
    }();
    return lvl;
}

inline void write(Level lvl, const std::string& msg) {
    if (lvl > level()) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[lgv:%s] %s\n", names[static_cast<int>(lvl)], msg.c_str());
}

inline void error(const std::string& m) { write(Level::Error, m); }
inline void warn(const std::string& m) { write(Level::Warn, m); }
inline void info(const std::string& m) { write(Level::Info, m); }
inline void debug(const std::string& m) { write(Level::Debug, m); }

} // namespace lgv::log
