#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fixtures {

inline std::string path(const std::string& name) {
    return std::string(FIXTURE_DIR "/") + name;
}

inline std::string slurp(const std::string& name) {
    std::ifstream file(path(name), std::ios::binary);
    if (!file) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace fixtures
