#include "hive/hex.hpp"

#include <ostream>
#include <stdexcept>

namespace hive {

std::string coordString(const Hex& c) {
    return std::to_string(c.q) + "," + std::to_string(c.r);
}

std::ostream& operator<<(std::ostream& os, const Hex& c) { return os << coordString(c); }

Hex hexFromString(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("hex coordinate needs 'q,r': " + s);
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad hex coordinate: " + s);
    }
}

}  // namespace hive
