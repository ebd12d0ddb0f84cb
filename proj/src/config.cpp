#include "atlas/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace atlas {
namespace {

long long parsePositive(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::domain_error(what + " must be a positive integer, got '" + text + "'");
    }
    if (used != text.size() || value < 1)
        throw std::domain_error(what + " must be a positive integer, got '" + text + "'");
    return value;
}

std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t\r");
    std::size_t hi = s.find_last_not_of(" \t\r");
    return lo == std::string::npos ? std::string() : s.substr(lo, hi - lo + 1);
}

}  // namespace

Settings loadConfigFile(const std::string& path, Settings base) {
    std::ifstream in(path);
    if (!in)
        throw std::domain_error("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config line is not key=value: '" + stripped + "'");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key == "enum_budget")
            base.enumBudget = parsePositive(value, "enum_budget");
        else if (key == "tree_t_max")
            base.treeMax = static_cast<int>(parsePositive(value, "tree_t_max"));
        else
            throw std::domain_error("unknown config key '" + key + "'");
    }
    return base;
}

Settings applyEnvironment(Settings base) {
    if (const char* budget = std::getenv("ORBIT_ATLAS_BUDGET"))
        base.enumBudget = parsePositive(budget, "ORBIT_ATLAS_BUDGET");
    return base;
}

}  // namespace atlas
