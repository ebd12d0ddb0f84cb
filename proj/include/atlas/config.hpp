#pragma once

#include <string>

#include "atlas/counting.hpp"
#include "atlas/fan.hpp"

namespace atlas {

// Budgets and bounds shared by the enumeration-backed operations.
// Precedence, lowest to highest: defaults, config file, the
// ORBIT_ATLAS_BUDGET environment variable, explicit flags.
struct Settings {
    long long enumBudget = kDefaultEnumBudget;
    int treeMax = kDefaultTreeMax;
};

// key=value file with keys enum_budget and tree_t_max; blank lines and
// lines starting with '#' are skipped. Unknown keys are rejected.
Settings loadConfigFile(const std::string& path, Settings base = {});

// Applies ORBIT_ATLAS_BUDGET when set; rejects unparsable values.
Settings applyEnvironment(Settings base);

}  // namespace atlas
