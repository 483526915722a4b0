#pragma once

#include "isharp/knotcx.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace isharp {

struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    Laurent alexander;
    int tau = 0;
    std::string note;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_catalog(const std::string& name);
KnotComplex catalog_knot(const std::string& name);
KnotComplex catalog_knot(const CatalogEntry& e);

// twist knot with t full twists: -t T + (2t+1) - t T^-1, tau = 1 if t < 0 else 0
Laurent twist_knot_alexander(int t);
int twist_knot_tau(int t);
// T(2, 2n+1)
Laurent torus_2_alexander(int n);

}  // namespace isharp
