#pragma once

#include "isharp/isharp.hpp"

#include <map>
#include <string>
#include <vector>

namespace isharp::tool {

struct CheckRow {
    std::string check;
    std::string subject;
    std::map<std::string, long> values;  // pathway -> value
    bool agree = true;
};

// slope grid of the thin-knot agreement check
std::vector<std::pair<long, long>> slope_grid();

std::vector<CheckRow> crosscheck_knot(const std::string& name, const KnotComplex& k);
std::vector<CheckRow> crosscheck_circle_bundles();
std::vector<CheckRow> crosscheck_seifert();
std::vector<CheckRow> crosscheck_whitehead();
std::vector<CheckRow> crosscheck_all();

}  // namespace isharp::tool
