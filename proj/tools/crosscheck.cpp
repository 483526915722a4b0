#include "crosscheck.hpp"

#include <cstdlib>

namespace isharp::tool {

std::vector<std::pair<long, long>> slope_grid()
{
    std::vector<std::pair<long, long>> g;
    for (auto [p, q] : std::vector<std::pair<long, long>>{
             {1, 1}, {2, 1}, {3, 1}, {5, 1}, {1, 2}, {1, 3}, {2, 3}, {5, 2}, {7, 3}}) {
        g.push_back({p, q});
        g.push_back({-p, q});
    }
    return g;
}

static CheckRow row(std::string check, std::string subject, std::map<std::string, long> values)
{
    CheckRow r{std::move(check), std::move(subject), std::move(values), true};
    long first = r.values.begin()->second;
    for (auto& [k, v] : r.values)
        r.agree = r.agree && v == first;
    return r;
}

static std::string slope_str(long p, long q)
{
    return std::to_string(p) + "/" + std::to_string(q);
}

std::vector<CheckRow> crosscheck_knot(const std::string& name, const KnotComplex& k)
{
    std::vector<CheckRow> out;
    require_valid(k);
    KnotConeData data(k);
    bool thin = k.alexander.has_value() && k.source == "thin";
    for (auto [p, q] : slope_grid()) {
        std::map<std::string, long> v;
        v["cone"] = surgery_cone_dim(data, p, q);
        if (thin)
            v["closed-form"] = thin_surgery_formula(k.alexander->norm(), k.tau, p, q);
        if (q == 1 && p >= 1 && k.genus == 1)
            v["ladder"] = genus_one_positive_ladder(k, p);
        if (q == 1 && p >= 2L * k.genus - 1 && p >= 1)
            v["large-surgery"] = large_surgery_dim(k, p);
        out.push_back(row("surgery", name + " @ " + slope_str(p, q), v));
    }
    // mirror symmetry on the integer part of the grid
    auto m = mirror(k);
    KnotConeData mdata(m);
    for (long p : {1L, 2L, 3L}) {
        out.push_back(row("mirror", name + " @ " + slope_str(p, 1),
                          {{"knot", surgery_cone_dim(data, p, 1)},
                           {"mirror@-p", surgery_cone_dim(mdata, -p, 1)}}));
    }
    return out;
}

std::vector<CheckRow> crosscheck_circle_bundles()
{
    std::vector<CheckRow> out;
    for (int g = 2; g <= 4; ++g)
        for (long m = -(2L * g + 2); m <= 2L * g + 2; ++m) {
            if (m == 0)
                continue;
            out.push_back(row("circle-bundle",
                              "g=" + std::to_string(g) + " m=" + std::to_string(m),
                              {{"module", circle_bundle_dim_module(g, m)},
                               {"closed-form", circle_bundle_dim_formula(g, m)},
                               {"cone", circle_bundle_dim_cone(g, m)}}));
        }
    return out;
}

std::vector<CheckRow> crosscheck_seifert()
{
    std::vector<CheckRow> out;
    const std::vector<std::vector<SeifertPair>> shapes = {
        {}, {{1, 1}}, {{-1, 1}}, {{1, 1}, {1, 1}}, {{2, 1}, {-1, 1}}};
    for (int g = 2; g <= 3; ++g)
        for (long m = -(2L * g + 1); m <= 2L * g + 1; ++m)
            for (auto& pairs : shapes) {
                long e = m;
                for (auto& p : pairs)
                    e += p.r;
                if (e == 0 || std::labs(e) > 2L * g + 1)
                    continue;
                std::string subj = "g=" + std::to_string(g) + " m=" + std::to_string(m) +
                                   " pairs=" + std::to_string(pairs.size());
                out.push_back(row("seifert", subj,
                                  {{"seifert", seifert_dim(g, m, pairs)},
                                   {"circle-bundle", circle_bundle_dim_formula(g, e)}}));
            }
    return out;
}

std::vector<CheckRow> crosscheck_whitehead()
{
    std::vector<CheckRow> out;
    SutureDimProfile unknot{0, 0, std::nullopt};
    for (long t = -3; t <= 3; ++t) {
        auto w = whitehead_double_pm1({t, unknot});
        auto k = thin_from_alexander(twist_knot_alexander(static_cast<int>(t)),
                                     twist_knot_tau(static_cast<int>(t)));
        std::string subj = "D+_" + std::to_string(t) + "(U)";
        out.push_back(row("whitehead", subj + " @ +1",
                          {{"formula", w.plus_one}, {"cone", surgery_cone_dim(k, 1, 1)}}));
        out.push_back(row("whitehead", subj + " @ -1",
                          {{"formula", w.minus_one}, {"cone", surgery_cone_dim(k, -1, 1)}}));
        out.push_back(row("whitehead", subj + " tau", {{"formula", w.tau}, {"model", k.tau}}));
    }
    return out;
}

std::vector<CheckRow> crosscheck_all()
{
    std::vector<CheckRow> out;
    for (auto& e : catalog()) {
        auto rows = crosscheck_knot(e.name, catalog_knot(e));
        out.insert(out.end(), rows.begin(), rows.end());
    }
    for (auto* f : {&crosscheck_circle_bundles, &crosscheck_seifert, &crosscheck_whitehead}) {
        auto rows = (*f)();
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

}  // namespace isharp::tool
