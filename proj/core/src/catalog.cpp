#include "isharp/catalog.hpp"

namespace isharp {

Laurent twist_knot_alexander(int t)
{
    return Laurent{{1, -t}, {0, 2L * t + 1}, {-1, -t}};
}

int twist_knot_tau(int t)
{
    return t < 0 ? 1 : 0;
}

Laurent torus_2_alexander(int n)
{
    return staircase_polynomial(n);
}

static std::string twist_name(int t)
{
    if (t == 0)
        return "twist0";
    return (t > 0 ? "twist+" : "twist-") + std::to_string(t > 0 ? t : -t);
}

static std::vector<CatalogEntry> make_catalog()
{
    std::vector<CatalogEntry> c;
    c.push_back({"unknot", {"U", "0_1"}, Laurent{{0, 1}}, 0, "trivial knot"});
    c.push_back({"trefoil-right", {"trefoil", "T(2,3)", "3_1"}, torus_2_alexander(1), 1,
                 "right-handed trefoil"});
    c.push_back({"trefoil-left", {"T(2,3)-mirror", "3_1-mirror"}, torus_2_alexander(1), -1,
                 "left-handed trefoil"});
    c.push_back({"fig8", {"figure-eight", "4_1"}, twist_knot_alexander(1), 0, "figure-eight"});
    c.push_back({"5_2", {}, Laurent{{1, 2}, {0, -3}, {-1, 2}}, -1, "5_2 knot"});
    c.push_back({"5_2-mirror", {"mirror-5_2"}, Laurent{{1, 2}, {0, -3}, {-1, 2}}, 1,
                 "mirror of 5_2"});
    for (int n = 2; n <= 5; ++n) {
        std::string t = "T(2," + std::to_string(2 * n + 1) + ")";
        c.push_back({t, {}, torus_2_alexander(n), n, "positive torus knot"});
        c.push_back({t + "-mirror", {"mirror-" + t}, torus_2_alexander(n), -n,
                     "negative torus knot"});
    }
    for (int t = -3; t <= 3; ++t)
        c.push_back({twist_name(t), {}, twist_knot_alexander(t), twist_knot_tau(t),
                     "twist knot with " + std::to_string(t) + " twists"});
    return c;
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry& find_catalog(const std::string& name)
{
    for (auto& e : catalog()) {
        if (e.name == name)
            return e;
        for (auto& a : e.aliases)
            if (a == name)
                return e;
    }
    throw LookupError("unknown catalog knot '" + name + "' (try the catalog subcommand)");
}

KnotComplex catalog_knot(const CatalogEntry& e)
{
    return thin_from_alexander(e.alexander, e.tau, e.name);
}

KnotComplex catalog_knot(const std::string& name)
{
    return catalog_knot(find_catalog(name));
}

}  // namespace isharp
