#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace isharp;
using testsupport::choose;
using testsupport::circle_bundle_oracle;

TEST_CASE("binomials")
{
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, 5) == 0);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == choose(n, k));
}

TEST_CASE("monomial modules")
{
    for (int g = 1; g <= 4; ++g)
        for (int k = 0; k <= 2 * g + 1; ++k) {
            auto m = MonomialModule::at_least(g, k);
            long expect = 0;
            for (int j = k; j <= 2 * g; ++j)
                expect += choose(2 * g, j);
            CHECK(m.dim() == expect);
            CHECK(m.is_submodule());
        }
    CHECK(MonomialModule::full(3).dim() == 64);

    MonomialModule lone(1);
    lone.insert(1);  // x_1 without x_1 x_2
    CHECK_FALSE(lone.is_submodule());
    lone.insert(3);
    CHECK(lone.is_submodule());

    auto a = MonomialModule::at_least(2, 3);
    a += MonomialModule::at_least(2, 1);
    CHECK(a == MonomialModule::at_least(2, 1));
    MonomialModule other(3);
    CHECK_THROWS_AS(a += other, StructuralError);
}

TEST_CASE("suture slices of the Borromean sum")
{
    for (int i2 : {3, -3}) {
        auto m = gamma_slice(1, 2, i2);
        CHECK(m.dim() == 1);
        CHECK(m.contains(3));
    }
    for (int i2 : {1, -1}) {
        auto m = gamma_slice(1, 2, i2);
        CHECK(m.dim() == 3);
        CHECK(m.contains(1));
        CHECK(m.contains(2));
        CHECK(m.contains(3));
    }
    CHECK(gamma_slice(2, 5, 0).dim() == 16);
    CHECK_THROWS_AS(gamma_slice(2, 3, 0), PreconditionError);
    CHECK_THROWS_AS(gamma_slice(1, 2, 0), PreconditionError);
}

TEST_CASE("knot homology of the Borromean sum")
{
    CHECK(khi_borromean(1, -1) == 1);
    CHECK(khi_borromean(1, 0) == 2);
    CHECK(khi_borromean(1, 1) == 1);
    CHECK(khi_borromean(2, 0) == 6);
    for (int g = 1; g <= 4; ++g) {
        long total = 0;
        for (int i = -g; i <= g; ++i)
            total += khi_borromean(g, i);
        CHECK(total == (1L << (2 * g)));
    }
}

TEST_CASE("circle bundle closed form")
{
    CHECK(circle_bundle_dim_formula(2, 3) == 48);
    CHECK(circle_bundle_dim_formula(2, 2) == 34);
    CHECK(circle_bundle_dim_formula(2, 1) == 20);
    CHECK(circle_bundle_dim_formula(3, 5) == 320);
    CHECK(circle_bundle_dim_formula(3, 4) == 258);
    CHECK(circle_bundle_dim_formula(3, 3) == 196);
    CHECK_THROWS_AS(circle_bundle_dim_formula(2, 0), PreconditionError);
    CHECK_THROWS_AS(circle_bundle_dim_module(2, 0), PreconditionError);
    CHECK_THROWS_AS(circle_bundle_dim_cone(2, 0), PreconditionError);
}

TEST_CASE("circle bundles: module, formula and cone agree")
{
    for (int g = 2; g <= 5; ++g)
        for (long m = -(2L * g + 2); m <= 2L * g + 2; ++m) {
            if (m == 0)
                continue;
            CAPTURE(g);
            CAPTURE(m);
            long f = circle_bundle_dim_formula(g, m);
            CHECK(f == circle_bundle_oracle(g, m));
            CHECK(circle_bundle_dim_module(g, m) == f);
            if (g <= 4)
                CHECK(circle_bundle_dim_cone(g, m) == f);
            if (std::labs(m) >= 2L * g - 1)
                CHECK(f == (1L << (2 * g)) * std::labs(m));
        }
}

TEST_CASE("circle bundle cone is stable under a larger window")
{
    for (long m : {1L, 2L, -3L, 6L})
        CHECK(circle_bundle_dim_cone(3, m, 0) == circle_bundle_dim_cone(3, m, 3));
}

TEST_CASE("Seifert invariants")
{
    auto d = seifert_invariants(3, {{1, 2}});
    CHECK(d.v == 2);
    CHECK(d.u == 7);
    auto e = seifert_invariants(1, {{1, 2}, {1, 3}});
    CHECK(e.v == 6);
    CHECK(e.u == 6 + 3 + 2);
    CHECK_THROWS_AS(seifert_invariants(1, {{1, 2}, {1, 4}}), PreconditionError);
    CHECK_THROWS_AS(seifert_invariants(1, {{1, 0}}), PreconditionError);
}

TEST_CASE("Seifert dimensions")
{
    CHECK(seifert_dim(2, 1, {{1, 1}, {1, 1}}) == 48);
    CHECK(seifert_dim(2, 2, {}) == 34);
    CHECK(seifert_dim(2, 3, {{1, 2}}) == seifert_large_dim(2, 3, {{1, 2}}));
    CHECK(seifert_large_dim(2, 3, {{1, 2}}) == 112);
    CHECK_THROWS_AS(seifert_dim(2, -1, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(seifert_large_dim(2, 1, {}), PreconditionError);
}

TEST_CASE("Seifert gate: all v_i = 1 reduces to circle bundles")
{
    const std::vector<std::vector<SeifertPair>> shapes = {
        {}, {{1, 1}}, {{-1, 1}}, {{1, 1}, {1, 1}}, {{2, 1}, {-1, 1}}, {{-2, 1}}};
    for (int g = 2; g <= 3; ++g)
        for (long m = -(2L * g + 3); m <= 2L * g + 3; ++m)
            for (auto& pairs : shapes) {
                long e = m;
                for (auto& p : pairs)
                    e += p.r;
                if (e == 0 || std::labs(e) > 2L * g + 1)
                    continue;
                CHECK(seifert_dim(g, m, pairs) == circle_bundle_oracle(g, e));
            }
}
