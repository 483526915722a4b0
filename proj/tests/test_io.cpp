#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace isharp;

namespace {

std::string error_of(const std::string& text)
{
    try {
        parse_knot_spec(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("thin knot spec")
{
    auto k = parse_knot_spec(
        R"({"name": "m52", "alexander": [[2, 1], [-3, 0], [2, -1]], "tau": 1})");
    CHECK(k.name == "m52");
    CHECK(k.dim() == 7);
    CHECK(k.tau == 1);
    CHECK(surgery_cone_dim(k, 1, 1) == 3);
}

TEST_CASE("explicit knot spec")
{
    auto k = parse_knot_spec(R"({
        "name": "C1",
        "generators": [{"id": "x", "alex": -1, "z2": 0},
                       {"id": "y", "alex": 0, "z2": 1},
                       {"id": "z", "alex": 1, "z2": 0}],
        "d_plus": [["y", "z", 1, 1]],
        "d_minus": [["y", "x", 1, 1]],
        "genus": 1, "tau": 1})");
    CHECK(k.source == "explicit");
    CHECK(validate(k).ok());
    CHECK(invariant_signature(k) == invariant_signature(build_staircase(1)));
}

TEST_CASE("parse errors name the field")
{
    CHECK(error_of("{not json").find("malformed JSON") != std::string::npos);
    CHECK(error_of("[]").find("JSON object") != std::string::npos);
    CHECK(error_of(R"({"alexander": [[1, 0]]})").find("'tau'") != std::string::npos);
    CHECK(error_of(R"({"alexander": [[1, 1], [1, 0]], "tau": 0})").find("not symmetric") !=
          std::string::npos);
    CHECK(error_of(R"({"alexander": [[1, "x"]], "tau": 0})").find("alexander[0]") !=
          std::string::npos);
    CHECK(error_of(R"({"generators": [{"id": "a", "z2": 0}], "genus": 0, "tau": 0})")
              .find("generators[0]") != std::string::npos);
    CHECK(error_of(R"({"generators": [], "d_plus": [["a", "b"]], "genus": 0, "tau": 0})")
              .find("d_plus") != std::string::npos);
    CHECK(error_of(R"({"name": "x"})").find("alexander") != std::string::npos);
}

TEST_CASE("thin spec outside the thin class")
{
    CHECK_THROWS_AS(parse_knot_spec(R"({"alexander": [[2, 1], [-3, 0], [2, -1]], "tau": 0})"),
                    ParseError);
}

TEST_CASE("knot specs round-trip")
{
    for (auto& e : catalog()) {
        auto k = catalog_knot(e);
        auto back = parse_knot_spec(knot_spec_to_json(k));
        CHECK(invariant_signature(back) == invariant_signature(k));
        CHECK(back.tau == k.tau);
        CHECK(back.genus == k.genus);
        REQUIRE(back.alexander.has_value());
        CHECK(*back.alexander == *k.alexander);
    }
}

TEST_CASE("companion profiles")
{
    auto p = parse_companion_profile(R"({"tau": 1, "base_dim": 2, "gamma0": 4})");
    CHECK(p.tau == 1);
    CHECK(p.base_dim == 2);
    CHECK(p.gamma0 == 4);
    auto q = parse_companion_profile(R"({"tau": -1, "base_dim": 0})");
    CHECK_FALSE(q.gamma0.has_value());
    CHECK_THROWS_AS(parse_companion_profile(R"({"tau": 1, "base_dim": -1})"), ParseError);
    CHECK_THROWS_AS(parse_companion_profile(R"({"base_dim": 1})"), ParseError);
}

TEST_CASE("surgery results round-trip")
{
    std::vector<SurgeryResult> all;
    for (auto name : {"fig8", "T(2,5)-mirror", "5_2-mirror"}) {
        auto k = catalog_knot(name);
        for (auto [p, q] : testsupport::slope_grid())
            all.push_back(surgery_dim(k, p, q));
        all.push_back(zero_surgery_dims(k));
    }
    SurgeryResult odd;
    odd.p = -7;
    odd.q = 3;
    odd.pathway = Pathway::Ladder;
    odd.knot = "x \"quoted\"";
    odd.mirrored = true;
    odd.table = {{-2, std::nullopt}, {5, 0}};
    all.push_back(odd);

    for (auto& r : all)
        CHECK(surgery_result_from_json(to_json(r)) == r);
    CHECK(surgery_results_from_json(to_json(all)) == all);
    CHECK_THROWS_AS(surgery_result_from_json(R"({"p": 1})"), ParseError);
    CHECK_THROWS_AS(surgery_results_from_json("{}"), ParseError);
    CHECK_THROWS_AS(
        surgery_result_from_json(R"({"knot": "k", "p": 1, "q": 1, "pathway": "nope"})"),
        ParseError);
}
