#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace isharp;
using testsupport::RandomThin;

namespace {

struct Subject {
    std::string name;
    KnotComplex knot;
    Laurent delta;
};

const std::vector<Subject>& subjects()
{
    static const std::vector<Subject> all = [] {
        std::vector<Subject> v;
        for (auto& e : catalog())
            v.push_back({e.name, catalog_knot(e), e.alexander});
        for (auto& r : testsupport::random_thin_batch(50))
            v.push_back({r.knot.name, r.knot, r.predicted_delta});
        return v;
    }();
    return all;
}

// nonzero rational depending only on t and a seed
Scalar scale_for(long t, unsigned seed)
{
    std::mt19937 rng(seed * 7919u + static_cast<unsigned>(t + 1000));
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), sgn(0, 1);
    return make_scalar((sgn(rng) ? 1 : -1) * num(rng), den(rng));
}

}  // namespace

TEST_CASE("the random batch is reproducible and varied")
{
    auto a = testsupport::random_thin_batch(50);
    auto b = testsupport::random_thin_batch(50);
    REQUIRE(a.size() == 50);
    int with_squares = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(invariant_signature(a[i].knot) == invariant_signature(b[i].knot));
        with_squares += a[i].squares > 0;
    }
    CHECK(with_squares > 10);
}

TEST_CASE("differentials square to zero and anticommute")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        auto& k = s.knot;
        CHECK(compose(k.d_plus, k.d_plus).is_zero());
        CHECK(compose(k.d_minus, k.d_minus).is_zero());
        CHECK((compose(k.d_plus, k.d_minus) + compose(k.d_minus, k.d_plus)).is_zero());
    }
}

TEST_CASE("differentials shift the grading by one and flip Z/2")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        auto& k = s.knot;
        auto& sp = *k.space;
        for (auto& [t, src, v] : k.d_plus.entries()) {
            auto& a = sp[sp.index_of(src)];
            auto& b = sp[sp.index_of(t)];
            CHECK(b.alex2 - a.alex2 == 2);
            CHECK(a.z2 != b.z2);
        }
        for (auto& [t, src, v] : k.d_minus.entries()) {
            auto& a = sp[sp.index_of(src)];
            auto& b = sp[sp.index_of(t)];
            CHECK(b.alex2 - a.alex2 == -2);
            CHECK(a.z2 != b.z2);
        }
    }
}

TEST_CASE("graded dimensions are symmetric")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        auto d = grading_dims(s.knot);
        auto r = d;
        std::reverse(r.begin(), r.end());
        CHECK(d == r);
        CHECK(validate(s.knot).ok());
    }
}

TEST_CASE("graded Euler characteristic is +-Delta")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        auto chi = euler_characteristic(s.knot);
        CHECK((chi == s.delta || chi == -s.delta));
    }
}

TEST_CASE("surgery dimensions: parity, lower bound and the thin oracle")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        KnotConeData data(s.knot);
        for (auto [p, q] : testsupport::slope_grid()) {
            CAPTURE(p);
            CAPTURE(q);
            long d = surgery_cone_dim(data, p, q);
            CHECK((d - p) % 2 == 0);
            CHECK(d >= std::labs(p));
            CHECK(d == testsupport::thin_oracle(static_cast<long>(s.knot.dim()), s.knot.tau, p, q));
        }
    }
}

TEST_CASE("cone dimensions are stable under a wider window")
{
    SurgeryOptions wide;
    wide.extra_window = 4;
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        KnotConeData data(s.knot);
        for (auto [p, q] : testsupport::slope_grid())
            CHECK(surgery_cone_dim(data, p, q) == surgery_cone_dim(data, p, q, wide));
    }
}

TEST_CASE("mirroring negates the slope")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        KnotConeData data(s.knot);
        KnotConeData mdata(mirror(s.knot));
        for (auto [p, q] : testsupport::slope_grid())
            CHECK(surgery_cone_dim(data, p, q) == surgery_cone_dim(mdata, -p, q));
    }
}

TEST_CASE("cone dimensions do not depend on the scalars of h")
{
    for (auto& s : subjects()) {
        CAPTURE(s.name);
        KnotConeData data(s.knot);
        for (unsigned seed : {1u, 2u, 3u}) {
            SurgeryOptions opt;
            opt.h_scale = [seed](long t) { return scale_for(t, seed); };
            for (auto [p, q] : testsupport::slope_grid())
                CHECK(surgery_cone_dim(data, p, q) == surgery_cone_dim(data, p, q, opt));
        }
        for (int sgr = -s.knot.genus; sgr <= s.knot.genus; ++sgr)
            CHECK(zero_surgery_at(s.knot, sgr) == zero_surgery_at(s.knot, sgr, make_scalar(-5, 3)));
    }
}
