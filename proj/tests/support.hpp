#pragma once

#include "isharp/isharp.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace isharp;

// A random staircase-plus-squares complex, together with the Alexander polynomial
// predicted from its pieces (independent of how the builder places Z/2 gradings).
struct RandomThin {
    KnotComplex knot;
    Laurent predicted_delta;
    int squares = 0;
};

inline RandomThin random_thin(std::mt19937& rng, int index)
{
    std::uniform_int_distribution<int> tau_d(-4, 4), nsq(0, 3), center(0, 3), sign(0, 1);
    int tau = tau_d(rng);
    std::vector<Fragment> parts{staircase_fragment(tau)};
    Laurent delta = staircase_polynomial(tau);
    int n = nsq(rng);
    int count = 0;
    auto add_square = [&](int s, int eps) {
        parts.push_back(build_square(s, eps, "r" + std::to_string(count++) + "."));
        delta += square_polynomial(s).scaled(eps);
    };
    for (int i = 0; i < n; ++i) {
        int s = center(rng);
        int eps = sign(rng) ? 1 : -1;
        add_square(s, eps);
        if (s != 0)
            add_square(-s, eps);
    }
    RandomThin r;
    r.knot = assemble(parts, tau, "random" + std::to_string(index), "random");
    r.knot.alexander = delta;
    r.predicted_delta = delta;
    r.squares = count;
    return r;
}

inline std::vector<RandomThin> random_thin_batch(int n, unsigned seed = 20261016)
{
    std::mt19937 rng(seed);
    std::vector<RandomThin> out;
    for (int i = 0; i < n; ++i)
        out.push_back(random_thin(rng, i));
    return out;
}

// The torsion-order-one closed form, evaluated with the dimension of the model in
// place of ||delta|| (they agree whenever no terms of delta cancel).
inline long thin_oracle(long dim, int tau, long p, long q)
{
    long a = std::labs(tau);
    if (tau == 0)
        return (dim - 1) * q / 2 + std::labs(p);
    long sgn = tau > 0 ? 1 : -1;
    return (dim + 2 * a - 3) * q / 2 + std::labs(sgn * p - q * (2 * a - 1));
}

inline std::vector<std::pair<long, long>> slope_grid()
{
    std::vector<std::pair<long, long>> g;
    for (auto [p, q] : std::vector<std::pair<long, long>>{
             {1, 1}, {2, 1}, {3, 1}, {5, 1}, {1, 2}, {1, 3}, {2, 3}, {5, 2}, {7, 3}}) {
        g.push_back({p, q});
        g.push_back({-p, q});
    }
    return g;
}

inline long choose(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

// closed form for circle bundles, written out directly from the three cases
inline long circle_bundle_oracle(int g, long m)
{
    m = std::labs(m);
    long four_g = 1L << (2 * g);
    if (m >= 2L * g - 1)
        return four_g * m;
    long total = four_g * m;
    if (m % 2 == 0) {
        long l = m / 2;
        for (long j = 1; j <= g - l - 1; ++j)
            for (long i = 0; i < j; ++i)
                total += 4 * choose(2 * g, static_cast<int>(i));
        for (long i = 0; i <= g - l - 1; ++i)
            total += 2 * choose(2 * g, static_cast<int>(i));
    } else {
        long l = (m + 1) / 2;
        for (long j = 1; j <= g - l; ++j)
            for (long i = 0; i < j; ++i)
                total += 4 * choose(2 * g, static_cast<int>(i));
    }
    return total;
}

}  // namespace testsupport
