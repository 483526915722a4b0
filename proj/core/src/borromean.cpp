#include "isharp/borromean.hpp"

#include "isharp/cone.hpp"
#include "isharp/linalg.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>

namespace isharp {

long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

static void check_genus(int g)
{
    if (g < 1 || g > 12)
        throw PreconditionError("genus must lie in 1..12");
}

MonomialModule MonomialModule::at_least(int g, int k)
{
    check_genus(g);
    MonomialModule m(g);
    uint32_t n = 1u << (2 * g);
    for (uint32_t s = 0; s < n; ++s)
        if (std::popcount(s) >= k)
            m.mons_.insert(s);
    return m;
}

MonomialModule& MonomialModule::operator+=(const MonomialModule& o)
{
    if (o.g_ != g_)
        throw StructuralError("monomial modules over different genera");
    mons_.insert(o.mons_.begin(), o.mons_.end());
    return *this;
}

bool MonomialModule::is_submodule() const
{
    for (uint32_t s : mons_)
        for (int i = 0; i < 2 * g_; ++i) {
            uint32_t bit = 1u << i;
            if (!(s & bit) && !mons_.count(s | bit))
                return false;
        }
    return true;
}

MonomialModule gamma_slice(int g, int n, int i2)
{
    check_genus(g);
    if (n < 2 * g)
        throw PreconditionError("suture slices are modelled only for n >= 2g (n = " +
                                std::to_string(n) + ", g = " + std::to_string(g) + ")");
    if (((i2 - (n - 1)) % 2) != 0)
        throw PreconditionError("grading " + std::to_string(i2) + "/2 does not occur for n = " +
                                std::to_string(n));
    int k2 = std::abs(i2) + 2 * g - (n - 1);
    int k = k2 / 2;
    if (k > 2 * g)
        return MonomialModule(g);
    return MonomialModule::at_least(g, k < 0 ? 0 : k);
}

long khi_borromean(int g, int i)
{
    check_genus(g);
    if (std::abs(i) > g)
        return 0;
    return binomial(2 * g, g + i);
}

static long pow4(int g)
{
    return 1L << (2 * g);
}

long circle_bundle_dim_module(int g, long m)
{
    if (g < 2)
        throw PreconditionError("the block computation needs genus g >= 2");
    if (m == 0)
        throw PreconditionError("deg Y = 0 unsupported: the Euler number m must be nonzero");
    m = std::labs(m);
    if (m >= 2L * g - 1)
        return pow4(g) * m;

    long src = 0;
    for (int i = -(g - 1); i <= g - 1; ++i)
        src += MonomialModule::full(g).dim();

    long tgt = 0, im = 0;
    // target slices j = j2/2 with |j| <= g - 1 - m/2
    for (long j2 = -2L * (g - 1) + m; j2 <= 2L * (g - 1) - m; j2 += 2) {
        tgt += MonomialModule::full(g).dim();
        MonomialModule image(g);
        for (int i = -(g - 1); i <= g - 1; ++i) {
            if (2L * i + m == j2)
                image += MonomialModule::at_least(g, i + g);
            if (2L * i - m == j2)
                image += MonomialModule::at_least(g, g - i);
        }
        im += image.dim();
    }
    return src + tgt - 2 * im;
}

long circle_bundle_dim_formula(int g, long m)
{
    if (g < 2)
        throw PreconditionError("the closed form needs genus g >= 2");
    if (m == 0)
        throw PreconditionError("deg Y = 0 unsupported: the Euler number m must be nonzero");
    m = std::labs(m);
    const int n = 2 * g;
    long base = pow4(g) * m;
    if (m >= 2L * g - 1)
        return base;
    auto lower = [&](int j) {
        long s = 0;
        for (int i = 0; i < j; ++i)
            s += binomial(n, i);
        return s;
    };
    if (m % 2 == 0) {
        long l = m / 2;
        long a = 0, b = 0;
        for (long j = 1; j <= g - l - 1; ++j)
            a += lower(static_cast<int>(j));
        for (long i = 0; i <= g - l - 1; ++i)
            b += binomial(n, static_cast<int>(i));
        return base + 4 * a + 2 * b;
    }
    long l = (m + 1) / 2;
    long a = 0;
    for (long j = 1; j <= g - l; ++j)
        a += lower(static_cast<int>(j));
    return base + 4 * a;
}

// Source block at base grading s of the exterior-algebra cone: v is the identity on
// monomials of degree <= s + g, h sends x_S to x_{S^c} on degree >= s + g.
static ConeBlock exterior_block(int g, int s)
{
    ConeBlock b;
    uint32_t n = 1u << (2 * g);
    uint32_t all = n - 1;
    b.source_dim = n;
    b.v_cols.resize(n);
    b.h_cols.resize(n);
    for (uint32_t S = 0; S < n; ++S) {
        int deg = std::popcount(S);
        if (deg <= s + g)
            b.v_cols[S].emplace(S, 1);
        if (deg >= s + g)
            b.h_cols[S].emplace(all & ~S, 1);
    }
    return b;
}

static long exterior_cone(int g, long u, long v, int n_pairs, int extra,
                          std::function<int(long)> base)
{
    std::map<int, ConeBlock> cache;
    ConeLayout L;
    L.target_dim = 1u << (2 * g);
    L.shift = u;
    L.threshold = g + extra;
    L.scan_lo = -v * (L.threshold + n_pairs + 3);
    L.scan_hi = v * (L.threshold + n_pairs + 3);
    L.base_index = std::move(base);
    L.block = [&cache, g](int s) -> const ConeBlock& {
        auto it = cache.find(s);
        if (it == cache.end())
            it = cache.emplace(s, exterior_block(g, s)).first;
        return it->second;
    };
    return solve_cone(L).dimension;
}

long circle_bundle_dim_cone(int g, long m, int extra_window)
{
    check_genus(g);
    if (m == 0)
        throw PreconditionError("deg Y = 0 unsupported: the Euler number m must be nonzero");
    return exterior_cone(g, m, 1, 0, extra_window, [](long t) { return static_cast<int>(t); });
}

static void check_pairs(const std::vector<SeifertPair>& pairs)
{
    for (auto& p : pairs)
        if (p.v < 1)
            throw PreconditionError("Seifert multiplicities v_i must be positive");
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (std::gcd(pairs[i].v, pairs[j].v) != 1)
                throw PreconditionError("gcd(v_i, v_j) = 1 is required for any i != j (v = " +
                                        std::to_string(pairs[i].v) + ", " +
                                        std::to_string(pairs[j].v) + ")");
}

SeifertData seifert_invariants(long m, const std::vector<SeifertPair>& pairs)
{
    check_pairs(pairs);
    SeifertData d;
    for (auto& p : pairs)
        d.v *= p.v;
    d.u = m * d.v;
    for (auto& p : pairs)
        d.u += (d.v / p.v) * p.r;
    return d;
}

static long mod_inverse(long a, long m)
{
    // extended Euclid, m >= 1
    long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw StructuralError("no modular inverse");
    return ((t % m) + m) % m;
}

long seifert_base_index(long S, const std::vector<SeifertPair>& pairs)
{
    long v = 1;
    for (auto& p : pairs)
        v *= p.v;
    long rest = S;
    for (auto& p : pairs) {
        if (p.v == 1)
            continue;
        long vp = v / p.v;
        long ti = ((S % p.v + p.v) % p.v) * mod_inverse(vp, p.v) % p.v;
        rest -= ti * vp;
    }
    return rest / v;  // exact: rest is divisible by v
}

long seifert_dim(int g, long m, const std::vector<SeifertPair>& pairs, int extra_window)
{
    check_genus(g);
    auto d = seifert_invariants(m, pairs);
    if (d.u == 0)
        throw PreconditionError("deg Y = 0 unsupported: m + sum r_i/v_i must be nonzero");
    return exterior_cone(g, d.u, d.v, static_cast<int>(pairs.size()), extra_window,
                         [pairs](long S) { return static_cast<int>(seifert_base_index(S, pairs)); });
}

long seifert_large_dim(int g, long m, const std::vector<SeifertPair>& pairs)
{
    check_genus(g);
    auto d = seifert_invariants(m, pairs);
    if (std::labs(d.u) < 2L * g + d.v - 2 || d.u == 0)
        throw PreconditionError("large-slope regime needs |v deg Y| >= 2g + v - 2");
    return pow4(g) * std::labs(d.u);
}

}  // namespace isharp
