#include "isharp/cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace isharp {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// ---- generic cone ------------------------------------------------------------------

static void check_far_block(const ConeBlock& b, size_t tdim, bool high, int base)
{
    const auto& iso = high ? b.v_cols : b.h_cols;
    const auto& zero = high ? b.h_cols : b.v_cols;
    bool ok = b.source_dim == tdim && rank_of_columns(iso) == tdim;
    for (auto& c : zero)
        ok = ok && c.empty();
    if (!ok)
        throw StructuralError("cone block at base index " + std::to_string(base) +
                              " is not a far block: truncation threshold too small");
}

ConeTally solve_cone(const ConeLayout& L)
{
    const int G = L.threshold;
    const long u = L.shift;
    if (L.base_index(L.scan_lo) >= -G || L.base_index(L.scan_hi) <= G)
        throw StructuralError("cone scan range does not reach the far region");

    auto far_high = [&](long t) {
        return t > L.scan_hi || (t >= L.scan_lo && L.base_index(t) > G);
    };
    auto far_low = [&](long t) {
        return t < L.scan_lo || (t <= L.scan_hi && L.base_index(t) < -G);
    };

    ConeTally tally;
    std::vector<long> middle;
    std::set<int> checked_high, checked_low;
    for (long t = L.scan_lo; t <= L.scan_hi; ++t) {
        int b = L.base_index(t);
        if (b > G) {
            if (checked_high.insert(b).second)
                check_far_block(L.block(b), L.target_dim, true, b);
        } else if (b < -G) {
            if (checked_low.insert(b).second)
                check_far_block(L.block(b), L.target_dim, false, b);
        } else {
            middle.push_back(t);
        }
    }

    std::map<long, size_t> target_pos;
    for (long T = L.scan_lo + std::min(0L, u); T <= L.scan_hi + std::max(0L, u); ++T) {
        bool hi = far_high(T);
        bool lo = far_low(T - u);
        if (!hi && !lo)
            target_pos.emplace(T, target_pos.size());
        else if (hi && lo)
            tally.doubly_cancelled++;
    }

    const size_t td = L.target_dim;
    EchelonBasis eb;
    for (long t : middle) {
        const auto& blk = L.block(L.base_index(t));
        tally.source_dim += static_cast<long>(blk.source_dim);
        Scalar scale = L.h_scale ? L.h_scale(t) : Scalar(1);
        auto vt = target_pos.find(t);
        auto ht = target_pos.find(t + u);
        for (size_t j = 0; j < blk.source_dim; ++j) {
            SparseVector col;
            if (vt != target_pos.end()) {
                SparseVector part;
                for (auto& [i, x] : blk.v_cols[j])
                    part.emplace(vt->second * td + i, x);
                axpy(col, 1, part);
            }
            if (ht != target_pos.end()) {
                SparseVector part;
                for (auto& [i, x] : blk.h_cols[j])
                    part.emplace(ht->second * td + i, x);
                axpy(col, scale, part);
            }
            eb.insert(std::move(col));
        }
    }
    tally.middle_sources = static_cast<long>(middle.size());
    tally.uncancelled_targets = static_cast<long>(target_pos.size());
    tally.rank = eb.rank();
    long tdim = static_cast<long>(td);
    tally.dimension = tally.source_dim + tally.uncancelled_targets * tdim -
                      2 * static_cast<long>(tally.rank) + tally.doubly_cancelled * tdim;
    return tally;
}

// ---- bent complexes ----------------------------------------------------------------

SparseExactMap bent_differential(const KnotComplex& k, int s)
{
    SparseExactMap d(k.space, k.space);
    for (size_t j = 0; j < k.dim(); ++j) {
        int kk = (*k.space)[j].alex2 - 2 * s * k.order_p;
        if (kk >= 0)
            for (auto& [i, x] : k.d_plus.column(j))
                d.add(i, j, x);
        if (kk <= 0)
            for (auto& [i, x] : k.d_minus.column(j))
                d.add(i, j, x);
    }
    return d;
}

Homology bent_homology(const KnotComplex& k, int s)
{
    return homology(bent_differential(k, s));
}

static SparseExactMap projection(const KnotComplex& k, int s, bool keep_below)
{
    SparseExactMap p(k.space, k.space);
    for (size_t j = 0; j < k.dim(); ++j) {
        int kk = (*k.space)[j].alex2 - 2 * s * k.order_p;
        if (keep_below ? kk <= 0 : kk >= 0)
            p.add(j, j, 1);
    }
    return p;
}

KnotConeData::KnotConeData(const KnotComplex& k)
    : k_(k), bm_(homology(k.d_minus)), bp_(homology(k.d_plus))
{
    if (bm_.dim() != 1 || bp_.dim() != 1)
        throw PreconditionError("cone needs H(d_plus) and H(d_minus) of dimension one");
    // Xi: distinguished generator of H(B^+) to that of H(B^-)
    xi_ = SparseExactMap(bp_.space, bm_.space);
    xi_.add(0, 0, 1);
}

const PiMaps& KnotConeData::pi(int s)
{
    auto it = pi_.find(s);
    if (it != pi_.end())
        return it->second;
    auto d = bent_differential(k_, s);
    PiMaps pm{homology(d), {}, {}, {}};
    pm.v = induced_map_on_homology(projection(k_, s, true), d, k_.d_minus, pm.a, bm_);
    pm.h = induced_map_on_homology(projection(k_, s, false), d, k_.d_plus, pm.a, bp_);
    pm.xi_h = compose(xi_, pm.h);
    return pi_.emplace(s, std::move(pm)).first->second;
}

const ConeBlock& KnotConeData::block(int s)
{
    auto it = blocks_.find(s);
    if (it != blocks_.end())
        return it->second;
    const auto& pm = pi(s);
    ConeBlock b;
    b.source_dim = pm.a.dim();
    for (size_t j = 0; j < b.source_dim; ++j) {
        b.v_cols.push_back(pm.v.column(j));
        b.h_cols.push_back(pm.xi_h.column(j));
    }
    return blocks_.emplace(s, std::move(b)).first->second;
}

PiMaps pi_maps(const KnotComplex& k, int s)
{
    KnotConeData data(k);
    return data.pi(s);
}

// ---- surgeries ---------------------------------------------------------------------

std::string to_string(Pathway p)
{
    switch (p) {
    case Pathway::Cone: return "cone";
    case Pathway::LargeSurgery: return "large-surgery";
    case Pathway::ClosedForm: return "closed-form";
    case Pathway::Ladder: return "ladder";
    }
    return "cone";
}

Pathway pathway_from_string(const std::string& s)
{
    for (auto p : {Pathway::Cone, Pathway::LargeSurgery, Pathway::ClosedForm, Pathway::Ladder})
        if (to_string(p) == s)
            return p;
    throw StructuralError("unknown pathway '" + s + "'");
}

void require_valid(const KnotComplex& k)
{
    auto rep = validate(k);
    if (rep.ok())
        return;
    std::string msg = "knot model" + (k.name.empty() ? "" : " '" + k.name + "'") + " is invalid:";
    for (auto& v : rep.violations)
        msg += "\n  " + v;
    throw PreconditionError(msg);
}

static void check_slope(long p, long q)
{
    if (p == 0)
        throw PreconditionError("slope 0 has no single dimension here: use zero-surgery");
    if (q < 1)
        throw PreconditionError("slope denominator must be positive");
    if (std::gcd(std::labs(p), q) != 1)
        throw PreconditionError("slope " + std::to_string(p) + "/" + std::to_string(q) +
                                " is not in lowest terms");
}

long surgery_cone_dim(KnotConeData& data, long p, long q, const SurgeryOptions& opt)
{
    check_slope(p, q);
    const int G = data.knot().genus + opt.extra_window;
    ConeLayout L;
    L.target_dim = 1;
    L.shift = p;
    L.threshold = G;
    L.scan_lo = -q * (G + 3);
    L.scan_hi = q * (G + 3);
    L.base_index = [q](long t) { return static_cast<int>(floor_div(t, q)); };
    L.block = [&data](int s) -> const ConeBlock& { return data.block(s); };
    L.h_scale = opt.h_scale;
    return solve_cone(L).dimension;
}

long surgery_cone_dim(const KnotComplex& k, long p, long q, const SurgeryOptions& opt)
{
    require_valid(k);
    KnotConeData data(k);
    return surgery_cone_dim(data, p, q, opt);
}

long large_surgery_dim(const KnotComplex& k, long m)
{
    const int g = k.genus;
    if (m < 2L * g - 1 || m < 1)
        throw PreconditionError("large-surgery shortcut needs m >= 2g-1 (g = " +
                                std::to_string(g) + ", m = " + std::to_string(m) + ")");
    long total = 0;
    for (long s = g - m; s <= g - 1; ++s)
        total += static_cast<long>(bent_homology(k, static_cast<int>(s)).dim());
    return total;
}

SurgeryResult surgery_dim(const KnotComplex& k, long p, long q, const SurgeryOptions& opt)
{
    check_slope(p, q);
    require_valid(k);
    SurgeryResult r;
    r.p = p;
    r.q = q;
    r.knot = k.name;
    if (opt.allow_shortcut && q == 1 && p >= 2L * k.genus - 1 && !opt.h_scale) {
        r.dimension = large_surgery_dim(k, p);
        r.pathway = Pathway::LargeSurgery;
    } else {
        KnotConeData data(k);
        r.dimension = surgery_cone_dim(data, p, q, opt);
        r.pathway = Pathway::Cone;
    }
    return r;
}

static long zero_cone_at(KnotConeData& data, int s, const Scalar& xi_scale)
{
    const auto& blk = data.block(s);
    std::vector<SparseVector> cols;
    for (size_t j = 0; j < blk.source_dim; ++j) {
        SparseVector c = blk.v_cols[j];
        axpy(c, xi_scale, blk.h_cols[j]);
        cols.push_back(std::move(c));
    }
    long r = static_cast<long>(rank_of_columns(cols));
    return static_cast<long>(blk.source_dim) + 1 - 2 * r;
}

long zero_surgery_at(const KnotComplex& k, int s, const Scalar& xi_scale)
{
    require_valid(k);
    KnotConeData data(k.tau > 0 ? mirror(k) : k);
    return zero_cone_at(data, s, xi_scale);
}

SurgeryResult zero_surgery_dims(const KnotComplex& k)
{
    require_valid(k);
    SurgeryResult r;
    r.p = 0;
    r.q = 1;
    r.knot = k.name;
    r.pathway = Pathway::Cone;
    r.mirrored = k.tau > 0;
    KnotConeData data(r.mirrored ? mirror(k) : k);
    const int g = k.genus;
    for (int s = 1 - g; s <= g - 1; ++s) {
        if (s == 0)
            continue;
        r.table.push_back({s, zero_cone_at(data, s, 1)});
    }
    GradingEntry zero{0, std::nullopt};
    if (k.tau != 0)
        zero.dim = zero_cone_at(data, 0, 1);
    r.table.push_back(zero);
    std::sort(r.table.begin(), r.table.end(),
              [](const GradingEntry& a, const GradingEntry& b) { return a.s < b.s; });
    return r;
}

long genus_one_positive_ladder(const KnotComplex& k, long m)
{
    if (k.genus != 1)
        throw PreconditionError("the genus-one ladder needs a genus-one knot (genus is " +
                                std::to_string(k.genus) + ")");
    if (m < 1)
        throw PreconditionError("the genus-one ladder needs m >= 1");
    SurgeryOptions opt;
    opt.allow_shortcut = false;
    return *surgery_dim(k, 1, 1, opt).dimension + (m - 1);
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::LSpace: return "lspace";
    case Verdict::Almost: return "almost";
    case Verdict::Neither: return "neither";
    }
    return "neither";
}

ScanResult almost_lspace_scan(const KnotComplex& k)
{
    require_valid(k);
    KnotConeData data(k);
    ScanResult r;
    const long top = 2L * k.genus + 3;
    for (long n = 1; n <= top; ++n)
        r.dims.push_back(surgery_cone_dim(data, n, 1));
    for (long n = 1; n <= top; ++n)
        if (r.dims[n - 1] == n) {
            r.verdict = Verdict::LSpace;
            r.witness = n;
            return r;
        }
    for (long n = 1; n <= top; ++n)
        if (r.dims[n - 1] == n + 2) {
            r.verdict = Verdict::Almost;
            r.witness = n;
            return r;
        }
    return r;
}

}  // namespace isharp
