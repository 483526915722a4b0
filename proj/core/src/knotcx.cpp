#include "isharp/knotcx.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace isharp {

Fragment staircase_fragment(int l, const std::string& prefix)
{
    Fragment f;
    int n = 2 * std::abs(l) + 1;
    auto id = [&](int i) { return prefix + std::to_string(i); };
    for (int i = 1; i <= n; ++i) {
        int alex = l > 0 ? -l + (i - 1) : -l - (i - 1);
        f.generators.push_back({id(i), 2 * alex, (i - 1) % 2});
    }
    if (l > 0) {
        for (int i = 2; i <= n; i += 2) {
            f.d_plus.push_back({id(i), id(i + 1), 1});
            f.d_minus.push_back({id(i), id(i - 1), 1});
        }
    } else if (l < 0) {
        for (int i = 1; i <= n; i += 2) {
            if (i + 1 <= n)
                f.d_minus.push_back({id(i), id(i + 1), 1});
            if (i - 1 >= 1)
                f.d_plus.push_back({id(i), id(i - 1), 1});
        }
    }
    return f;
}

Fragment build_square(int s, int sign, const std::string& prefix)
{
    if (sign != 1 && sign != -1)
        throw StructuralError("square sign must be +1 or -1");
    Fragment f;
    f.sign = sign;
    int za = sign < 0 ? 0 : 1;
    f.generators = {
        {prefix + "a", 2 * s, za},
        {prefix + "b", 2 * (s - 1), 1 - za},
        {prefix + "c", 2 * (s + 1), 1 - za},
        {prefix + "d", 2 * s, za},
    };
    f.d_plus = {{prefix + "a", prefix + "c", 1}, {prefix + "b", prefix + "d", 1}};
    f.d_minus = {{prefix + "a", prefix + "b", 1}, {prefix + "c", prefix + "d", -1}};
    return f;
}

KnotComplex assemble(const std::vector<Fragment>& parts, int tau, std::string name,
                     std::string source)
{
    auto space = std::make_shared<GradedSpace>();
    for (auto& p : parts)
        for (auto& g : p.generators)
            space->add(g);
    KnotComplex k;
    k.space = space;
    k.d_plus = SparseExactMap(space, space);
    k.d_minus = SparseExactMap(space, space);
    for (auto& p : parts) {
        for (auto& a : p.d_plus)
            k.d_plus.add(a.tgt, a.src, a.coef);
        for (auto& a : p.d_minus)
            k.d_minus.add(a.tgt, a.src, a.coef);
    }
    int top = 0;
    for (auto& g : space->generators())
        top = std::max(top, std::abs(g.alex2) / 2);
    k.genus = top;
    k.tau = tau;
    k.name = std::move(name);
    k.source = std::move(source);
    return k;
}

KnotComplex build_staircase(int l)
{
    auto k = assemble({staircase_fragment(l)}, l, "C" + std::to_string(l), "staircase");
    k.alexander = staircase_polynomial(l);
    return k;
}

ThinDecomposition decompose_thin(const Laurent& delta_in, int tau)
{
    if (!delta_in.is_symmetric())
        throw PreconditionError("Alexander polynomial " + delta_in.str() + " is not symmetric");
    Laurent delta = delta_in;
    if (delta.at_one() == -1)
        delta = -delta;
    if (delta.at_one() != 1)
        throw PreconditionError("Alexander polynomial " + delta_in.str() +
                                " does not satisfy delta(1) = +-1");
    int top = delta.max_degree();
    if (std::abs(tau) > top)
        throw PreconditionError("tau = " + std::to_string(tau) +
                                " lies outside the degree span of " + delta.str());

    ThinDecomposition out;
    out.staircase.l = tau;
    Laurent r = delta - staircase_polynomial(tau);
    while (!r.is_zero()) {
        int d = r.max_degree();
        long c = r.coef(d);
        if (d - 1 < -top)
            throw PreconditionError("not a thin complex: residual " + r.str() +
                                    " is not a sum of squares");
        for (long n = 0; n < std::labs(c); ++n)
            out.squares.push_back({d - 1, c > 0 ? 1 : -1});
        r -= square_polynomial(d - 1).scaled(c);
    }
    long dim = 2L * std::abs(tau) + 1 + 4L * static_cast<long>(out.squares.size());
    if (dim != delta.norm())
        throw PreconditionError("not a thin complex: (" + delta.str() + ", tau=" +
                                std::to_string(tau) + ") needs dimension " + std::to_string(dim) +
                                " but ||delta|| = " + std::to_string(delta.norm()));
    return out;
}

KnotComplex thin_from_alexander(const Laurent& delta, int tau, std::string name)
{
    auto dec = decompose_thin(delta, tau);
    std::vector<Fragment> parts{staircase_fragment(tau)};
    for (size_t i = 0; i < dec.squares.size(); ++i)
        parts.push_back(build_square(dec.squares[i].s, dec.squares[i].sign,
                                     "q" + std::to_string(i) + "."));
    auto k = assemble(parts, tau, std::move(name), "thin");
    k.alexander = delta.at_one() == 1 ? delta : -delta;
    k.genus = std::max(k.genus, delta.max_degree());
    return k;
}

// the transpose of m, hosted on `space`
static SparseExactMap transpose_on(const SparseExactMap& m, const SpacePtr& space)
{
    SparseExactMap out(space, space);
    for (size_t j = 0; j < m.source().dim(); ++j)
        for (auto& [i, v] : m.column(j))
            out.add(j, i, v);
    return out;
}

// Dual complex: gradings negate and every arrow is reversed, so the transposed d_plus
// still raises the (negated) grading.
KnotComplex mirror(const KnotComplex& k)
{
    auto space = std::make_shared<GradedSpace>();
    for (auto g : k.space->generators()) {
        g.alex2 = -g.alex2;
        space->add(g);
    }
    KnotComplex m = k;
    m.space = space;
    m.d_plus = transpose_on(k.d_plus, space);
    m.d_minus = transpose_on(k.d_minus, space);
    m.tau = -k.tau;
    if (k.alexander) {
        Laurent a;
        for (auto& [e, c] : k.alexander->terms())
            a.add(-e, c);
        m.alexander = a;
    }
    m.name = k.name.empty() ? "" : "mirror(" + k.name + ")";
    return m;
}

Laurent euler_characteristic(const KnotComplex& k)
{
    Laurent p;
    for (auto& g : k.space->generators())
        p.add(g.alex2 / 2, g.z2 ? -1 : 1);
    return p;
}

int compute_tau(const KnotComplex& k)
{
    auto hp = homology(k.d_plus);
    auto hm = homology(k.d_minus);
    if (hp.dim() != 1 || hm.dim() != 1)
        throw PreconditionError("not an S^3-knot model: H(d_plus) has dim " +
                                std::to_string(hp.dim()) + ", H(d_minus) has dim " +
                                std::to_string(hm.dim()));
    return (*hm.space)[0].alex2 / 2;
}

std::vector<int> grading_dims(const KnotComplex& k)
{
    std::vector<int> out(2 * k.genus + 1, 0);
    for (auto& g : k.space->generators()) {
        int a = g.alex2 / 2 + k.genus;
        if (a >= 0 && a < static_cast<int>(out.size()))
            out[a]++;
    }
    return out;
}

namespace {

void check_arrows(const SparseExactMap& d, int shift2, const std::string& label,
                  std::vector<std::string>& bad)
{
    const auto& sp = d.source();
    for (size_t j = 0; j < sp.dim(); ++j) {
        for (auto& [i, v] : d.column(j)) {
            if (sp[i].alex2 - sp[j].alex2 != shift2) {
                bad.push_back(label + " shifts twice the grading by " +
                              std::to_string(sp[i].alex2 - sp[j].alex2) + " on " + sp[j].id +
                              " -> " + sp[i].id + ", expected " + std::to_string(shift2));
                return;
            }
            if (sp[i].z2 == sp[j].z2) {
                bad.push_back(label + " preserves the Z/2 grading on " + sp[j].id + " -> " +
                              sp[i].id);
                return;
            }
        }
    }
}

bool nonzero_witness(const SparseExactMap& m, std::string& witness)
{
    for (size_t j = 0; j < m.source().dim(); ++j)
        if (!m.column(j).empty()) {
            witness = m.source()[j].id;
            return true;
        }
    return false;
}

}  // namespace

ValidationReport validate(const KnotComplex& k)
{
    ValidationReport r;
    auto& bad = r.violations;
    if (!k.space) {
        bad.push_back("missing generator space");
        return r;
    }
    if (k.d_plus.source().dim() != k.dim() || k.d_minus.source().dim() != k.dim()) {
        bad.push_back("differentials do not act on the generator space");
        return r;
    }
    std::string w;
    bool squares_ok = true;
    if (nonzero_witness(compose(k.d_plus, k.d_plus), w)) {
        bad.push_back("d_plus^2 != 0 (witness " + w + ")");
        squares_ok = false;
    }
    if (nonzero_witness(compose(k.d_minus, k.d_minus), w)) {
        bad.push_back("d_minus^2 != 0 (witness " + w + ")");
        squares_ok = false;
    }
    if (nonzero_witness(compose(k.d_plus, k.d_minus) + compose(k.d_minus, k.d_plus), w))
        bad.push_back("d_plus d_minus + d_minus d_plus != 0 (witness " + w + ")");

    check_arrows(k.d_plus, 2 * k.order_p, "d_plus", bad);
    check_arrows(k.d_minus, -2 * k.order_p, "d_minus", bad);

    auto dims = k.space->dims_by_grading();
    for (auto& [a, n] : dims) {
        if (a % 2 != 0)
            bad.push_back("half-integer Alexander grading in an S^3 knot model");
        auto it = dims.find(-a);
        int m = it == dims.end() ? 0 : it->second;
        if (m != n && a > 0)
            bad.push_back("dim at grading " + std::to_string(a / 2) + " is " + std::to_string(n) +
                          " but dim at grading " + std::to_string(-a / 2) + " is " +
                          std::to_string(m));
        if (std::abs(a) > 2 * k.genus)
            bad.push_back("generator at grading " + std::to_string(a / 2) + " exceeds genus " +
                          std::to_string(k.genus));
    }
    if (k.genus > 0 && (!dims.count(2 * k.genus) || !dims.count(-2 * k.genus)))
        bad.push_back("no generator at grading +-genus");

    if (k.alexander) {
        auto chi = euler_characteristic(k);
        if (!(chi == *k.alexander) && !(chi == -*k.alexander))
            bad.push_back("graded Euler characteristic " + chi.str() + " differs from +-" +
                          k.alexander->str());
    }

    if (squares_ok) {
        auto hp = homology(k.d_plus);
        auto hm = homology(k.d_minus);
        if (hp.dim() != 1)
            bad.push_back("H(d_plus) has dim " + std::to_string(hp.dim()) + ", expected 1");
        if (hm.dim() != 1)
            bad.push_back("H(d_minus) has dim " + std::to_string(hm.dim()) + ", expected 1");
        r.torsion_order_one = hp.dim() == 1 && hm.dim() == 1;
        if (r.torsion_order_one) {
            int t = (*hm.space)[0].alex2 / 2;
            int tp = (*hp.space)[0].alex2 / 2;
            if (t != k.tau)
                bad.push_back("computed tau " + std::to_string(t) + " differs from declared tau " +
                              std::to_string(k.tau));
            if (tp != -t)
                bad.push_back("H(d_plus) sits at grading " + std::to_string(tp) +
                              ", expected " + std::to_string(-t));
        }
    }
    return r;
}

std::string invariant_signature(const KnotComplex& k)
{
    std::ostringstream os;
    std::map<std::pair<int, int>, int> counts;
    for (auto& g : k.space->generators())
        counts[{g.alex2, g.z2}]++;
    os << "gens";
    for (auto& [key, n] : counts)
        os << " (" << key.first << "," << key.second << "):" << n;

    // ranks of each differential between consecutive grading blocks
    auto block_rank = [&](const SparseExactMap& d, int from2) {
        std::vector<SparseVector> cols;
        for (size_t j = 0; j < k.dim(); ++j)
            if ((*k.space)[j].alex2 == from2)
                cols.push_back(d.column(j));
        return rank_of_columns(cols);
    };
    auto dpm = compose(k.d_plus, k.d_minus);
    os << " | ranks";
    for (auto& [a, n] : k.space->dims_by_grading())
        os << " " << a << ":" << block_rank(k.d_plus, a) << "/" << block_rank(k.d_minus, a) << "/"
           << block_rank(dpm, a);
    os << " | rank d+ " << rank(k.d_plus) << " d- " << rank(k.d_minus);
    return os.str();
}

}  // namespace isharp
