#include "isharp/formulas.hpp"

#include "isharp/linalg.hpp"

#include <cstdlib>
#include <numeric>

namespace isharp {

long SutureDimProfile::dim_at(long n) const
{
    return base_dim + std::labs(n + 2L * tau);
}

// assumes dim Gamma_n of the mirror equals dim Gamma_{-n} of the knot
SutureDimProfile mirror_profile(const SutureDimProfile& p)
{
    SutureDimProfile m = p;
    m.tau = -p.tau;
    return m;
}

long thin_surgery_formula(long norm, int tau, long p, long q)
{
    long a = std::labs(tau);
    if (norm < 1 || (norm - 2 * a - 1) % 4 != 0 || norm < 2 * a + 1)
        throw PreconditionError("||delta|| = " + std::to_string(norm) + " and tau = " +
                                std::to_string(tau) + " do not fit a thin model");
    if (p == 0)
        throw PreconditionError("slope 0 is not covered by the thin-knot formula");
    if (q < 1 || std::gcd(std::labs(p), q) != 1)
        throw PreconditionError("slope must be p/q in lowest terms with q >= 1");
    if (tau == 0)
        return (norm - 1) * q / 2 + std::labs(p);
    long head = (norm + 2 * a - 3) * q / 2;
    if (tau > 0)
        return head + std::labs(p - q * (2 * a - 1));
    return head + std::labs(-p - q * (2 * a - 1));
}

long alternating_family_dim(long norm, int n, long p, long q)
{
    // tau = g = n for this family; the "+2n-3" reading of the printed formula
    return thin_surgery_formula(norm, n, p, q);
}

WhiteheadResult whitehead_double_pm1(const WhDoubleSpec& spec)
{
    const auto& J = spec.companion;
    long D = J.dim_at(-spec.t);
    WhiteheadResult r;
    r.top_grading_dim = D;
    if (spec.t < 2L * J.tau) {
        r.plus_one = 2 * D - 1;
        r.minus_one = 2 * D + 1;
        r.tau = 1;
    } else {
        r.plus_one = 2 * D + 1;
        r.minus_one = 2 * D + 1;
        r.tau = 0;
    }
    return r;
}

WhiteheadResult whitehead_double_negative_pm1(const WhDoubleSpec& spec)
{
    // D^-_t(J) is the mirror of D^+_{-t}(mirror J); mirroring swaps the +-1 surgeries
    auto w = whitehead_double_pm1({-spec.t, mirror_profile(spec.companion)});
    WhiteheadResult r;
    r.plus_one = w.minus_one;
    r.minus_one = w.plus_one;
    r.top_grading_dim = w.top_grading_dim;
    r.tau = -w.tau;
    return r;
}

long splice_dim(long n, const SutureDimProfile& J)
{
    if (n == 0)
        throw PreconditionError("splice needs a nonzero twist parameter n");
    long gamma0 = J.dim_at(0);
    if (J.gamma0 && *J.gamma0 != gamma0)
        throw PreconditionError("companion profile is inconsistent: gamma0 = " +
                                std::to_string(*J.gamma0) + " but base_dim + |2 tau| = " +
                                std::to_string(gamma0));
    if (gamma0 == 0)
        throw PreconditionError("companion profile must be nontrivial (gamma0 > 0)");
    long a = std::labs(n);
    if (J.tau <= 0)
        return 2 * a * gamma0 + 1;
    return a * (2 * gamma0 - 1) + std::labs(1 + n);
}

std::vector<std::string> nearly_fibered_classify(long dim_total, const Laurent& delta_in)
{
    Laurent delta = delta_in.at_one() < 0 ? -delta_in : delta_in;
    if (dim_total == 7)
        return {"5_2", "5_2-mirror"};
    if (dim_total == 9 && delta == Laurent{{1, 2}, {0, -3}, {-1, 2}})
        return {"15n43522", "D-_2(trefoil-right)", "mirror(15n43522)",
                "mirror(D-_2(trefoil-right))"};
    if (dim_total == 9 && delta == Laurent{{1, -2}, {0, 5}, {-1, -2}})
        return {"P(-3,3,2n+1)", "D+_2(trefoil-right)", "mirror(P(-3,3,2n+1))",
                "mirror(D+_2(trefoil-right))"};
    throw PreconditionError("not nearly-fibered genus-one per classification: (dim " +
                            std::to_string(dim_total) + ", delta " + delta_in.str() + ")");
}

ConditionReport almost_lspace_necessary_conditions(int genus, const std::vector<int>& dims)
{
    ConditionReport r;
    auto fail = [&](std::string why) {
        r.pass = false;
        r.failures.push_back(std::move(why));
    };
    if (genus < 0 || dims.size() != static_cast<size_t>(2 * genus + 1)) {
        fail("expected " + std::to_string(2 * genus + 1) + " graded dimensions");
        return r;
    }
    auto at = [&](int i) { return dims[static_cast<size_t>(i + genus)]; };
    for (int i = 1; i <= genus; ++i)
        if (at(i) != at(-i))
            fail("dims are not symmetric at grading " + std::to_string(i));
    if (genus == 0) {
        fail("genus zero: the unknot is an L-space knot");
        return r;
    }
    if (genus == 1) {
        bool fig8 = at(1) == 1 && at(0) == 3;
        bool other = at(1) == 2 && (at(0) == 1 || at(0) == 3);
        if (!fig8 && !other)
            fail("genus one needs the figure-eight profile (1,3,1) or dim 2 at +-1 with 1 or 3 "
                 "at 0");
        return r;
    }
    for (int i = 2; i <= genus; ++i)
        if (at(i) > 1)
            fail("dim " + std::to_string(at(i)) + " at grading " + std::to_string(i) +
                 " exceeds 1");
    if (genus == 2) {
        if (at(2) != 1)
            fail("genus two needs dim 1 at +-2");
        if (at(1) != 1 && at(1) != 2)
            fail("genus two needs dim 1 or 2 at +-1");
        if (at(0) != 1 && at(0) != 3)
            fail("genus two needs dim 1 or 3 at 0");
    }
    return r;
}

}  // namespace isharp
