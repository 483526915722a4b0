#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace isharp {

long binomial(int n, int k);

// Span of exterior monomials x_S, S a subset of {1..2g} stored as a bitmask.
class MonomialModule {
public:
    explicit MonomialModule(int g) : g_(g) {}

    // monomials of degree >= k
    static MonomialModule at_least(int g, int k);
    static MonomialModule full(int g) { return at_least(g, 0); }

    int genus() const { return g_; }
    const std::set<uint32_t>& monomials() const { return mons_; }
    long dim() const { return static_cast<long>(mons_.size()); }
    bool contains(uint32_t s) const { return mons_.count(s) != 0; }
    void insert(uint32_t s) { mons_.insert(s); }

    // sum of submodules spanned by monomials
    MonomialModule& operator+=(const MonomialModule& o);
    bool is_submodule() const;
    bool operator==(const MonomialModule& o) const { return g_ == o.g_ && mons_ == o.mons_; }

private:
    int g_;
    std::set<uint32_t> mons_;
};

// graded piece of the suture-n space of the g-fold Borromean sum, grading i2/2
MonomialModule gamma_slice(int g, int n, int i2);
long khi_borromean(int g, int i);

long circle_bundle_dim_module(int g, long m);
long circle_bundle_dim_formula(int g, long m);
long circle_bundle_dim_cone(int g, long m, int extra_window = 0);

struct SeifertPair {
    long r = 0;
    long v = 1;
};

struct SeifertData {
    long v = 1;  // product of the v_i
    long u = 0;  // v times the orbifold degree
};

SeifertData seifert_invariants(long m, const std::vector<SeifertPair>& pairs);
// base grading of source S under the index law
long seifert_base_index(long S, const std::vector<SeifertPair>& pairs);
long seifert_dim(int g, long m, const std::vector<SeifertPair>& pairs, int extra_window = 0);
// 4^g |u|, valid once |u| >= 2g + v - 2
long seifert_large_dim(int g, long m, const std::vector<SeifertPair>& pairs);

}  // namespace isharp
