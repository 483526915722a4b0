#pragma once

#include "isharp/knotcx.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isharp {

// ---- generic infinite mapping cone -------------------------------------------------
//
// Sources and targets are indexed by integers t. Source t carries a space that
// depends only on base_index(t); its v-part lands in target t, its h-part in
// target t + shift. Sources with base index above +threshold must map by an
// isomorphism under v and vanish under h; below -threshold the roles swap.
// Those pairs cancel, which leaves a finite problem.

struct ConeBlock {
    size_t source_dim = 0;
    std::vector<SparseVector> v_cols;  // coordinates in the target block
    std::vector<SparseVector> h_cols;
};

struct ConeLayout {
    size_t target_dim = 1;
    long shift = 0;
    int threshold = 0;
    long scan_lo = 0;
    long scan_hi = 0;  // every non-far source lies in [scan_lo, scan_hi]
    std::function<int(long)> base_index;
    std::function<const ConeBlock&(int)> block;
    std::function<Scalar(long)> h_scale;  // optional, defaults to 1
};

struct ConeTally {
    long middle_sources = 0;
    long source_dim = 0;
    long uncancelled_targets = 0;
    long doubly_cancelled = 0;
    size_t rank = 0;
    long dimension = 0;
};

ConeTally solve_cone(const ConeLayout& layout);

// ---- bent complexes of knot models -----------------------------------------------

// differential of A(s): d_plus above level s, d_plus + d_minus at s, d_minus below
SparseExactMap bent_differential(const KnotComplex& k, int s);
Homology bent_homology(const KnotComplex& k, int s);

struct PiMaps {
    Homology a;            // H(A(s))
    SparseExactMap v;      // pi^- : H(A(s)) -> H(B^-)
    SparseExactMap h;      // pi^+ : H(A(s)) -> H(B^+)
    SparseExactMap xi_h;   // Xi o pi^+ : H(A(s)) -> H(B^-)
};

// Caches H(B^+), H(B^-) and the pi maps of one knot model.
class KnotConeData {
public:
    explicit KnotConeData(const KnotComplex& k);
    const KnotComplex& knot() const { return k_; }
    const Homology& b_minus() const { return bm_; }
    const Homology& b_plus() const { return bp_; }
    const PiMaps& pi(int s);
    const ConeBlock& block(int s);

private:
    KnotComplex k_;
    Homology bm_, bp_;
    SparseExactMap xi_;
    std::map<int, PiMaps> pi_;
    std::map<int, ConeBlock> blocks_;
};

PiMaps pi_maps(const KnotComplex& k, int s);

// ---- surgeries ---------------------------------------------------------------------

enum class Pathway { Cone, LargeSurgery, ClosedForm, Ladder };
std::string to_string(Pathway p);
Pathway pathway_from_string(const std::string& s);

struct GradingEntry {
    int s = 0;
    std::optional<long> dim;  // empty: undetermined
    bool operator==(const GradingEntry&) const = default;
};

struct SurgeryResult {
    long p = 0;
    long q = 1;
    std::optional<long> dimension;
    Pathway pathway = Pathway::Cone;
    std::string knot;
    std::vector<GradingEntry> table;
    bool mirrored = false;
    bool operator==(const SurgeryResult&) const = default;
};

struct SurgeryOptions {
    int extra_window = 0;
    bool allow_shortcut = true;
    std::function<Scalar(long)> h_scale;
};

// throws PreconditionError unless the model passes validate()
void require_valid(const KnotComplex& k);

SurgeryResult surgery_dim(const KnotComplex& k, long p, long q, const SurgeryOptions& opt = {});
long surgery_cone_dim(const KnotComplex& k, long p, long q, const SurgeryOptions& opt = {});
long surgery_cone_dim(KnotConeData& data, long p, long q, const SurgeryOptions& opt = {});
// sum_{s=g-m}^{g-1} dim H(A(s)), needs m >= 2g-1
long large_surgery_dim(const KnotComplex& k, long m);

// per-grading cone of v_s + Xi h_s; mirrors first when tau > 0
SurgeryResult zero_surgery_dims(const KnotComplex& k);
// same cone at an arbitrary grading (after the same mirroring)
long zero_surgery_at(const KnotComplex& k, int s, const Scalar& xi_scale = 1);

long genus_one_positive_ladder(const KnotComplex& k, long m);

enum class Verdict { LSpace, Almost, Neither };
std::string to_string(Verdict v);

struct ScanResult {
    Verdict verdict = Verdict::Neither;
    long witness = 0;
    std::vector<long> dims;  // dims at n = 1..2g+3
};
ScanResult almost_lspace_scan(const KnotComplex& k);

long floor_div(long a, long b);

}  // namespace isharp
