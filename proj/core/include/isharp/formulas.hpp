#pragma once

#include "isharp/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isharp {

// Suture dimensions of a companion knot complement: dim at suture n is
// base_dim + |n + 2 tau|.
struct SutureDimProfile {
    int tau = 0;
    long base_dim = 0;
    std::optional<long> gamma0;

    long dim_at(long n) const;
    bool operator==(const SutureDimProfile&) const = default;
};

SutureDimProfile mirror_profile(const SutureDimProfile& p);

struct WhDoubleSpec {
    long t = 0;
    SutureDimProfile companion;
};

long thin_surgery_formula(long norm_delta, int tau, long p, long q);
long alternating_family_dim(long norm_delta, int n, long p, long q);

struct WhiteheadResult {
    long plus_one = 0;
    long minus_one = 0;
    long top_grading_dim = 0;
    int tau = 0;
};

// positively clasped t-twisted double
WhiteheadResult whitehead_double_pm1(const WhDoubleSpec& spec);
// negatively clasped double, through the mirror relation with the positive one
WhiteheadResult whitehead_double_negative_pm1(const WhDoubleSpec& spec);

long splice_dim(long n, const SutureDimProfile& companion);

std::vector<std::string> nearly_fibered_classify(long dim_khi_total, const Laurent& delta);

struct ConditionReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// khi_dims lists dims at gradings -genus..genus
ConditionReport almost_lspace_necessary_conditions(int genus, const std::vector<int>& khi_dims);

}  // namespace isharp
