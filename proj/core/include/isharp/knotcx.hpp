#pragma once

#include "isharp/laurent.hpp"
#include "isharp/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isharp {

// Model of the instanton knot homology of a knot in S^3: an Alexander-graded,
// Z/2-graded space with d_plus (grading +1) and d_minus (grading -1).
struct KnotComplex {
    SpacePtr space;
    SparseExactMap d_plus;
    SparseExactMap d_minus;
    int genus = 0;
    int tau = 0;
    int order_p = 1;
    std::string name;
    std::string source;  // "thin", "staircase", "explicit", ...
    std::optional<Laurent> alexander;

    size_t dim() const { return space->dim(); }
};

struct Arrow {
    std::string src;
    std::string tgt;
    Scalar coef;
};

// Generators and arrows that can be glued into a complex.
struct Fragment {
    std::vector<Generator> generators;
    std::vector<Arrow> d_plus;
    std::vector<Arrow> d_minus;
    int sign = 0;  // Euler-characteristic sign of a square, 0 for a staircase
};

struct StaircaseSpec {
    int l = 0;
};

struct SquareSpec {
    int s = 0;
    int sign = -1;
};

Fragment staircase_fragment(int l, const std::string& prefix = "a");
Fragment build_square(int s, int sign, const std::string& prefix = "sq");

KnotComplex assemble(const std::vector<Fragment>& parts, int tau, std::string name,
                     std::string source);

KnotComplex build_staircase(int l);

// Splits delta - staircase(tau) into squares.
struct ThinDecomposition {
    StaircaseSpec staircase;
    std::vector<SquareSpec> squares;
};
ThinDecomposition decompose_thin(const Laurent& delta, int tau);
KnotComplex thin_from_alexander(const Laurent& delta, int tau, std::string name = "");

KnotComplex mirror(const KnotComplex& k);

// sum over generators of (-1)^z2 t^alex
Laurent euler_characteristic(const KnotComplex& k);
int compute_tau(const KnotComplex& k);

struct ValidationReport {
    std::vector<std::string> violations;
    bool torsion_order_one = false;
    bool ok() const { return violations.empty(); }
};
ValidationReport validate(const KnotComplex& k);

// Data that is preserved by graded isomorphisms of the complex; used to compare
// models without searching for an explicit isomorphism.
std::string invariant_signature(const KnotComplex& k);

// dims of the complex at Alexander gradings -genus..genus
std::vector<int> grading_dims(const KnotComplex& k);

}  // namespace isharp
