#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace isharp {

// Exact rationals. mpq_class keeps numerator/denominator coprime with a
// positive denominator after every operation.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);
std::string to_string(const Scalar& x);

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotADifferential : std::runtime_error {
    NotADifferential(const std::string& msg, std::string w)
        : std::runtime_error(msg), witness(std::move(w)) {}
    std::string witness;
};

struct NotAChainMap : std::runtime_error {
    NotAChainMap(const std::string& msg, std::string w)
        : std::runtime_error(msg), witness(std::move(w)) {}
    std::string witness;
};

// Raised when an operation's hypotheses do not hold for the given input.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string id;
    int alex2 = 0;  // twice the Alexander grading
    int z2 = 0;
};

class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<Generator> gens);

    size_t add(Generator g);
    size_t dim() const { return gens_.size(); }
    const Generator& operator[](size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }

    std::optional<size_t> find(const std::string& id) const;
    size_t index_of(const std::string& id) const;

    // alex2 -> number of generators
    std::map<int, int> dims_by_grading() const;

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, size_t> index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;
using SparseVector = std::map<size_t, Scalar>;

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

class SparseExactMap {
public:
    SparseExactMap() = default;
    SparseExactMap(SpacePtr source, SpacePtr target);

    static SparseExactMap zero(SpacePtr source, SpacePtr target);
    static SparseExactMap identity(SpacePtr space);

    const GradedSpace& source() const { return *src_; }
    const GradedSpace& target() const { return *tgt_; }
    const SpacePtr& source_ptr() const { return src_; }
    const SpacePtr& target_ptr() const { return tgt_; }

    // adds val to the (tgt, src) entry; entries that cancel to zero are dropped
    void add(size_t tgt, size_t src, const Scalar& val);
    void add(const std::string& tgt, const std::string& src, const Scalar& val);

    Scalar at(size_t tgt, size_t src) const;
    const SparseVector& column(size_t src) const { return cols_[src]; }
    SparseVector apply(const SparseVector& x) const;

    bool is_zero() const;
    size_t nnz() const;
    std::vector<std::tuple<std::string, std::string, Scalar>> entries() const;

    SparseExactMap scaled(const Scalar& a) const;
    friend SparseExactMap operator+(const SparseExactMap& a, const SparseExactMap& b);
    friend SparseExactMap operator-(const SparseExactMap& a, const SparseExactMap& b);
    // a ∘ b
    friend SparseExactMap compose(const SparseExactMap& a, const SparseExactMap& b);

private:
    SpacePtr src_, tgt_;
    std::vector<SparseVector> cols_;
};

bool operator==(const SparseExactMap& a, const SparseExactMap& b);

// Incremental row echelon form over sparse vectors.
class EchelonBasis {
public:
    // true if v was independent of the vectors inserted so far
    bool insert(SparseVector v);
    SparseVector reduce(SparseVector v) const;
    size_t rank() const { return pivots_.size(); }

private:
    std::map<size_t, SparseVector> pivots_;
};

size_t rank(const SparseExactMap& f);
size_t rank_of_columns(const std::vector<SparseVector>& cols);

class Homology {
public:
    // classes, as generators "h0", "h1", ... carrying the grading of the representative
    SpacePtr space;
    std::vector<SparseVector> reps;
    std::vector<bool> homogeneous;

    size_t dim() const { return reps.size(); }
    // coordinates of a cycle in the class basis
    std::vector<Scalar> coordinates(const SparseVector& cycle) const;

private:
    friend Homology homology(const SparseExactMap& d);
    size_t n_ = 0, n_bound_ = 0;
    std::vector<SparseVector> left_inverse_;  // rows
    std::vector<SparseVector> residual_;      // rows that must vanish on the column space
};

Homology homology(const SparseExactMap& d);

SparseExactMap induced_map_on_homology(const SparseExactMap& f, const SparseExactMap& dsrc,
                                       const SparseExactMap& dtgt);
SparseExactMap induced_map_on_homology(const SparseExactMap& f, const SparseExactMap& dsrc,
                                       const SparseExactMap& dtgt, const Homology& hsrc,
                                       const Homology& htgt);

}  // namespace isharp
