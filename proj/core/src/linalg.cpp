#include "isharp/linalg.hpp"

#include <algorithm>

namespace isharp {

Scalar make_scalar(long num, long den)
{
    if (den == 0)
        throw StructuralError("zero denominator");
    Scalar x(num, den);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x)
{
    return x.get_str();
}

GradedSpace::GradedSpace(std::vector<Generator> gens)
{
    for (auto& g : gens)
        add(std::move(g));
}

size_t GradedSpace::add(Generator g)
{
    if (index_.count(g.id))
        throw StructuralError("duplicate generator id '" + g.id + "'");
    if (g.z2 != 0 && g.z2 != 1)
        throw StructuralError("z2 grading of '" + g.id + "' must be 0 or 1");
    index_[g.id] = gens_.size();
    gens_.push_back(std::move(g));
    return gens_.size() - 1;
}

std::optional<size_t> GradedSpace::find(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

size_t GradedSpace::index_of(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        throw StructuralError("unknown generator id '" + id + "'");
    return it->second;
}

std::map<int, int> GradedSpace::dims_by_grading() const
{
    std::map<int, int> out;
    for (auto& g : gens_)
        out[g.alex2]++;
    return out;
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x)
{
    if (a == 0)
        return;
    for (auto& [i, v] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, a * v);
        } else {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

SparseExactMap::SparseExactMap(SpacePtr source, SpacePtr target)
    : src_(std::move(source)), tgt_(std::move(target))
{
    if (!src_ || !tgt_)
        throw StructuralError("map needs a source and a target space");
    cols_.resize(src_->dim());
}

SparseExactMap SparseExactMap::zero(SpacePtr source, SpacePtr target)
{
    return SparseExactMap(std::move(source), std::move(target));
}

SparseExactMap SparseExactMap::identity(SpacePtr space)
{
    SparseExactMap m(space, space);
    for (size_t i = 0; i < space->dim(); ++i)
        m.add(i, i, 1);
    return m;
}

void SparseExactMap::add(size_t tgt, size_t src, const Scalar& val)
{
    if (src >= cols_.size() || tgt >= tgt_->dim())
        throw StructuralError("map entry out of range");
    if (val == 0)
        return;
    auto& col = cols_[src];
    auto it = col.find(tgt);
    if (it == col.end()) {
        col.emplace(tgt, val);
    } else {
        it->second += val;
        if (it->second == 0)
            col.erase(it);
    }
}

void SparseExactMap::add(const std::string& tgt, const std::string& src, const Scalar& val)
{
    add(tgt_->index_of(tgt), src_->index_of(src), val);
}

Scalar SparseExactMap::at(size_t tgt, size_t src) const
{
    auto it = cols_.at(src).find(tgt);
    return it == cols_[src].end() ? Scalar(0) : it->second;
}

SparseVector SparseExactMap::apply(const SparseVector& x) const
{
    SparseVector y;
    for (auto& [j, a] : x) {
        if (j >= cols_.size())
            throw StructuralError("vector index out of range");
        axpy(y, a, cols_[j]);
    }
    return y;
}

bool SparseExactMap::is_zero() const
{
    return std::all_of(cols_.begin(), cols_.end(), [](auto& c) { return c.empty(); });
}

size_t SparseExactMap::nnz() const
{
    size_t n = 0;
    for (auto& c : cols_)
        n += c.size();
    return n;
}

std::vector<std::tuple<std::string, std::string, Scalar>> SparseExactMap::entries() const
{
    std::vector<std::tuple<std::string, std::string, Scalar>> out;
    for (size_t j = 0; j < cols_.size(); ++j)
        for (auto& [i, v] : cols_[j])
            out.emplace_back((*tgt_)[i].id, (*src_)[j].id, v);
    return out;
}

SparseExactMap SparseExactMap::scaled(const Scalar& a) const
{
    SparseExactMap m(src_, tgt_);
    if (a == 0)
        return m;
    for (size_t j = 0; j < cols_.size(); ++j)
        for (auto& [i, v] : cols_[j])
            m.cols_[j].emplace(i, a * v);
    return m;
}

static void check_same_shape(const SparseExactMap& a, const SparseExactMap& b)
{
    if (a.source().dim() != b.source().dim() || a.target().dim() != b.target().dim())
        throw StructuralError("maps have different shapes");
}

SparseExactMap operator+(const SparseExactMap& a, const SparseExactMap& b)
{
    check_same_shape(a, b);
    SparseExactMap m = a;
    for (size_t j = 0; j < b.cols_.size(); ++j)
        axpy(m.cols_[j], 1, b.cols_[j]);
    return m;
}

SparseExactMap operator-(const SparseExactMap& a, const SparseExactMap& b)
{
    check_same_shape(a, b);
    SparseExactMap m = a;
    for (size_t j = 0; j < b.cols_.size(); ++j)
        axpy(m.cols_[j], -1, b.cols_[j]);
    return m;
}

SparseExactMap compose(const SparseExactMap& a, const SparseExactMap& b)
{
    if (b.target().dim() != a.source().dim())
        throw StructuralError("cannot compose: dimension mismatch");
    SparseExactMap m(b.src_, a.tgt_);
    for (size_t j = 0; j < b.cols_.size(); ++j)
        m.cols_[j] = a.apply(b.cols_[j]);
    return m;
}

bool operator==(const SparseExactMap& a, const SparseExactMap& b)
{
    if (a.source().dim() != b.source().dim() || a.target().dim() != b.target().dim())
        return false;
    for (size_t j = 0; j < a.source().dim(); ++j)
        if (a.column(j) != b.column(j))
            return false;
    return true;
}

SparseVector EchelonBasis::reduce(SparseVector v) const
{
    while (!v.empty()) {
        bool moved = false;
        for (auto it = v.begin(); it != v.end(); ++it) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end())
                continue;
            Scalar c = -it->second / p->second.begin()->second;
            axpy(v, c, p->second);
            moved = true;
            break;
        }
        if (!moved)
            break;
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v)
{
    // pivot on the leading index; only the leading entry has to be cleared
    while (!v.empty()) {
        auto lead = v.begin();
        auto p = pivots_.find(lead->first);
        if (p == pivots_.end()) {
            size_t key = lead->first;
            pivots_.emplace(key, std::move(v));
            return true;
        }
        Scalar c = -lead->second / p->second.begin()->second;
        axpy(v, c, p->second);
    }
    return false;
}

size_t rank_of_columns(const std::vector<SparseVector>& cols)
{
    EchelonBasis eb;
    for (auto& c : cols)
        eb.insert(c);
    return eb.rank();
}

size_t rank(const SparseExactMap& f)
{
    EchelonBasis eb;
    for (size_t j = 0; j < f.source().dim(); ++j)
        eb.insert(f.column(j));
    return eb.rank();
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

// Row-reduces a in place, choosing pivots among the first `pivot_cols` columns.
std::vector<size_t> rref(Dense& a, size_t pivot_cols)
{
    std::vector<size_t> pivots;
    size_t row = 0;
    size_t nrows = a.size();
    for (size_t col = 0; col < pivot_cols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && a[sel][col] == 0)
            ++sel;
        if (sel == nrows)
            continue;
        std::swap(a[row], a[sel]);
        Scalar inv = 1 / a[row][col];
        for (auto& x : a[row])
            x *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            Scalar c = a[r][col];
            for (size_t k = 0; k < a[r].size(); ++k)
                if (a[row][k] != 0)
                    a[r][k] -= c * a[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

SparseVector sparse_row(const std::vector<Scalar>& row, size_t from, size_t len)
{
    SparseVector v;
    for (size_t k = 0; k < len; ++k)
        if (row[from + k] != 0)
            v.emplace(k, row[from + k]);
    return v;
}

Scalar dot(const SparseVector& a, const SparseVector& b)
{
    Scalar s = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            s += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return s;
}

void check_differential(const SparseExactMap& d)
{
    const auto& s = d.source();
    const auto& t = d.target();
    if (s.dim() != t.dim())
        throw StructuralError("differential must be an endomorphism");
    for (size_t i = 0; i < s.dim(); ++i)
        if (s[i].id != t[i].id)
            throw StructuralError("differential must be an endomorphism");
    auto dd = compose(d, d);
    for (size_t j = 0; j < s.dim(); ++j)
        if (!dd.column(j).empty())
            throw NotADifferential("not a differential: d^2 is nonzero on generator '" + s[j].id + "'",
                                   s[j].id);
}

}  // namespace

std::vector<Scalar> Homology::coordinates(const SparseVector& cycle) const
{
    for (auto& [i, v] : cycle)
        if (i >= n_)
            throw StructuralError("vector index out of range");
    for (auto& row : residual_)
        if (dot(row, cycle) != 0)
            throw StructuralError("vector is not a cycle of this complex");
    std::vector<Scalar> out(reps.size());
    for (size_t k = 0; k < reps.size(); ++k)
        out[k] = dot(left_inverse_[n_bound_ + k], cycle);
    return out;
}

Homology homology(const SparseExactMap& d)
{
    check_differential(d);
    const auto& sp = d.source();
    size_t n = sp.dim();

    Dense a(n, std::vector<Scalar>(n));
    for (size_t j = 0; j < n; ++j)
        for (auto& [i, v] : d.column(j))
            a[i][j] = v;
    auto pivots = rref(a, n);

    std::vector<SparseVector> bounds;
    for (size_t c : pivots)
        bounds.push_back(d.column(c));

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<SparseVector> kernel;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        SparseVector k;
        k.emplace(f, 1);
        for (size_t r = 0; r < pivots.size(); ++r)
            if (a[r][f] != 0)
                k.emplace(pivots[r], -a[r][f]);
        kernel.push_back(std::move(k));
    }

    Homology h;
    EchelonBasis eb;
    for (auto& b : bounds)
        eb.insert(b);
    auto space = std::make_shared<GradedSpace>();
    for (auto& k : kernel) {
        if (!eb.insert(k))
            continue;
        int top = sp[k.begin()->first].alex2;
        int z2 = sp[k.begin()->first].z2;
        bool homog = true;
        for (auto& [i, v] : k) {
            if (sp[i].alex2 != top)
                homog = false;
            top = std::max(top, sp[i].alex2);
        }
        space->add({"h" + std::to_string(h.reps.size()), top, z2});
        h.reps.push_back(k);
        h.homogeneous.push_back(homog);
    }
    h.space = space;

    // left inverse of [bounds | reps]
    size_t c = bounds.size() + h.reps.size();
    Dense m(n, std::vector<Scalar>(c + n));
    for (size_t j = 0; j < bounds.size(); ++j)
        for (auto& [i, v] : bounds[j])
            m[i][j] = v;
    for (size_t j = 0; j < h.reps.size(); ++j)
        for (auto& [i, v] : h.reps[j])
            m[i][bounds.size() + j] = v;
    for (size_t i = 0; i < n; ++i)
        m[i][c + i] = 1;
    auto piv = rref(m, c);
    if (piv.size() != c)
        throw StructuralError("internal: homology basis is not independent");
    h.n_ = n;
    h.n_bound_ = bounds.size();
    for (size_t r = 0; r < c; ++r)
        h.left_inverse_.push_back(sparse_row(m[r], c, n));
    for (size_t r = c; r < n; ++r) {
        auto row = sparse_row(m[r], c, n);
        if (!row.empty())
            h.residual_.push_back(std::move(row));
    }
    return h;
}

SparseExactMap induced_map_on_homology(const SparseExactMap& f, const SparseExactMap& dsrc,
                                       const SparseExactMap& dtgt, const Homology& hsrc,
                                       const Homology& htgt)
{
    if (f.source().dim() != dsrc.source().dim() || f.target().dim() != dtgt.source().dim())
        throw StructuralError("map and differentials have incompatible shapes");
    auto lhs = compose(f, dsrc);
    auto rhs = compose(dtgt, f);
    for (size_t j = 0; j < f.source().dim(); ++j)
        if (lhs.column(j) != rhs.column(j))
            throw NotAChainMap("not a chain map: f d != d f on generator '" + f.source()[j].id + "'",
                               f.source()[j].id);
    SparseExactMap out(hsrc.space, htgt.space);
    for (size_t k = 0; k < hsrc.dim(); ++k) {
        auto coords = htgt.coordinates(f.apply(hsrc.reps[k]));
        for (size_t i = 0; i < coords.size(); ++i)
            out.add(i, k, coords[i]);
    }
    return out;
}

SparseExactMap induced_map_on_homology(const SparseExactMap& f, const SparseExactMap& dsrc,
                                       const SparseExactMap& dtgt)
{
    return induced_map_on_homology(f, dsrc, dtgt, homology(dsrc), homology(dtgt));
}

}  // namespace isharp
