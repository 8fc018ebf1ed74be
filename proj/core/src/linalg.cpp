#include "diffalg/linalg.hpp"

#include <algorithm>

namespace diffalg {

KVec KMatrix::apply(const KVec& x) const {
    if (x.size() != cols_) throw algebra_error("matrix/vector size mismatch");
    KVec y(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& m = at(r, c);
            if (!m.is_zero() && !x[c].is_zero()) y[r] += m * x[c];
        }
    return y;
}

KMatrix KMatrix::transpose() const {
    KMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

// In-place row echelon. Returns pivot columns (ascending); rows are scaled to
// leading 1 and fully reduced upward, i.e. RREF.
std::vector<std::size_t> rref(KMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(KMatrix a) { return rref(a).size(); }

std::vector<KVec> kernel_basis(const KMatrix& a) {
    KMatrix m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<KVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        KVec v(m.cols(), a.field().zero());
        v[free] = a.field().one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<KVec> solve(const KMatrix& a, const KVec& b) {
    if (b.size() != a.rows()) throw algebra_error("solve: rhs size mismatch");
    KMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    KVec x(a.cols(), a.field().zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

bool RowSpace::insert(KVec v) {
    if (v.size() != width_) throw algebra_error("row space width mismatch");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // keep earlier rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar f = rows_[i][p];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < width_; ++c) rows_[i][c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(KVec v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

KVec RowSpace::reduce(KVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar f = v[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < width_; ++c) v[c] -= f * rows_[i][c];
    }
    return v;
}

}  // namespace diffalg
