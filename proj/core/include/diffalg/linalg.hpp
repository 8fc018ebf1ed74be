#ifndef DIFFALG_LINALG_HPP
#define DIFFALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "diffalg/scalar.hpp"

namespace diffalg {

using KVec = std::vector<Scalar>;

// Dense matrix over the coefficient field. Everything downstream is
// desk-scale, so plain Gaussian elimination is enough.
class KMatrix {
  public:
    KMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    KVec apply(const KVec& x) const;  // A * x
    KMatrix transpose() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

std::size_t rank(KMatrix a);
// basis of { x : A x = 0 }
std::vector<KVec> kernel_basis(const KMatrix& a);
// one solution of A x = b, if any
std::optional<KVec> solve(const KMatrix& a, const KVec& b);

// Incremental row space: supports span membership, dimension, and residual
// reduction. Used for image spans, quotient bases and minimal-generator
// extraction.
class RowSpace {
  public:
    RowSpace(Field field, std::size_t width) : field_(field), width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    // reduce v against the current rows; if a nonzero residual remains it is
    // normalized, inserted, and true is returned
    bool insert(KVec v);
    bool contains(KVec v) const;
    KVec reduce(KVec v) const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

  private:
    Field field_;
    std::size_t width_;
    std::vector<KVec> rows_;            // each with leading 1 at its pivot
    std::vector<std::size_t> pivots_;   // pivot column of rows_[i]
};

}  // namespace diffalg

#endif
