#ifndef DIFFALG_KREALIZE_HPP
#define DIFFALG_KREALIZE_HPP

#include <functional>

#include "diffalg/module.hpp"

namespace diffalg {

// Full k-linear realization of a finitely presented module over an artinian
// quotient ring. No grading is used, so it also handles inhomogeneous data
// (derivation operators, fixpoint iteration) and serves as the independent
// cross-check against the graded path.
class KRealization {
  public:
    static KRealization of_ring(QRPtr ring);
    // coker of the columns inside R^{gens}
    static KRealization of_cokernel(QRPtr ring, std::size_t gens,
                                    const std::vector<RVector>& relation_columns);

    const QRPtr& ring() const { return ring_; }
    std::size_t dim() const { return quotient_positions_.size(); }
    std::size_t ambient_gens() const { return gens_; }

    KVec coords(const RVector& v) const;
    KVec coords(const Polynomial& f) const;  // gens_ == 1 convenience
    RVector representative(std::size_t index) const;
    Polynomial representative_poly(std::size_t index) const;

    // matrix of an arbitrary k-linear operator specified on representatives
    KMatrix operator_matrix(const std::function<RVector(const RVector&)>& action) const;
    KMatrix mult_matrix(const Polynomial& r) const;
    KMatrix variable_matrix(std::size_t var) const;

  private:
    KRealization(QRPtr ring, std::size_t gens, const std::vector<RVector>& relation_columns);
    KVec coords_free(const RVector& v) const;  // full free-module coordinates

    QRPtr ring_;
    std::size_t gens_;
    std::vector<std::pair<std::size_t, Monomial>> free_basis_;
    RowSpace image_;
    std::vector<std::size_t> quotient_positions_;
};

}  // namespace diffalg

#endif
