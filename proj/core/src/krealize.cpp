#include "diffalg/krealize.hpp"

#include <algorithm>

namespace diffalg {

KRealization KRealization::of_ring(QRPtr ring) {
    return KRealization(std::move(ring), 1, {});
}

KRealization KRealization::of_cokernel(QRPtr ring, std::size_t gens,
                                       const std::vector<RVector>& relation_columns) {
    return KRealization(std::move(ring), gens, relation_columns);
}

KRealization::KRealization(QRPtr ring, std::size_t gens,
                           const std::vector<RVector>& relation_columns)
    : ring_(std::move(ring)), gens_(gens), image_(ring_->field(), 0) {
    if (!ring_->is_artinian()) throw algebra_error("k-realization requires an artinian ring");
    const Staircase& st = ring_->finite_staircase();
    for (std::size_t g = 0; g < gens_; ++g)
        for (const auto& m : st.basis) free_basis_.push_back({g, m});
    image_ = RowSpace(ring_->field(), free_basis_.size());
    for (const auto& col : relation_columns) {
        if (col.size() != gens_) throw algebra_error("relation column rank mismatch");
        for (const auto& m : st.basis) {
            RVector mult(gens_, Polynomial::zero(ring_->poly_ring()));
            for (std::size_t i = 0; i < gens_; ++i)
                if (!col[i].is_zero())
                    mult[i] = ring_->nf(col[i].times_term(m, ring_->field().one()));
            image_.insert(coords_free(mult));
        }
    }
    std::vector<bool> is_pivot(free_basis_.size(), false);
    for (std::size_t p : image_.pivots()) is_pivot[p] = true;
    for (std::size_t i = 0; i < free_basis_.size(); ++i)
        if (!is_pivot[i]) quotient_positions_.push_back(i);
}

KVec KRealization::coords_free(const RVector& v) const {
    if (v.size() != gens_) throw algebra_error("realization coords rank mismatch");
    const Staircase& st = ring_->finite_staircase();
    KVec out(free_basis_.size(), ring_->field().zero());
    for (std::size_t g = 0; g < gens_; ++g) {
        Polynomial r = ring_->nf(v[g]);
        for (const auto& t : r.terms()) {
            auto it = std::lower_bound(st.basis.begin(), st.basis.end(), t.mono);
            if (it == st.basis.end() || !(*it == t.mono))
                throw algebra_error("internal: normal form term outside the staircase");
            out[g * st.basis.size() + static_cast<std::size_t>(it - st.basis.begin())] = t.coeff;
        }
    }
    return out;
}

KVec KRealization::coords(const RVector& v) const {
    KVec reduced = image_.reduce(coords_free(v));
    KVec out;
    out.reserve(quotient_positions_.size());
    for (std::size_t p : quotient_positions_) out.push_back(reduced[p]);
    return out;
}

KVec KRealization::coords(const Polynomial& f) const {
    if (gens_ != 1) throw algebra_error("scalar coords on a non-cyclic realization");
    return coords(RVector{f});
}

RVector KRealization::representative(std::size_t index) const {
    RVector out(gens_, Polynomial::zero(ring_->poly_ring()));
    auto [g, m] = free_basis_[quotient_positions_[index]];
    out[g] = Polynomial::monomial(ring_->poly_ring(), m, ring_->field().one());
    return out;
}

Polynomial KRealization::representative_poly(std::size_t index) const {
    if (gens_ != 1) throw algebra_error("scalar representative on a non-cyclic realization");
    return representative(index)[0];
}

KMatrix KRealization::operator_matrix(const std::function<RVector(const RVector&)>& action) const {
    KMatrix out(ring_->field(), dim(), dim());
    for (std::size_t c = 0; c < dim(); ++c) {
        KVec col = coords(action(representative(c)));
        for (std::size_t r = 0; r < dim(); ++r) out.at(r, c) = col[r];
    }
    return out;
}

KMatrix KRealization::mult_matrix(const Polynomial& r) const {
    return operator_matrix([&](const RVector& v) {
        RVector out(v.size(), Polynomial::zero(ring_->poly_ring()));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out[i] = ring_->nf(v[i] * r);
        return out;
    });
}

KMatrix KRealization::variable_matrix(std::size_t var) const {
    return mult_matrix(ring_->variable(var));
}

}  // namespace diffalg
