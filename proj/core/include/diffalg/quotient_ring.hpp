#ifndef DIFFALG_QUOTIENT_RING_HPP
#define DIFFALG_QUOTIENT_RING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "diffalg/ideal_ops.hpp"
#include "diffalg/linalg.hpp"

namespace diffalg {

class QuotientRing;
using QRPtr = std::shared_ptr<const QuotientRing>;

// R = S/I with its reduced Groebner basis, grading data and cached staircase
// slices. Immutable after construction; the per-degree cache is guarded so
// values can be shared across threads.
class QuotientRing {
  public:
    static QRPtr make(RingPtr ring, std::vector<Polynomial> ideal_gens,
                      std::optional<MonomialOrder> order = {}, bool domain_flag = false);

    const RingPtr& poly_ring() const { return ring_; }
    const GroebnerBasis& gb() const { return gb_; }
    const std::vector<Polynomial>& ideal_generators() const { return ideal_gens_; }
    std::uint32_t characteristic() const { return ring_->field().characteristic(); }
    const Field& field() const { return ring_->field(); }
    std::size_t nvars() const { return ring_->nvars(); }

    bool is_graded() const { return graded_; }
    bool is_artinian() const { return artinian_; }
    bool domain_flag() const { return domain_flag_; }
    int krull_dim() const { return krull_dim_; }

    Polynomial nf(const Polynomial& f) const { return gb_.normal_form(f); }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return nf(a * b); }
    bool is_zero_in_r(const Polynomial& f) const { return gb_.contains(f); }

    // artinian data
    const Staircase& finite_staircase() const;
    long length() const { return finite_staircase().length(); }
    long top_degree() const;  // max weighted degree over the finite staircase

    // exact k-basis of R_d (graded slices exist for any d; empty when d < 0)
    const std::vector<Monomial>& basis_of_degree(long d) const;
    long dim_of_degree(long d) const { return static_cast<long>(basis_of_degree(d).size()); }

    std::vector<Polynomial> variable_polys() const;
    Polynomial variable(std::size_t i) const { return Polynomial::variable(ring_, i); }

    // coordinates of an already-normal-form homogeneous element in the
    // degree-d staircase basis
    KVec coords_in_degree(const Polynomial& nf_poly, long d) const;
    Polynomial from_coords_in_degree(const KVec& coords, long d) const;

  private:
    QuotientRing(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order, bool domain_flag);

    RingPtr ring_;
    std::vector<Polynomial> ideal_gens_;
    GroebnerBasis gb_;
    bool graded_ = false;
    bool artinian_ = false;
    bool domain_flag_ = false;
    int krull_dim_ = 0;
    std::optional<Staircase> staircase_;

    mutable std::mutex cache_mutex_;
    mutable std::map<long, std::vector<Monomial>> degree_cache_;
};

// (0 :_R f): kernel of multiplication in the finite-dimensional realization
// when R is artinian, tag-variable elimination otherwise. The list overload
// is the elementwise annihilator (intersection).
std::vector<Polynomial> annihilator(const QRPtr& r, const Polynomial& f);
std::vector<Polynomial> annihilator(const QRPtr& r, const std::vector<Polynomial>& elems);

// membership of f in the ideal (gens) of R
bool in_r_ideal(const QRPtr& r, const std::vector<Polynomial>& gens, const Polynomial& f);
// equality of two ideals of R
bool same_r_ideal(const QRPtr& r, const std::vector<Polynomial>& a,
                  const std::vector<Polynomial>& b);
// proper (not the unit ideal of R)
bool proper_r_ideal(const QRPtr& r, const std::vector<Polynomial>& gens);

}  // namespace diffalg

#endif
