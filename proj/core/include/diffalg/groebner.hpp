#ifndef DIFFALG_GROEBNER_HPP
#define DIFFALG_GROEBNER_HPP

#include <vector>

#include "diffalg/polynomial.hpp"

namespace diffalg {

struct IdealBasis {
    RingPtr ring;
    std::vector<Polynomial> generators;

    IdealBasis(RingPtr r, std::vector<Polynomial> gens);
};

// Reduced Groebner basis: monic elements, no leading term divides another,
// every element fully reduced against the rest. Unique for (ideal, order).
class GroebnerBasis {
  public:
    static GroebnerBasis compute(const IdealBasis& input, MonomialOrder order);

    const std::vector<Polynomial>& elements() const { return elements_; }
    const std::vector<Monomial>& leading_monomials() const { return lead_; }
    const MonomialOrder& order() const { return order_; }
    const RingPtr& ring() const { return ring_; }

    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return elements_.empty(); }
    bool is_homogeneous() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool same_ideal(const GroebnerBasis& o) const;

  private:
    GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Polynomial> elems);
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    std::vector<Monomial> lead_;
};

// Quotient and remainder of division by a single nonzero polynomial; the
// remainder has no term divisible by LT(g).
std::pair<Polynomial, Polynomial> divide_single(const Polynomial& f, const Polynomial& g,
                                                const MonomialOrder& ord);
// Exact division; throws when f is not a multiple of g.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace diffalg

#endif
