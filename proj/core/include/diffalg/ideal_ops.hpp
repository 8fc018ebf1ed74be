#ifndef DIFFALG_IDEAL_OPS_HPP
#define DIFFALG_IDEAL_OPS_HPP

#include <vector>

#include "diffalg/staircase.hpp"

namespace diffalg {

bool all_homogeneous(const std::vector<Polynomial>& polys);

GroebnerBasis ideal_gb(const RingPtr& ring, std::vector<Polynomial> gens, const MonomialOrder& ord);

bool same_ideal(const RingPtr& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b);

// Minimal homogeneous generating set of (gens) modulo the ideal (background);
// pass the defining ideal of R = S/I as background to minimalize inside R.
// Requires homogeneous gens in the irrelevant ideal; the count is mu.
std::vector<Polynomial> minimal_generators(const RingPtr& ring, std::vector<Polynomial> gens,
                                           std::vector<Polynomial> background = {});

// A ∩ B through a tag variable and lex elimination.
std::vector<Polynomial> ideal_intersection(const RingPtr& ring, const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b);

// (I : f) over the polynomial ring.
std::vector<Polynomial> ideal_colon(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                                    const Polynomial& f);

}  // namespace diffalg

#endif
