#ifndef DIFFALG_STAIRCASE_HPP
#define DIFFALG_STAIRCASE_HPP

#include <optional>
#include <vector>

#include "diffalg/groebner.hpp"

namespace diffalg {

// Monomials outside the leading-term ideal: a k-basis of S/I.
struct Staircase {
    bool finite = false;
    std::vector<Monomial> basis;            // everything when finite, else weighted degree <= bound
    std::optional<long> truncation_bound;

    long length() const;
};

// true iff the staircase is finite, i.e. some pure power of every variable
// appears among the leading terms
bool quotient_is_artinian(const GroebnerBasis& gb);

Staircase staircase_basis(const GroebnerBasis& gb, std::optional<long> degree_bound = {});

// exact k-basis of (S/I)_d for the weighted grading
std::vector<Monomial> staircase_of_degree(const GroebnerBasis& gb, long weighted_degree);

// Krull dimension of S/I from the leading-term ideal; throws on the unit
// ideal.
int krull_dimension(const GroebnerBasis& gb);

long default_truncation_bound(const GroebnerBasis& gb);  // 4 * max generator degree

}  // namespace diffalg

#endif
