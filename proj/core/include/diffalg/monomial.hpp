#ifndef DIFFALG_MONOMIAL_HPP
#define DIFFALG_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "diffalg/scalar.hpp"

namespace diffalg {

// Exponent vector of a power product. Degree questions are always asked
// against a weight vector supplied by the ambient ring.
class Monomial {
  public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exponents);

    std::size_t nvars() const { return e_.size(); }
    int exponent(std::size_t i) const { return e_[i]; }
    std::span<const int> exponents() const { return e_; }
    bool is_one() const;
    int total_degree() const;
    long weighted_degree(std::span<const int> weights) const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    // this / m; requires m.divides(*this)
    Monomial quotient(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial pow(const Monomial& a, unsigned e);

    // Canonical (order-independent) comparison used to keep polynomial term
    // lists deterministic: total degree, then exponent-lex.
    std::strong_ordering operator<=>(const Monomial& m) const;
    bool operator==(const Monomial& m) const { return e_ == m.e_; }

  private:
    std::vector<int> e_;
};

// Total orders on monomials compatible with multiplication (1 is minimal).
// grevlex compares by weighted degree first, so it is degree-compatible with
// the ambient (possibly weighted) grading; lex supports elimination.
class MonomialOrder {
  public:
    enum class Kind { grevlex, lex };

    static MonomialOrder grevlex(std::vector<int> weights);
    static MonomialOrder lex(std::size_t nvars);
    // precedence[0] is the most significant variable index
    static MonomialOrder grevlex(std::vector<int> weights, std::vector<std::size_t> precedence);
    static MonomialOrder lex(std::size_t nvars, std::vector<std::size_t> precedence);

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return precedence_.size(); }

    // <0, 0, >0 for a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;

  private:
    MonomialOrder(Kind k, std::vector<int> w, std::vector<std::size_t> prec)
        : kind_(k), weights_(std::move(w)), precedence_(std::move(prec)) {}
    Kind kind_;
    std::vector<int> weights_;               // used by grevlex
    std::vector<std::size_t> precedence_;
};

}  // namespace diffalg

#endif
