#ifndef DIFFALG_POLYNOMIAL_HPP
#define DIFFALG_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffalg/monomial.hpp"
#include "diffalg/scalar.hpp"

namespace diffalg {

// The ambient polynomial ring S = k[X_1..X_n] with a (possibly weighted)
// grading. Immutable; shared by value semantics through shared_ptr.
class PolyRing {
  public:
    PolyRing(Field field, std::vector<std::string> variables, std::vector<int> weights = {});

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::span<const int> weights() const { return weights_; }
    int max_weight() const;
    long weighted_degree(const Monomial& m) const { return m.weighted_degree(weights_); }

    // -1 when the name is unknown
    int var_index(std::string_view name) const;
    bool same_ring(const PolyRing& o) const;

    MonomialOrder default_order() const { return MonomialOrder::grevlex(weights_); }
    MonomialOrder lex_order() const { return MonomialOrder::lex(vars_.size()); }

  private:
    Field field_;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::vector<std::string> variables, std::vector<int> weights = {});

// Sparse exact multivariate polynomial. Terms are kept merged, zero-free and
// sorted descending under the canonical monomial comparison, so equality is
// structural.
class Polynomial {
  public:
    struct Term {
        Monomial mono;
        Scalar coeff;
    };

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::span<const Term> terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(long e) const;
    Polynomial scaled(const Scalar& c) const;
    // this * c*m
    Polynomial times_term(const Monomial& m, const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(std::size_t var) const;

    // maximal term under the given order; throws on zero
    Term leading_term(const MonomialOrder& ord) const;

    // constant term coefficient (zero scalar if absent)
    Scalar constant_coefficient() const;

    // weighted degree when homogeneous; nullopt otherwise. Zero counts as
    // homogeneous of every degree and reports nullopt with is_zero() true.
    std::optional<long> homogeneous_degree() const;
    long max_weighted_degree() const;  // 0 for the zero polynomial

    std::string to_string() const;

  private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}
    RingPtr ring_;
    std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace diffalg

#endif
