#include "diffalg/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace diffalg {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int e : e_)
        if (e < 0) throw algebra_error("negative exponent in monomial");
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

long Monomial::weighted_degree(std::span<const int> weights) const {
    long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long>(weights[i]) * e_[i];
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    std::vector<int> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + m.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& m) const {
    std::vector<int> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        e[i] = e_[i] - m.e_[i];
        if (e[i] < 0) throw algebra_error("monomial quotient is not exact");
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(const Monomial& a, unsigned n) {
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] * static_cast<int>(n);
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& m) const {
    if (int a = total_degree(), b = m.total_degree(); a != b)
        return a <=> b;
    return e_ <=> m.e_;
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> weights) {
    std::vector<std::size_t> prec(weights.size());
    for (std::size_t i = 0; i < prec.size(); ++i) prec[i] = i;
    return grevlex(std::move(weights), std::move(prec));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> prec(nvars);
    for (std::size_t i = 0; i < nvars; ++i) prec[i] = i;
    return lex(nvars, std::move(prec));
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> weights, std::vector<std::size_t> precedence) {
    if (weights.size() != precedence.size()) throw algebra_error("order weights/precedence mismatch");
    for (int w : weights)
        if (w <= 0) throw algebra_error("grading weights must be positive");
    return MonomialOrder(Kind::grevlex, std::move(weights), std::move(precedence));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars, std::vector<std::size_t> precedence) {
    if (nvars != precedence.size()) throw algebra_error("order precedence size mismatch");
    return MonomialOrder(Kind::lex, std::vector<int>(nvars, 1), std::move(precedence));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != precedence_.size() || b.nvars() != precedence_.size())
        throw algebra_error("monomial/order variable count mismatch");
    if (kind_ == Kind::lex) {
        for (std::size_t k = 0; k < precedence_.size(); ++k) {
            std::size_t i = precedence_[k];
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
        }
        return 0;
    }
    long da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
    if (da != db) return da < db ? -1 : 1;
    // grevlex tiebreak: smaller exponent on the least significant differing
    // variable wins
    for (std::size_t k = precedence_.size(); k-- > 0;) {
        std::size_t i = precedence_[k];
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

}  // namespace diffalg
