#include "diffalg/polynomial.hpp"

#include <algorithm>
#include <map>

namespace diffalg {

PolyRing::PolyRing(Field field, std::vector<std::string> variables, std::vector<int> weights)
    : field_(field), vars_(std::move(variables)), weights_(std::move(weights)) {
    if (vars_.empty()) throw algebra_error("a polynomial ring needs at least one variable");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size()) throw algebra_error("one weight per variable required");
    for (int w : weights_)
        if (w <= 0) throw algebra_error("grading weights must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw algebra_error("duplicate variable name " + vars_[i]);
}

int PolyRing::max_weight() const { return *std::max_element(weights_.begin(), weights_.end()); }

int PolyRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_ring(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_;
}

RingPtr make_ring(Field field, std::vector<std::string> variables, std::vector<int> weights) {
    return std::make_shared<PolyRing>(field, std::move(variables), std::move(weights));
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring() && !a.ring()->same_ring(*b.ring()))
        throw algebra_error("polynomials from different ambient rings");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    return monomial(std::move(ring), Monomial(0), std::move(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw algebra_error("variable index out of range");
    std::vector<int> e(ring->nvars(), 0);
    e[index] = 1;
    Scalar one = ring->field().one();
    return monomial(std::move(ring), Monomial(std::move(e)), std::move(one));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    if (m.nvars() == 0) m = Monomial(ring->nvars());
    if (m.nvars() != ring->nvars()) throw algebra_error("monomial arity mismatch");
    if (c.characteristic() != ring->field().characteristic())
        throw algebra_error("coefficient from the wrong field");
    if (c.is_zero()) return zero(std::move(ring));
    std::vector<Term> t;
    t.push_back(Term{std::move(m), std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, Scalar, std::greater<>> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != ring->nvars()) throw algebra_error("monomial arity mismatch");
        if (t.coeff.characteristic() != ring->field().characteristic())
            throw algebra_error("coefficient from the wrong field");
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(std::move(t.mono), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back(Term{m, c});
    return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    std::vector<Term> t;
    t.reserve(terms_.size() + o.terms_.size());
    // merge of two descending-sorted term lists
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto cmp = terms_[i].mono <=> o.terms_[j].mono;
        if (cmp == std::strong_ordering::greater)
            t.push_back(terms_[i++]);
        else if (cmp == std::strong_ordering::less)
            t.push_back(o.terms_[j++]);
        else {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) t.push_back(Term{terms_[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) t.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) t.push_back(o.terms_[j]);
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coeff = -term.coeff;
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    std::map<Monomial, Scalar, std::greater<>> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    std::vector<Term> t;
    t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) t.push_back(Term{m, c});
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw algebra_error("negative polynomial exponent");
    Polynomial out = constant(ring_, ring_->field().one());
    Polynomial base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) out = out * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coeff = term.coeff * c;
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& term : t) {
        term.mono = term.mono * m;
        term.coeff = term.coeff * c;
    }
    // multiplying by a fixed monomial preserves the canonical sort
    return Polynomial(ring_, std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_ && !ring_->same_ring(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw algebra_error("unknown variable in derivative");
    std::vector<Term> t;
    for (const auto& term : terms_) {
        int e = term.mono.exponent(var);
        if (e == 0) continue;
        Scalar c = term.coeff * ring_->field().from_int(e);
        if (c.is_zero()) continue;  // p | e in characteristic p
        std::vector<int> ex(term.mono.exponents().begin(), term.mono.exponents().end());
        ex[var] -= 1;
        t.push_back(Term{Monomial(std::move(ex)), std::move(c)});
    }
    return from_terms(ring_, std::move(t));
}

Polynomial::Term Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw algebra_error("leading term of the zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
}

Scalar Polynomial::constant_coefficient() const {
    for (const auto& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return ring_->field().zero();
}

std::optional<long> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = ring_->weighted_degree(terms_[0].mono);
    for (const auto& t : terms_)
        if (ring_->weighted_degree(t.mono) != d) return std::nullopt;
    return d;
}

long Polynomial::max_weighted_degree() const {
    long d = 0;
    for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
    return d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool rational_field = ring_->field().is_rationals();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string coeff = t.coeff.to_string();
        bool negative = rational_field && coeff.size() && coeff[0] == '-';
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (negative) coeff = coeff.substr(1);
        std::string monos;
        for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
            int e = t.mono.exponent(v);
            if (e == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += ring_->var_names()[v];
            if (e > 1) monos += "^" + std::to_string(e);
        }
        if (monos.empty())
            out += coeff;
        else if (coeff == "1")
            out += monos;
        else
            out += coeff + "*" + monos;
    }
    return out;
}

}  // namespace diffalg
