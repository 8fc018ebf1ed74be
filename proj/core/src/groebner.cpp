#include "diffalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace diffalg {

IdealBasis::IdealBasis(RingPtr r, std::vector<Polynomial> gens)
    : ring(std::move(r)), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.is_zero()) throw algebra_error("ideal generators must be nonzero");
        if (!g.ring()->same_ring(*ring)) throw algebra_error("ideal generator from the wrong ring");
    }
}

namespace {

Polynomial make_monic(const Polynomial& f, const MonomialOrder& ord) {
    Scalar lc = f.leading_term(ord).coeff;
    return lc.is_one() ? f : f.scaled(lc.inverse());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    auto lf = f.leading_term(ord);
    auto lg = g.leading_term(ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = f.times_term(l.quotient(lf.mono), lf.coeff.inverse());
    Polynomial b = g.times_term(l.quotient(lg.mono), lg.coeff.inverse());
    return a - b;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lead, const MonomialOrder& ord) {
    Polynomial work = f;
    Polynomial rem = Polynomial::zero(f.ring());
    while (!work.is_zero()) {
        auto lt = work.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lead[i].divides(lt.mono)) continue;
            Scalar factor = lt.coeff / basis[i].leading_term(ord).coeff;
            work = work - basis[i].times_term(lt.mono.quotient(lead[i]), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
            rem = rem + t;
            work = work - t;
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis GroebnerBasis::compute(const IdealBasis& input, MonomialOrder order) {
    if (order.nvars() != input.ring->nvars())
        throw algebra_error("monomial order arity does not match the ring");
    std::vector<Polynomial> basis;
    std::vector<Monomial> lead;
    auto push = [&](const Polynomial& f) {
        Polynomial m = make_monic(f, order);
        basis.push_back(m);
        lead.push_back(m.leading_term(order).mono);
    };
    for (const auto& g : input.generators) push(g);

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto enqueue = [&](std::size_t i, std::size_t j) {
        queue.push_back(Pair{i, j, Monomial::lcm(lead[i], lead[j])});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

    while (!queue.empty()) {
        // normal selection: smallest lcm under the order
        std::size_t best = 0;
        for (std::size_t q = 1; q < queue.size(); ++q)
            if (order.less(queue[q].lcm, queue[best].lcm)) best = q;
        Pair p = queue[best];
        queue.erase(queue.begin() + best);
        processed.insert({p.i, p.j});

        // product criterion: coprime leading monomials reduce to zero
        if (lead[p.i] * lead[p.j] == p.lcm) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!lead[k].divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (processed.count({key1.first, key1.second}) &&
                processed.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
        Polynomial r = reduce_full(s, basis, lead, order);
        if (r.is_zero()) continue;
        std::size_t idx = basis.size();
        push(r);
        for (std::size_t k = 0; k < idx; ++k) enqueue(k, idx);
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    std::vector<bool> drop(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[i] || drop[j]) continue;
            if (lead[j].divides(lead[i]) && (lead[i] != lead[j] || j < i)) drop[i] = true;
        }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!drop[i]) minimal.push_back(basis[i]);

    // inter-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> others_lead;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) {
                    others.push_back(minimal[j]);
                    others_lead.push_back(minimal[j].leading_term(order).mono);
                }
            Polynomial r = reduce_full(minimal[i], others, others_lead, order);
            if (r.is_zero()) throw algebra_error("internal: minimal basis element reduced to zero");
            r = make_monic(r, order);
            if (!(r == minimal[i])) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    return GroebnerBasis(input.ring, order, std::move(minimal));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Polynomial> elems)
    : ring_(std::move(ring)), order_(std::move(ord)), elements_(std::move(elems)) {
    lead_.reserve(elements_.size());
    for (const auto& e : elements_) lead_.push_back(e.leading_term(order_).mono);
}

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

bool GroebnerBasis::is_homogeneous() const {
    for (const auto& e : elements_)
        if (!e.homogeneous_degree().has_value()) return false;
    return true;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    if (!f.ring()->same_ring(*ring_)) throw algebra_error("normal form across rings");
    return reduce_full(f, elements_, lead_, order_);
}

bool GroebnerBasis::same_ideal(const GroebnerBasis& o) const {
    if (!ring_->same_ring(*o.ring_)) return false;
    for (const auto& e : elements_)
        if (!o.contains(e)) return false;
    for (const auto& e : o.elements_)
        if (!contains(e)) return false;
    return true;
}

std::pair<Polynomial, Polynomial> divide_single(const Polynomial& f, const Polynomial& g,
                                                const MonomialOrder& ord) {
    if (g.is_zero()) throw algebra_error("division by zero polynomial");
    auto lg = g.leading_term(ord);
    Polynomial quot = Polynomial::zero(f.ring());
    Polynomial rem = Polynomial::zero(f.ring());
    Polynomial work = f;
    while (!work.is_zero()) {
        auto lt = work.leading_term(ord);
        if (lg.mono.divides(lt.mono)) {
            Monomial q = lt.mono.quotient(lg.mono);
            Scalar c = lt.coeff / lg.coeff;
            quot = quot + Polynomial::monomial(f.ring(), q, c);
            work = work - g.times_term(q, c);
        } else {
            Polynomial t = Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
            rem = rem + t;
            work = work - t;
        }
    }
    return {quot, rem};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    auto [q, r] = divide_single(f, g, ord);
    if (!r.is_zero()) throw algebra_error("inexact polynomial division");
    return q;
}

}  // namespace diffalg
