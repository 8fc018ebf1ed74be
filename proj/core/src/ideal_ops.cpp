#include "diffalg/ideal_ops.hpp"

#include <algorithm>

namespace diffalg {

bool all_homogeneous(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys)
        if (!p.is_zero() && !p.homogeneous_degree().has_value()) return false;
    return true;
}

GroebnerBasis ideal_gb(const RingPtr& ring, std::vector<Polynomial> gens, const MonomialOrder& ord) {
    std::vector<Polynomial> nonzero;
    for (auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(std::move(g));
    return GroebnerBasis::compute(IdealBasis(ring, std::move(nonzero)), ord);
}

bool same_ideal(const RingPtr& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b) {
    MonomialOrder ord = ring->default_order();
    return ideal_gb(ring, a, ord).same_ideal(ideal_gb(ring, b, ord));
}

std::vector<Polynomial> minimal_generators(const RingPtr& ring, std::vector<Polynomial> gens,
                                           std::vector<Polynomial> background) {
    if (!all_homogeneous(gens))
        throw algebra_error("minimal generators require homogeneous input");
    for (const auto& g : gens)
        if (!g.is_zero() && !g.constant_coefficient().is_zero())
            throw algebra_error("minimal generators require input inside the irrelevant ideal");
    MonomialOrder ord = ring->default_order();
    std::vector<Polynomial> sorted;
    for (auto& g : gens)
        if (!g.is_zero()) sorted.push_back(std::move(g));
    std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
        return *a.homogeneous_degree() < *b.homogeneous_degree();
    });
    std::vector<Polynomial> kept;
    for (const auto& g : sorted) {
        std::vector<Polynomial> test = background;
        test.insert(test.end(), kept.begin(), kept.end());
        GroebnerBasis gb = ideal_gb(ring, test, ord);
        if (!gb.contains(g)) kept.push_back(g);
    }
    return kept;
}

namespace {

// view of S inside S[t] with the tag variable first
struct TagRing {
    RingPtr extended;
    RingPtr base;

    explicit TagRing(const RingPtr& ring) : base(ring) {
        std::vector<std::string> vars;
        vars.push_back("__t");
        for (const auto& v : ring->var_names()) vars.push_back(v);
        std::vector<int> weights;
        weights.push_back(1);
        for (int w : ring->weights()) weights.push_back(w);
        extended = make_ring(ring->field(), std::move(vars), std::move(weights));
    }

    Polynomial lift(const Polynomial& f) const {
        std::vector<Polynomial::Term> terms;
        for (const auto& t : f.terms()) {
            std::vector<int> e;
            e.push_back(0);
            for (int x : t.mono.exponents()) e.push_back(x);
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(extended, std::move(terms));
    }

    Polynomial tag() const { return Polynomial::variable(extended, 0); }

    bool involves_tag(const Polynomial& f) const {
        for (const auto& t : f.terms())
            if (t.mono.exponent(0) > 0) return true;
        return false;
    }

    Polynomial project(const Polynomial& f) const {
        std::vector<Polynomial::Term> terms;
        for (const auto& t : f.terms()) {
            std::vector<int> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(base, std::move(terms));
    }
};

}  // namespace

std::vector<Polynomial> ideal_intersection(const RingPtr& ring, const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b) {
    TagRing tr(ring);
    Polynomial t = tr.tag();
    Polynomial one_minus_t = Polynomial::constant(tr.extended, ring->field().one()) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a)
        if (!f.is_zero()) gens.push_back(t * tr.lift(f));
    for (const auto& f : b)
        if (!f.is_zero()) gens.push_back(one_minus_t * tr.lift(f));
    GroebnerBasis gb = ideal_gb(tr.extended, std::move(gens), tr.extended->lex_order());
    std::vector<Polynomial> out;
    for (const auto& e : gb.elements())
        if (!tr.involves_tag(e)) out.push_back(tr.project(e));
    return out;
}

std::vector<Polynomial> ideal_colon(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                                    const Polynomial& f) {
    if (f.is_zero()) throw algebra_error("colon by zero");
    std::vector<Polynomial> meet = ideal_intersection(ring, ideal, {f});
    MonomialOrder ord = ring->lex_order();
    std::vector<Polynomial> out;
    for (const auto& h : meet) out.push_back(divide_exact(h, f, ord));
    return out;
}

}  // namespace diffalg
