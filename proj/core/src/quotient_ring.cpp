#include "diffalg/quotient_ring.hpp"

#include <algorithm>

namespace diffalg {

QRPtr QuotientRing::make(RingPtr ring, std::vector<Polynomial> ideal_gens,
                         std::optional<MonomialOrder> order, bool domain_flag) {
    MonomialOrder ord = order ? *order : ring->default_order();
    return QRPtr(new QuotientRing(std::move(ring), std::move(ideal_gens), ord, domain_flag));
}

QuotientRing::QuotientRing(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order,
                           bool domain_flag)
    : ring_(std::move(ring)),
      ideal_gens_(std::move(gens)),
      gb_(GroebnerBasis::compute(IdealBasis(ring_, ideal_gens_), order)),
      domain_flag_(domain_flag) {
    if (gb_.is_unit_ideal()) throw algebra_error("quotient by the unit ideal is the zero ring");
    graded_ = gb_.is_homogeneous();
    artinian_ = quotient_is_artinian(gb_);
    krull_dim_ = krull_dimension(gb_);
    if (artinian_) staircase_ = staircase_basis(gb_);
}

const Staircase& QuotientRing::finite_staircase() const {
    if (!staircase_) throw algebra_error("ring is not artinian: no finite staircase");
    return *staircase_;
}

long QuotientRing::top_degree() const {
    const Staircase& s = finite_staircase();
    long top = 0;
    for (const auto& m : s.basis) top = std::max(top, ring_->weighted_degree(m));
    return top;
}

const std::vector<Monomial>& QuotientRing::basis_of_degree(long d) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = degree_cache_.find(d);
    if (it == degree_cache_.end())
        it = degree_cache_.emplace(d, staircase_of_degree(gb_, d)).first;
    return it->second;
}

std::vector<Polynomial> QuotientRing::variable_polys() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) out.push_back(variable(i));
    return out;
}

KVec QuotientRing::coords_in_degree(const Polynomial& nf_poly, long d) const {
    const auto& basis = basis_of_degree(d);
    KVec coords(basis.size(), field().zero());
    for (const auto& t : nf_poly.terms()) {
        if (ring_->weighted_degree(t.mono) != d)
            throw algebra_error("coords_in_degree: element is not homogeneous of the stated degree");
        auto it = std::lower_bound(basis.begin(), basis.end(), t.mono);
        if (it == basis.end() || !(*it == t.mono))
            throw algebra_error("coords_in_degree: term outside the staircase (not a normal form?)");
        coords[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
    }
    return coords;
}

Polynomial QuotientRing::from_coords_in_degree(const KVec& coords, long d) const {
    const auto& basis = basis_of_degree(d);
    if (coords.size() != basis.size()) throw algebra_error("coordinate width mismatch");
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) terms.push_back({basis[i], coords[i]});
    return Polynomial::from_terms(ring_, std::move(terms));
}

namespace {

std::vector<Polynomial> annihilator_artinian(const QRPtr& r, const std::vector<Polynomial>& elems) {
    const Staircase& st = r->finite_staircase();
    std::size_t n = st.basis.size();
    KMatrix stacked(r->field(), n * elems.size(), n);
    for (std::size_t e = 0; e < elems.size(); ++e) {
        for (std::size_t c = 0; c < n; ++c) {
            Polynomial prod =
                r->nf(elems[e].times_term(st.basis[c], r->field().one()));
            for (const auto& t : prod.terms()) {
                auto it = std::lower_bound(st.basis.begin(), st.basis.end(), t.mono);
                stacked.at(e * n + static_cast<std::size_t>(it - st.basis.begin()), c) = t.coeff;
            }
        }
    }
    std::vector<Polynomial> out;
    for (const auto& v : kernel_basis(stacked)) {
        std::vector<Polynomial::Term> terms;
        for (std::size_t c = 0; c < n; ++c)
            if (!v[c].is_zero()) terms.push_back({st.basis[c], v[c]});
        out.push_back(Polynomial::from_terms(r->poly_ring(), std::move(terms)));
    }
    return out;
}

}  // namespace

std::vector<Polynomial> annihilator(const QRPtr& r, const Polynomial& f) {
    return annihilator(r, std::vector<Polynomial>{f});
}

std::vector<Polynomial> annihilator(const QRPtr& r, const std::vector<Polynomial>& elems) {
    std::vector<Polynomial> reduced;
    for (const auto& e : elems) {
        Polynomial n = r->nf(e);
        if (!n.is_zero()) reduced.push_back(std::move(n));
    }
    if (reduced.empty()) throw algebra_error("annihilator of zero");
    if (r->is_artinian()) return annihilator_artinian(r, reduced);
    // (0 :_R f) = (I :_S f)/I, intersected over the list
    const std::vector<Polynomial>& ideal = r->ideal_generators();
    std::optional<std::vector<Polynomial>> meet;
    for (const auto& f : reduced) {
        std::vector<Polynomial> colon = ideal_colon(r->poly_ring(), ideal, f);
        meet = meet ? ideal_intersection(r->poly_ring(), *meet, colon) : std::move(colon);
    }
    std::vector<Polynomial> out;
    for (const auto& g : *meet) {
        Polynomial n = r->nf(g);
        if (!n.is_zero()) out.push_back(std::move(n));
    }
    return out;
}

bool in_r_ideal(const QRPtr& r, const std::vector<Polynomial>& gens, const Polynomial& f) {
    std::vector<Polynomial> lifted = gens;
    for (const auto& g : r->ideal_generators()) lifted.push_back(g);
    return ideal_gb(r->poly_ring(), lifted, r->gb().order()).contains(f);
}

bool same_r_ideal(const QRPtr& r, const std::vector<Polynomial>& a,
                  const std::vector<Polynomial>& b) {
    std::vector<Polynomial> ea = a, eb = b;
    for (const auto& g : r->ideal_generators()) {
        ea.push_back(g);
        eb.push_back(g);
    }
    return ideal_gb(r->poly_ring(), ea, r->gb().order())
        .same_ideal(ideal_gb(r->poly_ring(), eb, r->gb().order()));
}

bool proper_r_ideal(const QRPtr& r, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> lifted = gens;
    for (const auto& g : r->ideal_generators()) lifted.push_back(g);
    return !ideal_gb(r->poly_ring(), lifted, r->gb().order()).is_unit_ideal();
}

}  // namespace diffalg
