#include "diffalg/classify.hpp"

#include <algorithm>

#include "diffalg/krealize.hpp"

namespace diffalg {

SocleResult socle(const QRPtr& ring) {
    if (!ring->is_artinian()) throw algebra_error("socle requires an artinian ring");
    KRealization real = KRealization::of_ring(ring);
    std::size_t n = real.dim();
    KMatrix stacked(ring->field(), n * ring->nvars(), n);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        KMatrix mv = real.variable_matrix(v);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.at(v * n + r, c) = mv.at(r, c);
    }
    SocleResult out;
    for (const auto& vec : kernel_basis(stacked)) {
        Polynomial p = Polynomial::zero(ring->poly_ring());
        for (std::size_t i = 0; i < n; ++i)
            if (!vec[i].is_zero()) p = p + real.representative_poly(i).scaled(vec[i]);
        out.basis.push_back(ring->nf(p));
    }
    out.dim = static_cast<long>(out.basis.size());
    return out;
}

bool is_gorenstein_artinian(const QRPtr& ring) { return socle(ring).dim == 1; }

long embedding_dimension(const QRPtr& ring) {
    if (!ring->is_graded()) throw algebra_error("embedding dimension needs a graded ring");
    long maxw = ring->poly_ring()->max_weight();
    long embdim = 0;
    for (long d = 1; d <= maxw; ++d) {
        long dim_d = ring->dim_of_degree(d);
        if (dim_d == 0) continue;
        RowSpace msq(ring->field(), static_cast<std::size_t>(dim_d));
        for (std::size_t u = 0; u < ring->nvars(); ++u)
            for (std::size_t v = u; v < ring->nvars(); ++v) {
                long rest = d - ring->poly_ring()->weights()[u] - ring->poly_ring()->weights()[v];
                if (rest < 0) continue;
                Polynomial xy = ring->variable(u) * ring->variable(v);
                for (const auto& m : ring->basis_of_degree(rest)) {
                    Polynomial p = ring->nf(xy.times_term(m, ring->field().one()));
                    msq.insert(ring->coords_in_degree(p, d));
                }
            }
        embdim += dim_d - static_cast<long>(msq.dim());
    }
    return embdim;
}

bool fact_embdim_is_dim_plus_one(const QRPtr& ring) {
    return embedding_dimension(ring) == ring->krull_dim() + 1;
}

namespace {

// smallest-degree nonzero element killed by every variable, within the bound
std::optional<Polynomial> torsion_witness(const QRPtr& ring, long cutoff) {
    long hi = ring->is_artinian() ? ring->top_degree() : cutoff;
    for (long d = 1; d <= hi; ++d) {
        long dim_d = ring->dim_of_degree(d);
        if (dim_d == 0) continue;
        std::size_t rows = 0;
        std::vector<KMatrix> pieces;
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            long e = ring->poly_ring()->weights()[v];
            long dim_up = ring->dim_of_degree(d + e);
            KMatrix mv(ring->field(), dim_up, dim_d);
            const auto& basis = ring->basis_of_degree(d);
            for (long c = 0; c < dim_d; ++c) {
                Polynomial p = ring->nf(ring->variable(v).times_term(basis[c], ring->field().one()));
                KVec col = ring->coords_in_degree(p, d + e);
                for (long r = 0; r < dim_up; ++r) mv.at(r, c) = col[r];
            }
            rows += mv.rows();
            pieces.push_back(std::move(mv));
        }
        KMatrix stacked(ring->field(), rows, dim_d);
        std::size_t off = 0;
        for (const auto& mv : pieces) {
            for (std::size_t r = 0; r < mv.rows(); ++r)
                for (std::size_t c = 0; c < mv.cols(); ++c) stacked.at(off + r, c) = mv.at(r, c);
            off += mv.rows();
        }
        auto kernel = kernel_basis(stacked);
        if (!kernel.empty()) return ring->from_coords_in_degree(kernel[0], d);
    }
    return std::nullopt;
}

bool is_nzd(const QRPtr& ring, const Polynomial& f) {
    auto colon = ideal_colon(ring->poly_ring(), ring->ideal_generators(), f);
    return same_ideal(ring->poly_ring(), colon, ring->ideal_generators());
}

// small sums of variables, the only nonzerodivisor candidates tried
std::vector<Polynomial> nzd_candidates(const QRPtr& ring) {
    std::vector<Polynomial> out;
    std::size_t n = ring->nvars();
    for (std::size_t v = 0; v < n; ++v) out.push_back(ring->variable(v));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        // only weight-homogeneous sums qualify
        std::optional<int> w;
        bool ok = true;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) {
                if (w && *w != ring->poly_ring()->weights()[v]) ok = false;
                w = ring->poly_ring()->weights()[v];
            }
        if (!ok) continue;
        Polynomial s = Polynomial::zero(ring->poly_ring());
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) s = s + ring->variable(v);
        out.push_back(std::move(s));
    }
    return out;
}

DepthResult depth_rec(const QRPtr& ring, long cutoff, int budget) {
    DepthResult out;
    if (ring->is_artinian()) {
        out.value = 0;
        out.certified = true;
        out.note = "artinian";
        return out;
    }
    if (auto witness = torsion_witness(ring, cutoff)) {
        out.value = 0;
        out.certified = true;
        out.note = "torsion witness " + witness->to_string();
        return out;
    }
    Polynomial nzd = Polynomial::zero(ring->poly_ring());
    bool found = false;
    if (ring->domain_flag()) {
        nzd = ring->variable(0);
        found = true;
    } else {
        for (const auto& f : nzd_candidates(ring)) {
            if (ring->nf(f).is_zero()) continue;
            if (is_nzd(ring, f)) {
                nzd = f;
                found = true;
                break;
            }
        }
    }
    if (!found) {
        out.value = 0;
        out.certified = false;
        out.note = "inconclusive within degree bound " + std::to_string(cutoff);
        return out;
    }
    if (ring->krull_dim() == 1 || budget <= 1) {
        out.value = 1;
        out.certified = true;
        out.note = "regular element " + nzd.to_string();
        return out;
    }
    std::vector<Polynomial> quotient_gens = ring->ideal_generators();
    quotient_gens.push_back(nzd);
    QRPtr next = QuotientRing::make(ring->poly_ring(), quotient_gens, ring->gb().order());
    DepthResult rest = depth_rec(next, cutoff, budget - 1);
    out.value = 1 + rest.value;
    out.certified = rest.certified;
    out.note = "regular element " + nzd.to_string() + "; " + rest.note;
    return out;
}

}  // namespace

DepthResult depth_graded(const QRPtr& ring, long cutoff) {
    if (!ring->is_graded()) throw algebra_error("depth computation needs a graded ring");
    return depth_rec(ring, cutoff, ring->krull_dim());
}

bool is_regular_sequence(const std::vector<Polynomial>& seq, const QRPtr& ring) {
    std::vector<Polynomial> running = ring->ideal_generators();
    for (const auto& f : seq) {
        Polynomial r = ring->nf(f);
        if (!r.constant_coefficient().is_zero())
            throw algebra_error("regular sequence elements must lie in the maximal ideal");
        auto colon = ideal_colon(ring->poly_ring(), running, f);
        if (!same_ideal(ring->poly_ring(), colon, running)) return false;
        running.push_back(f);
    }
    return !ideal_gb(ring->poly_ring(), running, ring->gb().order()).is_unit_ideal();
}

CIResult is_complete_intersection_ideal(const std::vector<Polynomial>& gens, const QRPtr& ring,
                                        long cutoff) {
    CIResult out;
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens) {
        Polynomial r = ring->nf(g);
        if (!r.is_zero()) nonzero.push_back(std::move(r));
    }
    if (nonzero.empty()) {
        out.is_ci = true;
        out.reason = "zero ideal";
        return out;
    }
    DepthResult depth = depth_graded(ring, cutoff);
    if (!depth.certified) throw algebra_error("depth inconclusive: " + depth.note);
    if (depth.value == 0) {
        out.is_ci = false;
        out.reason = "depth 0, B != 0";
        return out;
    }
    std::vector<Polynomial> mins = minimal_generators(ring->poly_ring(), nonzero,
                                                      ring->ideal_generators());
    long mu = static_cast<long>(mins.size());
    if (mu > depth.value) {
        out.is_ci = false;
        out.reason = "mu(B) = " + std::to_string(mu) + " > depth = " + std::to_string(depth.value);
        return out;
    }
    std::sort(mins.begin(), mins.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.to_string() < b.to_string();
    });
    do {
        if (is_regular_sequence(mins, ring)) {
            out.is_ci = true;
            out.reason = "generated by a regular sequence";
            return out;
        }
    } while (std::next_permutation(mins.begin(), mins.end(),
                                   [](const Polynomial& a, const Polynomial& b) {
                                       return a.to_string() < b.to_string();
                                   }));
    out.is_ci = false;
    out.reason = "no permutation of the minimal generators is a regular sequence";
    return out;
}

CIPresentationResult ci_presentation_check(const QRPtr& ring) {
    CIPresentationResult out{CIPresentation::neither, 0, 0};
    out.mu = static_cast<long>(
        minimal_generators(ring->poly_ring(), ring->ideal_generators()).size());
    out.height = static_cast<long>(ring->nvars()) - ring->krull_dim();
    if (out.mu == out.height)
        out.verdict = CIPresentation::complete_intersection;
    else if (out.mu == out.height + 1)
        out.verdict = CIPresentation::almost_ci;
    return out;
}

TRCertificate totally_reflexive_check(const PresentedModule& m, int ext_bound, long cutoff) {
    TRCertificate out;
    out.ext_bound = ext_bound;
    if (ext_bound < 1) throw algebra_error("ext bound must be >= 1");
    BidualityResult bi = biduality_check(m, cutoff);
    bool absolute = bi.complete;
    if (!bi.iso) {
        out.stage = "biduality: " + bi.detail;
        return out;
    }
    FreeResolution res(m, cutoff);
    for (int i = 1; i <= ext_bound; ++i) {
        GradedDims e = ext_dims(res, i, cutoff);
        absolute = absolute && e.complete;
        if (!e.is_zero()) {
            out.stage = "Ext^" + std::to_string(i) + "(M, R) != 0";
            out.failed_index = i;
            return out;
        }
    }
    HomDual dual = hom_dual(m, cutoff);
    FreeResolution res_star(dual.module, cutoff);
    for (int i = 1; i <= ext_bound; ++i) {
        GradedDims e = ext_dims(res_star, i, cutoff);
        absolute = absolute && e.complete;
        if (!e.is_zero()) {
            out.stage = "Ext^" + std::to_string(i) + "(M*, R) != 0";
            out.failed_index = i;
            return out;
        }
    }
    out.pass = true;
    out.absolute = absolute;
    return out;
}

GdimEvidence gdim_evidence(const PresentedModule& m, int ext_bound, long cutoff,
                           int syzygy_search_depth) {
    GdimEvidence out;
    out.ext_bound = ext_bound;
    TRCertificate tr = totally_reflexive_check(m, ext_bound, cutoff);
    if (tr.pass) {
        out.kind = GdimEvidence::Kind::zero;
        out.note = "totally reflexive";
        return out;
    }
    FreeResolution res(m, cutoff);
    for (int d = 1; d <= syzygy_search_depth; ++d) {
        res.extend_to(d + 1);
        // Syz_d = im(d_d), presented by the resolution differentials
        std::vector<long> twists(res.twists(d).begin(), res.twists(d).end());
        std::vector<RVector> rels;
        for (std::size_t j = 0; j < res.diff(d + 1).src_rank(); ++j)
            rels.push_back(res.diff(d + 1).column(j));
        PresentedModule syz(m.ring(), twists, rels);
        if (syz.num_gens() == 0) {
            // the resolution terminated: M has finite projective dimension
            out.kind = GdimEvidence::Kind::at_most;
            out.level = d - 1;
            out.note = "free resolution terminates";
            return out;
        }
        TRCertificate syz_tr = totally_reflexive_check(syz, ext_bound, cutoff);
        if (syz_tr.pass) {
            out.kind = GdimEvidence::Kind::at_most;
            out.level = d;
            out.note = "Syz_" + std::to_string(d) + " is totally reflexive";
            return out;
        }
    }
    out.kind = GdimEvidence::Kind::obstructed;
    for (int i = 1; i <= ext_bound; ++i) {
        GradedDims e = ext_dims(res, i, cutoff);
        if (!e.is_zero()) {
            out.level = i;
            out.note = "Ext^" + std::to_string(i) + "(M, R) has dim " + std::to_string(e.total);
            return out;
        }
    }
    out.level = 0;
    out.note = "obstruction outside Ext(M, R): " + tr.stage;
    return out;
}

RingVerdict classify_ring(const QRPtr& ring, long cutoff) {
    RingVerdict out;
    out.dim = ring->krull_dim();
    out.depth = depth_graded(ring, cutoff);
    out.embdim = embedding_dimension(ring);
    out.presentation = ci_presentation_check(ring);
    if (ring->is_artinian()) {
        out.length = ring->length();
        out.socle = socle(ring);
        out.gorenstein = out.socle.dim == 1;
        out.notes = "gorenstein via socle criterion";
    } else if (out.presentation.verdict == CIPresentation::complete_intersection) {
        out.gorenstein = true;
        out.notes = "gorenstein via complete-intersection presentation";
    } else {
        out.notes = "gorenstein undetermined for this ring class";
    }
    return out;
}

}  // namespace diffalg
