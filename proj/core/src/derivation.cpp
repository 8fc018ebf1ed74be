#include "diffalg/derivation.hpp"

#include <algorithm>

#include "diffalg/krealize.hpp"

namespace diffalg {

namespace {

Polynomial apply_images(const QuotientRing& ring, const std::vector<Polynomial>& images,
                        const Polynomial& f) {
    Polynomial out = Polynomial::zero(ring.poly_ring());
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (images[i].is_zero()) continue;
        out = out + f.derivative(i) * images[i];
    }
    return ring.nf(out);
}

}  // namespace

Polynomial Derivation::apply(const Polynomial& f) const {
    return apply_images(*ring_, images_, f);
}

WellDefinedCheck WellDefinedCheck::run(QRPtr ring, std::vector<Polynomial> images,
                                       std::string name) {
    if (images.size() != ring->nvars())
        throw algebra_error("derivation needs one image per variable");
    for (const auto& im : images)
        if (!im.ring()->same_ring(*ring->poly_ring()))
            throw algebra_error("derivation image from the wrong ring");
    WellDefinedCheck out;
    const auto& gens = ring->ideal_generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Polynomial r = apply_images(*ring, images, gens[j]);
        if (!r.is_zero()) {
            out.failing_generator = static_cast<int>(j);
            out.residue = std::move(r);
            return out;
        }
    }
    out.derivation = Derivation(std::move(ring), std::move(images), std::move(name));
    return out;
}

bool is_differential_ideal(const QRPtr& ring, const std::vector<Polynomial>& ideal_gens,
                           const std::vector<Derivation>& ds) {
    for (const auto& d : ds)
        for (const auto& g : ideal_gens)
            if (!in_r_ideal(ring, ideal_gens, d.apply(g))) return false;
    return true;
}

namespace {

// descending fixpoint: largest subspace of `start` stable under all
// operators; trace records dims per iteration
std::vector<KVec> stable_subspace(const Field& field, std::vector<KVec> basis,
                                  const std::vector<KMatrix>& operators,
                                  std::vector<std::size_t>& trace) {
    trace.push_back(basis.size());
    while (!basis.empty()) {
        std::size_t width = basis[0].size();
        RowSpace w(field, width);
        for (const auto& b : basis) w.insert(b);
        // constraints: residues of operator images, expressed in the
        // coefficient space of the current basis
        std::vector<KVec> rows;  // one row per (operator, residue coordinate)
        std::size_t ncoef = basis.size();
        for (const auto& op : operators) {
            std::vector<KVec> residues;
            for (const auto& b : basis) residues.push_back(w.reduce(op.apply(b)));
            for (std::size_t coord = 0; coord < width; ++coord) {
                KVec row(ncoef, field.zero());
                bool has_nonzero = false;
                for (std::size_t i = 0; i < ncoef; ++i) {
                    row[i] = residues[i][coord];
                    if (!row[i].is_zero()) has_nonzero = true;
                }
                if (has_nonzero) rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) break;  // stable
        KMatrix constraint(field, rows.size(), ncoef);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < ncoef; ++c) constraint.at(r, c) = rows[r][c];
        std::vector<KVec> coeff_kernel = kernel_basis(constraint);
        if (coeff_kernel.size() == basis.size()) break;  // no shrink
        std::vector<KVec> next;
        for (const auto& coeffs : coeff_kernel) {
            KVec v(width, field.zero());
            for (std::size_t i = 0; i < ncoef; ++i) {
                if (coeffs[i].is_zero()) continue;
                for (std::size_t c = 0; c < width; ++c) v[c] += coeffs[i] * basis[i][c];
            }
            next.push_back(std::move(v));
        }
        basis = std::move(next);
        trace.push_back(basis.size());
    }
    return basis;
}

// drop ideal generators lying in the ideal of the others (artinian case)
std::vector<Polynomial> minimalize_artinian(const QRPtr& ring, std::vector<Polynomial> gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.max_weighted_degree() != b.max_weighted_degree())
            return a.max_weighted_degree() < b.max_weighted_degree();
        return a.term_count() < b.term_count();
    });
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (others.empty()) break;
        if (in_r_ideal(ring, others, gens[i])) gens.erase(gens.begin() + i);
    }
    return gens;
}

MaxDiffResult fixpoint_b(const QRPtr& ring, const std::vector<Derivation>& ds) {
    if (!ring->is_artinian())
        throw algebra_error("fixpoint mode requires an artinian ring (use verify with a candidate)");
    KRealization real = KRealization::of_ring(ring);
    std::vector<KMatrix> ops;
    for (const auto& d : ds)
        ops.push_back(real.operator_matrix(
            [&](const RVector& v) { return RVector{d.apply(v[0])}; }));
    for (std::size_t v = 0; v < ring->nvars(); ++v) ops.push_back(real.variable_matrix(v));

    // start from m: every basis class with no constant term
    std::vector<KVec> start;
    for (std::size_t i = 0; i < real.dim(); ++i) {
        Polynomial rep = real.representative_poly(i);
        if (rep.is_constant() && !rep.is_zero()) continue;
        KVec unit(real.dim(), ring->field().zero());
        unit[i] = ring->field().one();
        start.push_back(std::move(unit));
    }
    MaxDiffResult out;
    out.mode_used = MaxDiffMode::fixpoint;
    std::vector<KVec> stable = stable_subspace(ring->field(), std::move(start), ops,
                                               out.fixpoint_trace);
    std::vector<Polynomial> gens;
    for (const auto& v : stable) {
        Polynomial p = Polynomial::zero(ring->poly_ring());
        for (std::size_t i = 0; i < real.dim(); ++i)
            if (!v[i].is_zero()) p = p + real.representative_poly(i).scaled(v[i]);
        if (!p.is_zero()) gens.push_back(ring->nf(p));
    }
    out.generators = minimalize_artinian(ring, std::move(gens));
    return out;
}

bool shortcut_applies(const QRPtr& ring, const std::vector<Derivation>& ds) {
    for (const auto& d : ds)
        for (const auto& im : d.images())
            if (!ring->nf(im).constant_coefficient().is_zero()) return false;
    return true;
}

}  // namespace

MaxDiffResult maximally_differential_ideal(const QRPtr& ring, const std::vector<Derivation>& ds,
                                           MaxDiffMode mode,
                                           const std::vector<Polynomial>* candidate) {
    if (ds.empty()) throw algebra_error("maximally differential ideal needs derivations");
    for (const auto& d : ds)
        if (!d.ring()->gb().same_ideal(ring->gb()))
            throw algebra_error("derivation belongs to a different ring");

    if (mode == MaxDiffMode::automatic)
        mode = shortcut_applies(ring, ds)
                   ? MaxDiffMode::shortcut
                   : (ring->is_artinian() ? MaxDiffMode::fixpoint : MaxDiffMode::verify);

    switch (mode) {
        case MaxDiffMode::shortcut: {
            if (!shortcut_applies(ring, ds))
                throw algebra_error("shortcut mode: some D does not map m into m");
            MaxDiffResult out;
            out.mode_used = MaxDiffMode::shortcut;
            for (std::size_t v = 0; v < ring->nvars(); ++v)
                out.generators.push_back(ring->nf(ring->variable(v)));
            return out;
        }
        case MaxDiffMode::fixpoint:
            return fixpoint_b(ring, ds);
        case MaxDiffMode::verify: {
            if (!candidate)
                throw algebra_error("verify mode needs a candidate ideal");
            if (!proper_r_ideal(ring, *candidate))
                throw algebra_error("verify mode: candidate is not a proper ideal");
            if (!is_differential_ideal(ring, *candidate, ds))
                throw algebra_error("verify mode: candidate is not a differential ideal");
            std::vector<Polynomial> quotient_gens = ring->ideal_generators();
            for (const auto& g : *candidate) quotient_gens.push_back(g);
            QRPtr a = QuotientRing::make(ring->poly_ring(), quotient_gens, ring->gb().order());
            if (!a->is_artinian())
                throw algebra_error("verify mode: candidate does not have finite colength");
            std::vector<Derivation> induced;
            for (const auto& d : ds) {
                auto check = WellDefinedCheck::run(a, d.images(), d.name());
                if (!check.ok())
                    throw algebra_error("internal: induced derivation on R/candidate not well defined");
                induced.push_back(*check.derivation);
            }
            MaxDiffResult inner = fixpoint_b(a, induced);
            MaxDiffResult out;
            out.mode_used = MaxDiffMode::verify;
            out.quotient_length = a->length();
            out.fixpoint_trace = inner.fixpoint_trace;
            out.certified = inner.generators.empty();
            for (const auto& g : *candidate) out.generators.push_back(ring->nf(g));
            return out;
        }
        default:
            throw algebra_error("unreachable maximally-differential mode");
    }
}

}  // namespace diffalg
