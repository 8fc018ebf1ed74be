#include "diffalg/homology.hpp"

#include <algorithm>
#include <limits>

namespace diffalg {

namespace {

constexpr long kEverywhere = std::numeric_limits<long>::max() / 4;

long min_twist_or(std::span<const long> twists, long fallback) {
    if (twists.empty()) return fallback;
    return *std::min_element(twists.begin(), twists.end());
}

long max_twist_or(std::span<const long> twists, long fallback) {
    if (twists.empty()) return fallback;
    return *std::max_element(twists.begin(), twists.end());
}

struct Window {
    long lo, hi;
    bool complete;
};

// degree window for a free module with the given twists
Window window_for(const QuotientRing& ring, std::span<const long> twists, long cutoff) {
    Window w{min_twist_or(twists, 0), cutoff, false};
    if (ring.is_artinian()) {
        long natural = max_twist_or(twists, 0) + ring.top_degree();
        if (cutoff >= natural) {
            w.hi = natural;
            w.complete = true;
        }
    }
    return w;
}

}  // namespace

FreeResolution::FreeResolution(PresentedModule m, long cutoff) : m_(std::move(m)), cutoff_(cutoff) {
    twists_.push_back({m_.gen_degrees().begin(), m_.gen_degrees().end()});
}

void FreeResolution::extend_to(std::size_t length) {
    while (diffs_.size() < length) {
        if (diffs_.empty()) {
            ColumnSelection sel = minimal_column_generators(m_.presentation(), cutoff_);
            twists_.push_back(sel.degrees);
            diffs_.push_back(ModuleMap(m_.ring(), twists_[0], sel.degrees, sel.cols));
        } else {
            KernelResult k = kernel_generators(diffs_.back(), cutoff_);
            complete_ = complete_ && k.complete;
            twists_.push_back(k.degrees);
            diffs_.push_back(
                ModuleMap(m_.ring(), twists_[twists_.size() - 2], k.degrees, k.gens));
        }
    }
}

const ModuleMap& FreeResolution::diff(std::size_t i) const {
    if (i == 0 || i > diffs_.size()) throw algebra_error("resolution differential index out of range");
    return diffs_[i - 1];
}

GradedDims homology_dims(const ModuleMap& outgoing, const ModuleMap* incoming, long cutoff) {
    const QuotientRing& ring = *outgoing.ring();
    GradedDims out;
    Window w = window_for(ring, outgoing.src_twists(), cutoff);
    out.complete = w.complete;
    out.certified_through = w.complete ? kEverywhere : w.hi;
    for (long d = w.lo; d <= w.hi; ++d) {
        long dim_x = static_cast<long>(free_slice(ring, outgoing.src_twists(), d).size());
        if (dim_x == 0) continue;
        long k = dim_x - static_cast<long>(rank(map_piece(outgoing, d)));
        if (incoming) k -= static_cast<long>(rank(map_piece(*incoming, d)));
        if (k < 0) throw algebra_error("internal: negative homology dimension (d^2 != 0?)");
        if (k > 0) {
            out.by_degree[d] = k;
            out.total += k;
        }
    }
    return out;
}

PresentedModule subquotient_module(const ModuleMap& outgoing, const ModuleMap* incoming,
                                   long cutoff) {
    const QRPtr& ring = outgoing.ring();
    KernelResult k = kernel_generators(outgoing, cutoff);
    std::vector<long> x_twists(outgoing.src_twists().begin(), outgoing.src_twists().end());
    if (!incoming) {
        ModuleMap k_map(ring, x_twists, k.degrees, k.gens);
        KernelResult rel = kernel_generators(k_map, cutoff);
        return PresentedModule(ring, k.degrees, rel.gens);
    }
    // relations: { v : K v lies in im(incoming) } = projection of ker[K | incoming]
    std::vector<RVector> combined_cols = k.gens;
    std::vector<long> combined_src = k.degrees;
    for (std::size_t j = 0; j < incoming->src_rank(); ++j) {
        combined_cols.push_back(incoming->column(j));
        combined_src.push_back(incoming->src_twists()[j]);
    }
    ModuleMap combined(ring, x_twists, combined_src, combined_cols);
    KernelResult rel = kernel_generators(combined, cutoff);
    std::vector<RVector> proj;
    for (const auto& v : rel.gens) {
        RVector head(v.begin(), v.begin() + static_cast<long>(k.gens.size()));
        if (!is_zero_vector(head)) proj.push_back(std::move(head));
    }
    return PresentedModule(ring, k.degrees, proj);
}

HomDual hom_dual(const PresentedModule& m, long cutoff) {
    const QRPtr& ring = m.ring();
    ModuleMap dual_p = m.presentation().dual();  // F_gen* -> F_rel*
    KernelResult k = kernel_generators(dual_p, cutoff);
    std::vector<long> ambient(dual_p.src_twists().begin(), dual_p.src_twists().end());
    ModuleMap k_map(ring, ambient, k.degrees, k.gens);
    KernelResult rel = kernel_generators(k_map, cutoff);
    HomDual out{PresentedModule(ring, k.degrees, rel.gens), k.gens, k.degrees,
                k.complete && rel.complete};
    return out;
}

GradedDims ext_dims(FreeResolution& res, std::size_t i, long cutoff) {
    if (i == 0) throw algebra_error("ext index must be >= 1");
    res.extend_to(i + 1);
    ModuleMap outgoing = res.diff(i + 1).dual();  // F_i* -> F_{i+1}*
    ModuleMap incoming = res.diff(i).dual();      // F_{i-1}* -> F_i*
    GradedDims out = homology_dims(outgoing, &incoming, cutoff);
    out.complete = out.complete && res.complete();
    return out;
}

PresentedModule ext_module(FreeResolution& res, std::size_t i, long cutoff) {
    if (i == 0) throw algebra_error("ext index must be >= 1");
    res.extend_to(i + 1);
    ModuleMap outgoing = res.diff(i + 1).dual();
    ModuleMap incoming = res.diff(i).dual();
    return subquotient_module(outgoing, &incoming, cutoff);
}

namespace {

long realization_top(const QuotientRing& ring, const Realization& r) {
    // artinian only: above this everything vanishes
    return max_twist_or(r.module().gen_degrees(), 0) + ring.top_degree();
}

KMatrix tensor_piece(const ModuleMap& phi, const Realization& n, long d) {
    const QuotientRing& ring = *phi.ring();
    std::vector<long> row_off(phi.dst_rank() + 1, 0), col_off(phi.src_rank() + 1, 0);
    for (std::size_t r = 0; r < phi.dst_rank(); ++r)
        row_off[r + 1] = row_off[r] + n.dim_at(d - phi.dst_twists()[r]);
    for (std::size_t j = 0; j < phi.src_rank(); ++j)
        col_off[j + 1] = col_off[j] + n.dim_at(d - phi.src_twists()[j]);
    KMatrix out(ring.field(), row_off.back(), col_off.back());
    for (std::size_t j = 0; j < phi.src_rank(); ++j) {
        long src_deg = d - phi.src_twists()[j];
        if (n.dim_at(src_deg) == 0) continue;
        for (std::size_t r = 0; r < phi.dst_rank(); ++r) {
            const Polynomial& e = phi.entry(r, j);
            if (e.is_zero()) continue;
            KMatrix block = n.mult_matrix(e, src_deg);
            for (std::size_t br = 0; br < block.rows(); ++br)
                for (std::size_t bc = 0; bc < block.cols(); ++bc)
                    out.at(row_off[r] + br, col_off[j] + bc) = block.at(br, bc);
        }
    }
    return out;
}

}  // namespace

GradedDims tor_dims(FreeResolution& res_m, const PresentedModule& n, std::size_t i, long cutoff) {
    if (i == 0) throw algebra_error("tor index must be >= 1");
    res_m.extend_to(i + 1);
    const QuotientRing& ring = *res_m.target().ring();
    Realization rn(n);
    const ModuleMap& d_i = res_m.diff(i);
    const ModuleMap& d_next = res_m.diff(i + 1);
    GradedDims out;
    long lo = min_twist_or(res_m.twists(i), 0) + rn.min_degree();
    long hi = cutoff;
    if (ring.is_artinian()) {
        long natural = max_twist_or(res_m.twists(i), 0) + realization_top(ring, rn);
        if (cutoff >= natural) {
            hi = natural;
            out.complete = res_m.complete();
        }
    }
    out.certified_through = out.complete ? kEverywhere : hi;
    for (long d = lo; d <= hi; ++d) {
        long dim_x = 0;
        for (long t : res_m.twists(i)) dim_x += rn.dim_at(d - t);
        if (dim_x == 0) continue;
        long k = dim_x - static_cast<long>(rank(tensor_piece(d_i, rn, d))) -
                 static_cast<long>(rank(tensor_piece(d_next, rn, d)));
        if (k < 0) throw algebra_error("internal: negative tor dimension");
        if (k > 0) {
            out.by_degree[d] = k;
            out.total += k;
        }
    }
    return out;
}

GradedDims free_complex_homology(const FreeComplex& c, std::size_t i, long cutoff) {
    if (i >= c.twists.size()) throw algebra_error("homology position out of range");
    const ModuleMap* incoming = i < c.diffs.size() ? &c.diffs[i] : nullptr;
    if (i == 0) {
        ModuleMap zero_out = ModuleMap::zero(c.ring, {}, c.twists[0]);
        return homology_dims(zero_out, incoming, cutoff);
    }
    return homology_dims(c.diffs[i - 1], incoming, cutoff);
}

BidualityResult biduality_check(const PresentedModule& m, long cutoff) {
    const QRPtr& ring = m.ring();
    BidualityResult out;
    HomDual hd = hom_dual(m, cutoff);
    HomDual hdd = hom_dual(hd.module, cutoff);
    out.complete = ring->is_artinian() && hd.complete && hdd.complete;
    out.certified_through = out.complete ? kEverywhere : cutoff;

    // evaluation map on generators: ev(e_i)(phi_j) = phi_j(e_i)
    std::vector<long> dual_ambient;  // R^{s} with twists -deg(phi_j)
    for (long dg : hd.degrees) dual_ambient.push_back(-dg);
    std::vector<RVector> ev_cols;
    for (std::size_t i = 0; i < m.num_gens(); ++i) {
        RVector ev(hd.vectors.size(), Polynomial::zero(ring->poly_ring()));
        for (std::size_t j = 0; j < hd.vectors.size(); ++j) ev[j] = hd.vectors[j][i];
        auto coeffs = express_in_generators(*ring, dual_ambient, hdd.vectors, hdd.degrees, ev,
                                            m.gen_degrees()[i]);
        if (!coeffs)
            throw algebra_error(
                "biduality: evaluation image not expressible in bidual generators "
                "(degree window too small?)");
        ev_cols.push_back(std::move(*coeffs));
    }
    std::vector<long> src_twists(m.gen_degrees().begin(), m.gen_degrees().end());
    ModuleMap on_gens(ring, hdd.degrees, src_twists, ev_cols);

    Realization rm(m);
    Realization rdd(hdd.module);

    // the evaluation map must kill the relations of M
    const ModuleMap& p = m.presentation();
    for (std::size_t j = 0; j < p.src_rank(); ++j) {
        RVector img = on_gens.apply(p.column(j));
        KVec cls = rdd.quotient_coords(img, p.src_twists()[j]);
        for (const auto& s : cls)
            if (!s.is_zero())
                throw algebra_error("internal: evaluation map does not descend to the quotient");
    }

    long lo = std::min(rm.min_degree(), rdd.min_degree());
    long hi = cutoff;
    if (out.complete)
        hi = std::max(realization_top(*ring, rm), realization_top(*ring, rdd));
    for (long d = lo; d <= hi; ++d) {
        long a = rm.dim_at(d), b = rdd.dim_at(d);
        if (a != b) {
            out.iso = false;
            out.detail = "dim mismatch at degree " + std::to_string(d) + ": dim M = " +
                         std::to_string(a) + ", dim M** = " + std::to_string(b);
            return out;
        }
        if (a == 0) continue;
        KMatrix mat = rm.induced_map_matrix(rdd, on_gens, d);
        if (static_cast<long>(rank(mat)) != a) {
            out.iso = false;
            out.detail = "evaluation map not bijective in degree " + std::to_string(d);
            return out;
        }
    }
    out.iso = true;
    return out;
}

PresentedModule ideal_module(const QRPtr& ring, std::vector<Polynomial> gens, long cutoff) {
    std::vector<RVector> cols;
    for (auto& g : gens) {
        Polynomial r = ring->nf(g);
        if (!r.is_zero()) cols.push_back(RVector{std::move(r)});
    }
    ModuleMap eval = ModuleMap::from_columns(ring, {0}, std::move(cols));
    ColumnSelection sel = minimal_column_generators(eval, cutoff);
    if (sel.cols.empty()) return PresentedModule(ring, {}, {});
    std::vector<Polynomial> kept;
    for (const auto& c : sel.cols) kept.push_back(c[0]);
    std::vector<RVector> kept_cols;
    for (auto& g : kept) kept_cols.push_back(RVector{g});
    ModuleMap kept_map = ModuleMap::from_columns(ring, {0}, kept_cols);
    KernelResult rel = kernel_generators(kept_map, cutoff);
    return PresentedModule(ring, sel.degrees, rel.gens);
}

void validate_presented_complex(const PresentedComplex& c, long cutoff) {
    (void)cutoff;
    if (c.modules.size() != c.maps.size() + 1) throw algebra_error("presented complex shape mismatch");
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const PresentedModule& src = c.modules[i + 1];
        const PresentedModule& dst = c.modules[i];
        if (c.maps[i].src_rank() != src.num_gens() || c.maps[i].dst_rank() != dst.num_gens())
            throw algebra_error("presented complex map rank mismatch");
        Realization rd(dst);
        const ModuleMap& p = src.presentation();
        for (std::size_t j = 0; j < p.src_rank(); ++j) {
            RVector img = c.maps[i].apply(p.column(j));
            for (const auto& s : rd.quotient_coords(img, p.src_twists()[j]))
                if (!s.is_zero())
                    throw algebra_error("presented complex map is not relation-compatible");
        }
        if (i > 0) {
            ModuleMap comp = c.maps[i - 1].compose(c.maps[i]);
            Realization rdd(c.modules[i - 1]);
            for (std::size_t j = 0; j < comp.src_rank(); ++j) {
                if (is_zero_vector(comp.column(j))) continue;
                for (const auto& s : rdd.quotient_coords(comp.column(j), comp.src_twists()[j]))
                    if (!s.is_zero()) throw algebra_error("presented complex violates d^2 = 0");
            }
        }
    }
}

GradedDims presented_complex_homology(const PresentedComplex& c, std::size_t i, long cutoff) {
    if (i >= c.modules.size()) throw algebra_error("homology position out of range");
    const QuotientRing& ring = *c.ring;
    Realization rx(c.modules[i]);
    std::optional<Realization> r_out, r_in;
    if (i >= 1) r_out.emplace(c.modules[i - 1]);
    if (i < c.maps.size()) r_in.emplace(c.modules[i + 1]);

    GradedDims out;
    long lo = rx.min_degree();
    if (r_in) lo = std::min(lo, r_in->min_degree());
    long hi = cutoff;
    if (ring.is_artinian()) {
        long natural = realization_top(ring, rx);
        if (cutoff >= natural) {
            hi = natural;
            out.complete = true;
        }
    }
    out.certified_through = out.complete ? kEverywhere : hi;
    for (long d = lo; d <= hi; ++d) {
        long dim_x = rx.dim_at(d);
        if (dim_x == 0) continue;
        long k = dim_x;
        if (r_out) k -= static_cast<long>(rank(rx.induced_map_matrix(*r_out, c.maps[i - 1], d)));
        if (r_in) k -= static_cast<long>(rank(r_in->induced_map_matrix(rx, c.maps[i], d)));
        if (k < 0) throw algebra_error("internal: negative homology dimension in presented complex");
        if (k > 0) {
            out.by_degree[d] = k;
            out.total += k;
        }
    }
    return out;
}

}  // namespace diffalg
