#include "diffalg/graded_engine.hpp"

#include <algorithm>
#include <limits>

namespace diffalg {

FreeSlice free_slice(const QuotientRing& ring, std::span<const long> twists, long d) {
    FreeSlice out;
    for (std::size_t i = 0; i < twists.size(); ++i)
        for (const auto& m : ring.basis_of_degree(d - twists[i])) out.elems.push_back({i, m});
    return out;
}

KVec slice_coords(const QuotientRing& ring, std::span<const long> twists, const FreeSlice& slice,
                  const RVector& v, long d) {
    KVec out(slice.size(), ring.field().zero());
    if (v.size() != twists.size()) throw algebra_error("slice coords: rank mismatch");
    // positions grouped by component in slice order
    std::size_t base = 0;
    for (std::size_t i = 0; i < twists.size(); ++i) {
        const auto& basis = ring.basis_of_degree(d - twists[i]);
        if (!v[i].is_zero()) {
            KVec comp = ring.coords_in_degree(v[i], d - twists[i]);
            for (std::size_t b = 0; b < basis.size(); ++b) out[base + b] = comp[b];
        }
        base += basis.size();
    }
    return out;
}

RVector from_slice_coords(const QuotientRing& ring, std::span<const long> twists,
                          const FreeSlice& slice, const KVec& coords) {
    RVector out(twists.size(), Polynomial::zero(ring.poly_ring()));
    if (coords.size() != slice.size()) throw algebra_error("slice coords width mismatch");
    for (std::size_t p = 0; p < slice.size(); ++p) {
        if (coords[p].is_zero()) continue;
        auto [i, mono] = slice.elems[p];
        out[i] = out[i] + Polynomial::monomial(ring.poly_ring(), mono, coords[p]);
    }
    return out;
}

std::optional<long> vector_degree(std::span<const long> twists, const RVector& v) {
    std::optional<long> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto h = v[i].homogeneous_degree();
        if (!h) throw algebra_error("vector component is not homogeneous");
        long candidate = *h + twists[i];
        if (deg && *deg != candidate) throw algebra_error("vector is not homogeneous");
        deg = candidate;
    }
    return deg;
}

KMatrix map_piece(const ModuleMap& phi, long d) {
    const QuotientRing& ring = *phi.ring();
    FreeSlice src = free_slice(ring, phi.src_twists(), d);
    FreeSlice dst = free_slice(ring, phi.dst_twists(), d);
    KMatrix out(ring.field(), dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [j, mono] = src.elems[c];
        RVector image(phi.dst_rank(), Polynomial::zero(ring.poly_ring()));
        for (std::size_t i = 0; i < phi.dst_rank(); ++i) {
            const Polynomial& e = phi.entry(i, j);
            if (e.is_zero()) continue;
            image[i] = ring.nf(e.times_term(mono, ring.field().one()));
        }
        KVec col = slice_coords(ring, phi.dst_twists(), dst, image, d);
        for (std::size_t r = 0; r < dst.size(); ++r) out.at(r, c) = col[r];
    }
    return out;
}

namespace {

long min_twist(std::span<const long> twists) {
    long lo = std::numeric_limits<long>::max();
    for (long t : twists) lo = std::min(lo, t);
    return twists.empty() ? 0 : lo;
}

long max_twist(std::span<const long> twists) {
    long hi = std::numeric_limits<long>::min();
    for (long t : twists) hi = std::max(hi, t);
    return twists.empty() ? 0 : hi;
}

}  // namespace

KernelResult kernel_generators(const ModuleMap& phi, long cutoff) {
    const QuotientRing& ring = *phi.ring();
    KernelResult out;
    if (phi.src_rank() == 0) {
        out.complete = true;
        out.certified_through = cutoff;
        return out;
    }
    long d_lo = min_twist(phi.src_twists());
    long d_hi = cutoff;
    if (ring.is_artinian()) {
        long natural_top = max_twist(phi.src_twists()) + ring.top_degree();
        if (d_hi >= natural_top) {
            d_hi = natural_top;
            out.complete = true;
        }
    }
    out.certified_through = out.complete ? std::numeric_limits<long>::max() / 4 : d_hi;

    for (long d = d_lo; d <= d_hi; ++d) {
        FreeSlice src = free_slice(ring, phi.src_twists(), d);
        if (src.size() == 0) continue;
        std::vector<KVec> kernel = kernel_basis(map_piece(phi, d));
        if (kernel.empty()) continue;
        // span of R-multiples of previously found generators inside degree d
        RowSpace span(ring.field(), src.size());
        for (std::size_t g = 0; g < out.gens.size(); ++g) {
            for (const auto& m : ring.basis_of_degree(d - out.degrees[g])) {
                RVector mult(out.gens[g].size(), Polynomial::zero(ring.poly_ring()));
                for (std::size_t i = 0; i < mult.size(); ++i)
                    if (!out.gens[g][i].is_zero())
                        mult[i] = ring.nf(out.gens[g][i].times_term(m, ring.field().one()));
                span.insert(slice_coords(ring, phi.src_twists(), src, mult, d));
            }
        }
        for (auto& v : kernel) {
            if (span.insert(v)) {
                out.gens.push_back(from_slice_coords(ring, phi.src_twists(), src, v));
                out.degrees.push_back(d);
            }
        }
    }
    return out;
}

ColumnSelection minimal_column_generators(const ModuleMap& phi, long cutoff) {
    const QuotientRing& ring = *phi.ring();
    // columns sorted by degree, greedily kept when outside the span of the
    // already-kept ones in that degree
    std::vector<std::size_t> idx(phi.src_rank());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return phi.src_twists()[a] < phi.src_twists()[b];
    });
    ColumnSelection out;
    (void)cutoff;
    for (std::size_t j : idx) {
        if (is_zero_vector(phi.column(j))) continue;
        long d = phi.src_twists()[j];
        FreeSlice dst = free_slice(ring, phi.dst_twists(), d);
        RowSpace span(ring.field(), dst.size());
        for (std::size_t g = 0; g < out.cols.size(); ++g) {
            for (const auto& m : ring.basis_of_degree(d - out.degrees[g])) {
                RVector mult(out.cols[g].size(), Polynomial::zero(ring.poly_ring()));
                for (std::size_t i = 0; i < mult.size(); ++i)
                    if (!out.cols[g][i].is_zero())
                        mult[i] = ring.nf(out.cols[g][i].times_term(m, ring.field().one()));
                span.insert(slice_coords(ring, phi.dst_twists(), dst, mult, d));
            }
        }
        if (!span.contains(slice_coords(ring, phi.dst_twists(), dst, phi.column(j), d))) {
            out.cols.push_back(phi.column(j));
            out.degrees.push_back(d);
        }
    }
    return out;
}

Realization::Realization(PresentedModule m) : m_(std::move(m)) {}

const Realization::Slice& Realization::slice_at(long d) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = slices_.find(d);
    if (it != slices_.end()) return it->second;

    const QuotientRing& ring = *m_.ring();
    const ModuleMap& p = m_.presentation();
    FreeSlice free = free_slice(ring, p.dst_twists(), d);
    Slice slice(ring.field(), free.size());
    slice.free = std::move(free);
    for (std::size_t j = 0; j < p.src_rank(); ++j) {
        if (is_zero_vector(p.column(j))) continue;
        long e = p.src_twists()[j];
        for (const auto& mono : ring.basis_of_degree(d - e)) {
            RVector mult(p.dst_rank(), Polynomial::zero(ring.poly_ring()));
            for (std::size_t i = 0; i < mult.size(); ++i)
                if (!p.entry(i, j).is_zero())
                    mult[i] = ring.nf(p.entry(i, j).times_term(mono, ring.field().one()));
            slice.image.insert(slice_coords(ring, p.dst_twists(), slice.free, mult, d));
        }
    }
    std::vector<bool> is_pivot(slice.free.size(), false);
    for (std::size_t piv : slice.image.pivots()) is_pivot[piv] = true;
    for (std::size_t i = 0; i < slice.free.size(); ++i)
        if (!is_pivot[i]) slice.quotient_positions.push_back(i);
    return slices_.emplace(d, std::move(slice)).first->second;
}

long Realization::dim_at(long d) const { return static_cast<long>(slice_at(d).quotient_positions.size()); }

long Realization::total_dim_through(long cutoff) const {
    long total = 0;
    for (long d = min_degree(); d <= cutoff; ++d) total += dim_at(d);
    return total;
}

long Realization::min_degree() const {
    long lo = std::numeric_limits<long>::max();
    for (long t : m_.gen_degrees()) lo = std::min(lo, t);
    return m_.num_gens() == 0 ? 0 : lo;
}

KVec Realization::quotient_coords(const RVector& v, long d) const {
    const Slice& s = slice_at(d);
    const QuotientRing& ring = *m_.ring();
    KVec full = slice_coords(ring, m_.gen_degrees(), s.free, v, d);
    KVec reduced = s.image.reduce(std::move(full));
    KVec out;
    out.reserve(s.quotient_positions.size());
    for (std::size_t pos : s.quotient_positions) out.push_back(reduced[pos]);
    return out;
}

RVector Realization::representative(long d, std::size_t index) const {
    const Slice& s = slice_at(d);
    const QuotientRing& ring = *m_.ring();
    KVec unit(s.free.size(), ring.field().zero());
    unit[s.quotient_positions[index]] = ring.field().one();
    return from_slice_coords(ring, m_.gen_degrees(), s.free, unit);
}

KMatrix Realization::mult_matrix(const Polynomial& r, long d) const {
    const QuotientRing& ring = *m_.ring();
    auto rdeg = r.homogeneous_degree();
    if (!rdeg && !r.is_zero()) throw algebra_error("mult_matrix needs a homogeneous multiplier");
    long e = r.is_zero() ? 0 : *rdeg;
    long dim_src = dim_at(d);
    long dim_dst = dim_at(d + e);
    KMatrix out(ring.field(), dim_dst, dim_src);
    for (long c = 0; c < dim_src; ++c) {
        RVector rep = representative(d, static_cast<std::size_t>(c));
        for (auto& comp : rep) comp = ring.nf(comp * r);
        KVec col = quotient_coords(rep, d + e);
        for (long rr = 0; rr < dim_dst; ++rr) out.at(rr, c) = col[rr];
    }
    return out;
}

KMatrix Realization::induced_map_matrix(const Realization& target, const ModuleMap& on_generators,
                                        long d) const {
    const QuotientRing& ring = *m_.ring();
    long dim_src = dim_at(d);
    long dim_dst = target.dim_at(d);
    KMatrix out(ring.field(), dim_dst, dim_src);
    for (long c = 0; c < dim_src; ++c) {
        RVector rep = representative(d, static_cast<std::size_t>(c));
        RVector image = on_generators.apply(rep);
        KVec col = target.quotient_coords(image, d);
        for (long rr = 0; rr < dim_dst; ++rr) out.at(rr, c) = col[rr];
    }
    return out;
}

std::optional<std::vector<Polynomial>> express_in_generators(
    const QuotientRing& ring, std::span<const long> ambient_twists,
    const std::vector<RVector>& gens, const std::vector<long>& gen_degrees, const RVector& v,
    long d) {
    FreeSlice slice = free_slice(ring, ambient_twists, d);
    // candidate products m * gen, with provenance
    struct Cand {
        std::size_t gen;
        Monomial mono;
    };
    std::vector<Cand> cands;
    std::vector<KVec> cols;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (const auto& mono : ring.basis_of_degree(d - gen_degrees[g])) {
            RVector mult(gens[g].size(), Polynomial::zero(ring.poly_ring()));
            for (std::size_t i = 0; i < mult.size(); ++i)
                if (!gens[g][i].is_zero())
                    mult[i] = ring.nf(gens[g][i].times_term(mono, ring.field().one()));
            cands.push_back({g, mono});
            cols.push_back(slice_coords(ring, ambient_twists, slice, mult, d));
        }
    }
    KMatrix a(ring.field(), slice.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < slice.size(); ++r) a.at(r, c) = cols[c][r];
    auto sol = solve(a, slice_coords(ring, ambient_twists, slice, v, d));
    if (!sol) return std::nullopt;
    std::vector<Polynomial> out(gens.size(), Polynomial::zero(ring.poly_ring()));
    for (std::size_t c = 0; c < cands.size(); ++c) {
        if ((*sol)[c].is_zero()) continue;
        out[cands[c].gen] =
            out[cands[c].gen] + Polynomial::monomial(ring.poly_ring(), cands[c].mono, (*sol)[c]);
    }
    return out;
}

long scaled_cutoff(const QuotientRing& ring, long nominal_bound) {
    return nominal_bound * ring.poly_ring()->max_weight();
}

}  // namespace diffalg
