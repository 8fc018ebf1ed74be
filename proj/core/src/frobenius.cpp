#include "diffalg/frobenius.hpp"

namespace diffalg {

namespace {

long twist_exponent(const QuotientRing& ring, int n) {
    std::uint32_t p = ring.characteristic();
    if (p == 0) throw algebra_error("Frobenius twist needs positive characteristic");
    if (n < 0) throw algebra_error("negative Frobenius iterate");
    long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > (1 << 20)) throw algebra_error("Frobenius twist exponent too large");
    }
    return q;
}

}  // namespace

Polynomial frobenius_power(const QRPtr& ring, const Polynomial& f, int n) {
    long q = twist_exponent(*ring, n);
    return ring->nf(ring->nf(f).pow(q));
}

ModuleMap frobenius_twist(const ModuleMap& m, int n) {
    long q = twist_exponent(*m.ring(), n);
    std::vector<long> dst, src;
    for (long t : m.dst_twists()) dst.push_back(t * q);
    for (long t : m.src_twists()) src.push_back(t * q);
    std::vector<RVector> cols;
    for (std::size_t j = 0; j < m.src_rank(); ++j) {
        RVector col;
        for (std::size_t i = 0; i < m.dst_rank(); ++i)
            col.push_back(frobenius_power(m.ring(), m.entry(i, j), n));
        cols.push_back(std::move(col));
    }
    return ModuleMap(m.ring(), std::move(dst), std::move(src), std::move(cols));
}

PresentedModule frobenius_twist(const PresentedModule& m, int n) {
    ModuleMap p = frobenius_twist(m.presentation(), n);
    std::vector<long> gens(p.dst_twists().begin(), p.dst_twists().end());
    std::vector<RVector> cols;
    for (std::size_t j = 0; j < p.src_rank(); ++j) cols.push_back(p.column(j));
    return PresentedModule(m.ring(), std::move(gens), std::move(cols));
}

FreeComplex frobenius_twist(const FreeComplex& c, int n) {
    long q = twist_exponent(*c.ring, n);
    FreeComplex out;
    out.ring = c.ring;
    for (const auto& tw : c.twists) {
        std::vector<long> scaled;
        for (long t : tw) scaled.push_back(t * q);
        out.twists.push_back(std::move(scaled));
    }
    for (const auto& d : c.diffs) out.diffs.push_back(frobenius_twist(d, n));
    out.validate();  // twisting must preserve d^2 = 0
    return out;
}

PresentedComplex frobenius_twist(const PresentedComplex& c, int n) {
    PresentedComplex out;
    out.ring = c.ring;
    for (const auto& m : c.modules) out.modules.push_back(frobenius_twist(m, n));
    for (const auto& f : c.maps) out.maps.push_back(frobenius_twist(f, n));
    return out;
}

FrobeniusReport frobenius_acyclicity(const PresentedComplex& c, int n_max, long cutoff) {
    validate_presented_complex(c, cutoff);
    FrobeniusReport out;
    for (int n = 1; n <= n_max; ++n) {
        long q = twist_exponent(*c.ring, n);
        PresentedComplex tc = frobenius_twist(c, n);
        validate_presented_complex(tc, cutoff * q);
        for (std::size_t i = 1; i < tc.modules.size(); ++i) {
            GradedDims h = presented_complex_homology(tc, i, cutoff * q);
            out.entries.push_back({n, i, h.total, h.complete});
        }
    }
    return out;
}

FrobeniusReport frobenius_acyclicity(const FreeComplex& c, int n_max, long cutoff) {
    c.validate();
    FrobeniusReport out;
    for (int n = 1; n <= n_max; ++n) {
        long q = twist_exponent(*c.ring, n);
        FreeComplex tc = frobenius_twist(c, n);
        for (std::size_t i = 1; i < tc.twists.size(); ++i) {
            GradedDims h = free_complex_homology(tc, i, cutoff * q);
            out.entries.push_back({n, i, h.total, h.complete});
        }
    }
    return out;
}

}  // namespace diffalg
