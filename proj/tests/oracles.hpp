#ifndef DIFFALG_TESTS_ORACLES_HPP
#define DIFFALG_TESTS_ORACLES_HPP

#include "diffalg/homology.hpp"
#include "diffalg/krealize.hpp"

namespace testsupport {

// Independent brute-force Ext dimension over an artinian ring: expand the
// dualized resolution differentials into one big k-matrix per map through the
// ungraded realization of R, then count dim ker - dim im directly. Shares
// nothing with the graded slice path it cross-checks.
inline diffalg::KMatrix expand_matrix(const diffalg::KRealization& real,
                                      const diffalg::ModuleMap& map) {
    using namespace diffalg;
    std::size_t d = real.dim();
    KMatrix out(map.ring()->field(), map.dst_rank() * d, map.src_rank() * d);
    for (std::size_t j = 0; j < map.src_rank(); ++j)
        for (std::size_t i = 0; i < map.dst_rank(); ++i) {
            const Polynomial& e = map.entry(i, j);
            if (e.is_zero()) continue;
            KMatrix block = real.mult_matrix(e);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) out.at(i * d + r, j * d + c) = block.at(r, c);
        }
    return out;
}

inline long oracle_ext_dim(diffalg::FreeResolution& res, std::size_t i) {
    using namespace diffalg;
    res.extend_to(i + 1);
    const QRPtr& ring = res.target().ring();
    KRealization real = KRealization::of_ring(ring);
    KMatrix outgoing = expand_matrix(real, res.diff(i + 1).dual());
    KMatrix incoming = expand_matrix(real, res.diff(i).dual());
    long dim_domain = static_cast<long>(outgoing.cols());
    return dim_domain - static_cast<long>(rank(outgoing)) - static_cast<long>(rank(incoming));
}

}  // namespace testsupport

#endif
