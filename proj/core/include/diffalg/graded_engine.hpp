#ifndef DIFFALG_GRADED_ENGINE_HPP
#define DIFFALG_GRADED_ENGINE_HPP

#include <functional>
#include <map>
#include <optional>

#include "diffalg/module.hpp"

namespace diffalg {

// k-basis of the degree-d slice of a twisted free module: pairs of
// (component index, staircase monomial).
struct FreeSlice {
    std::vector<std::pair<std::size_t, Monomial>> elems;

    std::size_t size() const { return elems.size(); }
};

FreeSlice free_slice(const QuotientRing& ring, std::span<const long> twists, long d);
KVec slice_coords(const QuotientRing& ring, std::span<const long> twists, const FreeSlice& slice,
                  const RVector& v, long d);
RVector from_slice_coords(const QuotientRing& ring, std::span<const long> twists,
                          const FreeSlice& slice, const KVec& coords);
// degree of a homogeneous vector in a twisted free module (nullopt for 0)
std::optional<long> vector_degree(std::span<const long> twists, const RVector& v);

// matrix of the degree-d piece of a module map
KMatrix map_piece(const ModuleMap& phi, long d);

// Minimal homogeneous generators of ker(phi) in degrees <= cutoff. For
// artinian rings the window is clamped to the true top and `complete` is set;
// otherwise the claim is exact per degree through `certified_through`.
struct KernelResult {
    std::vector<RVector> gens;
    std::vector<long> degrees;
    bool complete = false;
    long certified_through = 0;
};

KernelResult kernel_generators(const ModuleMap& phi, long cutoff);

// Same extraction applied to the columns of phi themselves: a minimal
// generating subset of im(phi).
struct ColumnSelection {
    std::vector<RVector> cols;
    std::vector<long> degrees;
};
ColumnSelection minimal_column_generators(const ModuleMap& phi, long cutoff);

// Per-degree realization of M = coker(P): quotient bases, coordinates and
// multiplication actions. Exact in every degree.
class Realization {
  public:
    explicit Realization(PresentedModule m);

    const PresentedModule& module() const { return m_; }
    long dim_at(long d) const;
    long total_dim_through(long cutoff) const;
    // lowest degree that can carry a nonzero element
    long min_degree() const;

    KVec quotient_coords(const RVector& v, long d) const;
    RVector representative(long d, std::size_t index) const;
    // multiplication by homogeneous r: M_d -> M_{d + deg r}
    KMatrix mult_matrix(const Polynomial& r, long d) const;
    // matrix of an R-linear map given on generators (matrix columns indexed by
    // this module's generators, values in another realization's free module)
    KMatrix induced_map_matrix(const Realization& target, const ModuleMap& on_generators,
                               long d) const;

  private:
    struct Slice {
        FreeSlice free;
        RowSpace image;
        std::vector<std::size_t> quotient_positions;
        Slice(Field f, std::size_t width) : image(f, width) {}
    };
    const Slice& slice_at(long d) const;

    PresentedModule m_;
    mutable std::mutex mutex_;
    mutable std::map<long, Slice> slices_;
};

// Express homogeneous v of degree d as an R-combination of the given
// homogeneous generators (searching coefficients degreewise); nullopt when v
// is not in their span at this degree.
std::optional<std::vector<Polynomial>> express_in_generators(
    const QuotientRing& ring, std::span<const long> ambient_twists,
    const std::vector<RVector>& gens, const std::vector<long>& gen_degrees, const RVector& v,
    long d);

// Effective weighted-degree cutoff: nominal bounds count standard degrees and
// are scaled by the largest variable weight.
long scaled_cutoff(const QuotientRing& ring, long nominal_bound);

}  // namespace diffalg

#endif
