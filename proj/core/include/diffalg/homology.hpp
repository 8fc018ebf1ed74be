#ifndef DIFFALG_HOMOLOGY_HPP
#define DIFFALG_HOMOLOGY_HPP

#include "diffalg/graded_engine.hpp"

namespace diffalg {

// Graded dimension count of a (co)homology module within the certified
// window. `complete` is set on the artinian path, where the count is the
// absolute k-dimension.
struct GradedDims {
    std::map<long, long> by_degree;  // nonzero slices only
    long total = 0;
    bool complete = false;
    long certified_through = 0;

    bool is_zero() const { return total == 0; }
};

// Minimal graded free resolution F_len -> ... -> F_0 -> M -> 0, built lazily.
// Exactness holds per degree through the cutoff; on artinian rings every
// computed step is absolutely certified.
class FreeResolution {
  public:
    FreeResolution(PresentedModule m, long cutoff);

    void extend_to(std::size_t length);
    std::size_t computed_length() const { return diffs_.size(); }
    // d_i : F_i -> F_{i-1}, 1-based, i <= computed_length()
    const ModuleMap& diff(std::size_t i) const;
    std::span<const long> twists(std::size_t i) const { return twists_.at(i); }
    std::size_t rank(std::size_t i) const { return twists_.at(i).size(); }
    bool complete() const { return complete_; }
    long cutoff() const { return cutoff_; }
    const PresentedModule& target() const { return m_; }

  private:
    PresentedModule m_;
    long cutoff_;
    std::vector<std::vector<long>> twists_;  // F_0, F_1, ...
    std::vector<ModuleMap> diffs_;           // diffs_[i] = d_{i+1}
    bool complete_ = true;
};

// dims of ker(outgoing)/im(incoming) at the module where both meet;
// incoming may be null (then im = 0)
GradedDims homology_dims(const ModuleMap& outgoing, const ModuleMap* incoming, long cutoff);

// presentation of the subquotient ker(outgoing)/im(incoming)
PresentedModule subquotient_module(const ModuleMap& outgoing, const ModuleMap* incoming,
                                   long cutoff);

struct HomDual {
    PresentedModule module;        // Hom(M, R)
    std::vector<RVector> vectors;  // generators as vectors in R^{gens(M)}, twists -gen_degrees
    std::vector<long> degrees;
    bool complete = false;
};
HomDual hom_dual(const PresentedModule& m, long cutoff);

// Ext^i_R(M, R) from the dualized resolution, i >= 1.
GradedDims ext_dims(FreeResolution& res, std::size_t i, long cutoff);
PresentedModule ext_module(FreeResolution& res, std::size_t i, long cutoff);

// Tor_i^R(M, N) from the resolution of M tensored with the realization of N.
GradedDims tor_dims(FreeResolution& res_m, const PresentedModule& n, std::size_t i, long cutoff);

// homology of an explicit free complex at position i
GradedDims free_complex_homology(const FreeComplex& c, std::size_t i, long cutoff);

struct BidualityResult {
    bool iso = false;
    bool complete = false;
    long certified_through = 0;
    std::string detail;  // failure stage when !iso
};
BidualityResult biduality_check(const PresentedModule& m, long cutoff);

// The ideal (gens) as an R-module: minimal generating subset, relations
// computed as the kernel of the evaluation map into R.
PresentedModule ideal_module(const QRPtr& ring, std::vector<Polynomial> gens, long cutoff);

// presented-complex plumbing (used for G-resolutions and Frobenius reports)
void validate_presented_complex(const PresentedComplex& c, long cutoff);
GradedDims presented_complex_homology(const PresentedComplex& c, std::size_t i, long cutoff);

}  // namespace diffalg

#endif
