#ifndef DIFFALG_MODULE_HPP
#define DIFFALG_MODULE_HPP

#include <vector>

#include "diffalg/quotient_ring.hpp"

namespace diffalg {

// Element of a free module R^n; components are kept in normal form.
using RVector = std::vector<Polynomial>;

RVector nf_vector(const QuotientRing& ring, RVector v);
bool is_zero_vector(const RVector& v);

// Map between twisted graded free modules F_src -> F_dst over R, stored as
// its matrix (columns = images of the source basis). Entry (i,j) is zero or
// homogeneous of degree src_twists[j] - dst_twists[i].
class ModuleMap {
  public:
    ModuleMap(QRPtr ring, std::vector<long> dst_twists, std::vector<long> src_twists,
              std::vector<RVector> columns);
    static ModuleMap zero(QRPtr ring, std::vector<long> dst_twists, std::vector<long> src_twists);
    static ModuleMap identity(QRPtr ring, std::vector<long> twists);
    // from generator vectors living in a free module with dst twists; the
    // column twists are inferred from homogeneity
    static ModuleMap from_columns(QRPtr ring, std::vector<long> dst_twists,
                                  std::vector<RVector> columns);

    const QRPtr& ring() const { return ring_; }
    std::size_t src_rank() const { return src_twists_.size(); }
    std::size_t dst_rank() const { return dst_twists_.size(); }
    std::span<const long> src_twists() const { return src_twists_; }
    std::span<const long> dst_twists() const { return dst_twists_; }
    const RVector& column(std::size_t j) const { return columns_[j]; }
    const Polynomial& entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }

    bool is_zero() const;
    RVector apply(const RVector& v) const;
    // Hom(-, R): transposed matrix, twists negated; maps F_dst^* -> F_src^*
    ModuleMap dual() const;
    // this(inner(x))
    ModuleMap compose(const ModuleMap& inner) const;

  private:
    QRPtr ring_;
    std::vector<long> dst_twists_, src_twists_;
    std::vector<RVector> columns_;
};

// Finitely presented graded R-module M = coker(presentation).
class PresentedModule {
  public:
    PresentedModule(QRPtr ring, std::vector<long> gen_degrees, std::vector<RVector> relations);
    static PresentedModule free_module(QRPtr ring, std::size_t n, std::vector<long> twists = {});
    static PresentedModule residue_field(QRPtr ring);  // k = R/m
    static PresentedModule cyclic(QRPtr ring, std::vector<Polynomial> ideal_gens);  // R/J

    const QRPtr& ring() const { return presentation_.ring(); }
    std::size_t num_gens() const { return presentation_.dst_rank(); }
    std::span<const long> gen_degrees() const { return presentation_.dst_twists(); }
    const ModuleMap& presentation() const { return presentation_; }
    bool has_zero_presentation() const { return presentation_.is_zero(); }

  private:
    explicit PresentedModule(ModuleMap p) : presentation_(std::move(p)) {}
    ModuleMap presentation_;
};

// Complex of twisted free modules F_L -> ... -> F_1 -> F_0 with d^2 = 0;
// diffs[i] : F_{i+1} -> F_i.
struct FreeComplex {
    QRPtr ring;
    std::vector<std::vector<long>> twists;  // one per module, size L+1
    std::vector<ModuleMap> diffs;           // size L

    std::size_t length() const { return diffs.size(); }
    void validate() const;  // shape compatibility and d^2 = 0
};

// Complex of presented modules with maps given on generators; the engine
// checks the maps are relation-compatible and composite-zero modulo the
// presentations.
struct PresentedComplex {
    QRPtr ring;
    std::vector<PresentedModule> modules;  // M_L ... M_0 (index 0 = rightmost)
    std::vector<ModuleMap> maps;           // maps[i] : M_{i+1} -> M_i on generators

    std::size_t length() const { return maps.size(); }
};

}  // namespace diffalg

#endif
