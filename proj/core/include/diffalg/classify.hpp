#ifndef DIFFALG_CLASSIFY_HPP
#define DIFFALG_CLASSIFY_HPP

#include "diffalg/homology.hpp"
#include "diffalg/kaehler.hpp"

namespace diffalg {

struct SocleResult {
    std::vector<Polynomial> basis;  // k-basis of (0 : m)
    long dim = 0;
};
SocleResult socle(const QRPtr& ring);  // artinian only

bool is_gorenstein_artinian(const QRPtr& ring);

// mu(m) = dim_k m/m^2 for the graded maximal ideal
long embedding_dimension(const QRPtr& ring);
// embdim = dim + 1, the Cohen-Macaulay => complete-intersection trigger
bool fact_embdim_is_dim_plus_one(const QRPtr& ring);

struct DepthResult {
    int value = 0;
    bool certified = false;
    std::string note;  // torsion witness or regular-sequence chain
};
// certified 0 (torsion witness) and 1 (verified nonzerodivisor, capped by
// dim); bounded search above; domains short-circuit to depth >= 1
DepthResult depth_graded(const QRPtr& ring, long cutoff);

// exact: colon-ideal tests over the ambient polynomial ring
bool is_regular_sequence(const std::vector<Polynomial>& seq, const QRPtr& ring);

struct CIResult {
    bool is_ci = false;
    std::string reason;
};
CIResult is_complete_intersection_ideal(const std::vector<Polynomial>& gens, const QRPtr& ring,
                                        long cutoff);

enum class CIPresentation { complete_intersection, almost_ci, neither };
struct CIPresentationResult {
    CIPresentation verdict;
    long mu = 0;
    long height = 0;
};
CIPresentationResult ci_presentation_check(const QRPtr& ring);

struct TRCertificate {
    bool pass = false;
    int ext_bound = 0;      // the N of PASS(N)
    bool absolute = false;  // artinian certification; otherwise bounded claim
    std::string stage;      // failing stage when !pass
    int failed_index = 0;   // ext index at failure, 0 for biduality
};
TRCertificate totally_reflexive_check(const PresentedModule& m, int ext_bound, long cutoff);

struct GdimEvidence {
    enum class Kind { zero, at_most, obstructed } kind = Kind::zero;
    int level = 0;      // d for at_most, first nonvanishing ext index for obstructed
    int ext_bound = 0;  // the N the verdict was checked at
    std::string note;
};
GdimEvidence gdim_evidence(const PresentedModule& m, int ext_bound, long cutoff,
                           int syzygy_search_depth = 3);

struct RingVerdict {
    long length = -1;  // -1 when not artinian
    int dim = 0;
    DepthResult depth;
    long embdim = 0;
    SocleResult socle;  // empty when not artinian
    std::optional<bool> gorenstein;
    CIPresentationResult presentation;
    std::string notes;
};
RingVerdict classify_ring(const QRPtr& ring, long cutoff);

}  // namespace diffalg

#endif
