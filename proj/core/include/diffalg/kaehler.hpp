#ifndef DIFFALG_KAEHLER_HPP
#define DIFFALG_KAEHLER_HPP

#include "diffalg/homology.hpp"

namespace diffalg {

// Omega_{R/k} presented by the transposed Jacobian: generators dx_i of
// degree w_i, one relation column (df_j/dX_1 .. df_j/dX_n) per ideal
// generator f_j.
PresentedModule omega_presentation(const QRPtr& ring);
bool omega_relations_all_zero(const QRPtr& ring);

// the Jacobian as a map R^n -> R^t, theta |-> (sum_i df_j/dX_i theta_i)_j
ModuleMap jacobian_map(const QRPtr& ring);

struct DerModule {
    PresentedModule module;                   // Hom(Omega, R)
    std::vector<RVector> generator_vectors;   // derivations as variable-image tuples
    std::vector<long> degrees;
    bool routes_agree = false;                // dual route vs direct Jacobian kernel
    bool complete = false;
    long checked_through = 0;
};

// Der_k(R) computed as Omega^* and cross-checked against the direct kernel
// of the Jacobian (brute force in the artinian realization, slice ranks in
// the graded one). Route disagreement is an internal invariant violation.
DerModule der_module(const QRPtr& ring, long cutoff);

// rank over Frac(R) via fraction-free elimination on the presentation matrix
// with normal-form zero tests; R must carry the scenario's domain assertion.
long module_rank(const PresentedModule& m);

// mu(M) = dim_k M/mM, exact for any finitely presented graded module
long minimal_generator_count(const PresentedModule& m);

struct FreenessCertificate {
    bool free = false;
    long rank = 0;
    std::string detail;
};

// artinian: dim_k M = mu * dim_k R; graded domain: mu(M) = rank(M)
FreenessCertificate is_free_module(const PresentedModule& m, long cutoff);

}  // namespace diffalg

#endif
