#ifndef DIFFALG_FROBENIUS_HPP
#define DIFFALG_FROBENIUS_HPP

#include "diffalg/homology.hpp"

namespace diffalg {

// f^(p^n), reduced mod I; characteristic must be positive
Polynomial frobenius_power(const QRPtr& ring, const Polynomial& f, int n);

// entrywise p^n-th power; grading twists scale by p^n since Frobenius is a
// ring map
ModuleMap frobenius_twist(const ModuleMap& m, int n);
PresentedModule frobenius_twist(const PresentedModule& m, int n);
FreeComplex frobenius_twist(const FreeComplex& c, int n);
PresentedComplex frobenius_twist(const PresentedComplex& c, int n);

struct FrobeniusReport {
    struct Entry {
        int n;                 // twist level
        std::size_t position;  // homological degree i >= 1
        long h_dim;            // dim within the window
        bool complete;
    };
    std::vector<Entry> entries;
    std::string presentation_note;

    bool acyclic() const {
        for (const auto& e : entries)
            if (e.h_dim != 0) return false;
        return true;
    }
};

// H_i dims of F^n(T) for i >= 1 and n = 1..n_max; the untwisted complex is
// validated (d^2 = 0) first and each twist revalidated.
FrobeniusReport frobenius_acyclicity(const PresentedComplex& c, int n_max, long cutoff);
FrobeniusReport frobenius_acyclicity(const FreeComplex& c, int n_max, long cutoff);

}  // namespace diffalg

#endif
