#include "diffalg/staircase.hpp"

#include <algorithm>
#include <functional>

namespace diffalg {

long Staircase::length() const {
    if (!finite) throw algebra_error("length of a non-artinian quotient");
    return static_cast<long>(basis.size());
}

bool quotient_is_artinian(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal()) return true;
    std::size_t n = gb.ring()->nvars();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& m : gb.leading_monomials()) {
            bool only_v = m.exponent(v) > 0;
            for (std::size_t u = 0; u < n && only_v; ++u)
                if (u != v && m.exponent(u) > 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

namespace {

bool in_lt_ideal(const Monomial& m, const GroebnerBasis& gb) {
    for (const auto& l : gb.leading_monomials())
        if (l.divides(m)) return true;
    return false;
}

// enumerate exponent tuples with weighted degree <= bound (or == bound when
// exact is set), invoking f on each
void enumerate(const PolyRing& ring, long bound, bool exact,
               const std::function<void(const Monomial&)>& f) {
    std::vector<int> e(ring.nvars(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rem) {
        if (i == ring.nvars()) {
            if (!exact || rem == 0) f(Monomial(e));
            return;
        }
        int w = ring.weights()[i];
        for (int k = 0; static_cast<long>(k) * w <= rem; ++k) {
            e[i] = k;
            rec(i + 1, rem - static_cast<long>(k) * w);
        }
        e[i] = 0;
    };
    if (bound >= 0) rec(0, bound);
}

}  // namespace

Staircase staircase_basis(const GroebnerBasis& gb, std::optional<long> degree_bound) {
    Staircase out;
    out.finite = quotient_is_artinian(gb);
    if (!out.finite && !degree_bound)
        throw algebra_error("infinite staircase: a degree bound is required");
    const PolyRing& ring = *gb.ring();
    long bound;
    if (out.finite) {
        // caps from the pure powers make every basis monomial have weighted
        // degree below sum of cap_i * w_i
        long top = 0;
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            int cap = 0;
            for (const auto& m : gb.leading_monomials()) {
                bool only_v = m.exponent(v) > 0;
                for (std::size_t u = 0; u < ring.nvars() && only_v; ++u)
                    if (u != v && m.exponent(u) > 0) only_v = false;
                if (only_v) cap = cap == 0 ? m.exponent(v) : std::min(cap, m.exponent(v));
            }
            top += static_cast<long>(cap) * ring.weights()[v];
        }
        bound = top;
    } else {
        bound = *degree_bound;
        out.truncation_bound = bound;
    }
    enumerate(ring, bound, false, [&](const Monomial& m) {
        if (!in_lt_ideal(m, gb)) out.basis.push_back(m);
    });
    std::sort(out.basis.begin(), out.basis.end());
    return out;
}

std::vector<Monomial> staircase_of_degree(const GroebnerBasis& gb, long weighted_degree) {
    std::vector<Monomial> out;
    if (weighted_degree < 0) return out;
    enumerate(*gb.ring(), weighted_degree, true, [&](const Monomial& m) {
        if (!in_lt_ideal(m, gb)) out.push_back(m);
    });
    std::sort(out.begin(), out.end());
    return out;
}

int krull_dimension(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal()) throw algebra_error("Krull dimension of the unit ideal quotient");
    std::size_t n = gb.ring()->nvars();
    int best = 0;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& m : gb.leading_monomials()) {
            bool supported_inside = true;
            for (std::size_t v = 0; v < n && supported_inside; ++v)
                if (m.exponent(v) > 0 && !(mask & (1u << v))) supported_inside = false;
            if (supported_inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

long default_truncation_bound(const GroebnerBasis& gb) {
    long maxdeg = 1;
    for (const auto& e : gb.elements()) maxdeg = std::max(maxdeg, e.max_weighted_degree());
    return 4 * maxdeg;
}

}  // namespace diffalg
