#ifndef DIFFALG_TESTS_SUPPORT_HPP
#define DIFFALG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "diffalg/polynomial.hpp"

namespace testsupport {

// deterministic xorshift generator so property suites are reproducible
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    int in_range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

  private:
    std::uint64_t state_;
};

inline diffalg::Polynomial random_poly(Rng& rng, const diffalg::RingPtr& ring, int max_terms,
                                       int max_exp) {
    using namespace diffalg;
    std::vector<Polynomial::Term> terms;
    int nt = rng.in_range(0, max_terms);
    for (int t = 0; t < nt; ++t) {
        std::vector<int> e(ring->nvars());
        for (auto& x : e) x = rng.in_range(0, max_exp);
        long c = rng.in_range(-6, 6);
        terms.push_back({Monomial(std::move(e)), ring->field().from_int(c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

inline diffalg::Monomial random_monomial(Rng& rng, std::size_t nvars, int max_exp) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = rng.in_range(0, max_exp);
    return diffalg::Monomial(std::move(e));
}

}  // namespace testsupport

#endif
