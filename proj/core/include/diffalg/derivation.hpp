#ifndef DIFFALG_DERIVATION_HPP
#define DIFFALG_DERIVATION_HPP

#include <optional>

#include "diffalg/quotient_ring.hpp"

namespace diffalg {

// A k-linear derivation of R = S/I, stored through lifts of the variable
// images. Instances only come out of check_well_defined, so holding one is
// the well-definedness certificate.
class Derivation {
  public:
    const QRPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const std::string& name() const { return name_; }

    // D(f) = sum_i (df/dX_i) * D(X_i), reduced to normal form
    Polynomial apply(const Polynomial& f) const;

  private:
    friend struct WellDefinedCheck;
    Derivation(QRPtr ring, std::vector<Polynomial> images, std::string name)
        : ring_(std::move(ring)), images_(std::move(images)), name_(std::move(name)) {}
    QRPtr ring_;
    std::vector<Polynomial> images_;
    std::string name_;
};

struct WellDefinedCheck {
    std::optional<Derivation> derivation;
    int failing_generator = -1;           // index into the ideal generators on failure
    std::optional<Polynomial> residue;    // the nonzero normal form witnessing failure

    bool ok() const { return derivation.has_value(); }

    static WellDefinedCheck run(QRPtr ring, std::vector<Polynomial> images,
                                std::string name = "D");
};

bool is_differential_ideal(const QRPtr& ring, const std::vector<Polynomial>& ideal_gens,
                           const std::vector<Derivation>& ds);

enum class MaxDiffMode { automatic, shortcut, fixpoint, verify };

struct MaxDiffResult {
    std::vector<Polynomial> generators;       // of B, normal forms
    MaxDiffMode mode_used = MaxDiffMode::automatic;
    bool certified = true;                    // verify mode can fail certification
    std::optional<long> quotient_length;      // length of R/candidate in verify mode
    std::vector<std::size_t> fixpoint_trace;  // subspace dims per iteration
};

// The unique largest proper D-stable ideal of graded-local R. shortcut:
// every D maps m into m, so B = m. fixpoint: descending stable-subspace
// iteration in the artinian realization. verify: certify a candidate of
// finite colength by running the fixpoint in R/candidate.
MaxDiffResult maximally_differential_ideal(const QRPtr& ring, const std::vector<Derivation>& ds,
                                           MaxDiffMode mode,
                                           const std::vector<Polynomial>* candidate = nullptr);

}  // namespace diffalg

#endif
