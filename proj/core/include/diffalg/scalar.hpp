#ifndef DIFFALG_SCALAR_HPP
#define DIFFALG_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace diffalg {

// Thrown on any contract violation; everything in the engine is exact, so
// there are no numerical-error escape hatches.
struct algebra_error : std::runtime_error {
    explicit algebra_error(const std::string& what) : std::runtime_error(what) {}
};

class Scalar;

// A coefficient field: F_p for a small prime p, or Q.
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    bool operator==(const Field&) const = default;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    // Decimal integer literal (arbitrary size over Q, reduced over F_p).
    Scalar from_string(const std::string& digits) const;

    std::string describe() const;

  private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;  // 0 means Q
};

// An exact field element. Carries enough of its field (the characteristic)
// to check compatibility in mixed expressions.
class Scalar {
  public:
    Scalar() = delete;

    std::uint32_t characteristic() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Over Q: true iff the value is an integer.
    bool is_integral() const;
    std::string to_string() const;

  private:
    friend class Field;
    struct Fp {
        std::uint32_t v;
        std::uint32_t p;
        bool operator==(const Fp&) const = default;
    };
    explicit Scalar(Fp f) : rep_(f) {}
    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

    std::variant<Fp, mpq_class> rep_;
};

}  // namespace diffalg

#endif
