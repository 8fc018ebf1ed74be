#include "diffalg/scalar.hpp"

namespace diffalg {

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended euclid; a != 0 mod p
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw algebra_error("division by a non-unit modulo " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p > 65536 || !is_small_prime(p))
        throw algebra_error("field characteristic must be a prime <= 2^16, got " + std::to_string(p));
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
    if (p_ == 0) return Scalar(mpq_class(n));
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Scalar(Scalar::Fp{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_string(const std::string& digits) const {
    mpz_class z;
    if (z.set_str(digits, 10) != 0) throw algebra_error("bad integer literal '" + digits + "'");
    if (p_ == 0) return Scalar(mpq_class(z));
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Scalar(Scalar::Fp{static_cast<std::uint32_t>(r.get_ui()), p_});
}

std::string Field::describe() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

std::uint32_t Scalar::characteristic() const {
    if (auto* f = std::get_if<Fp>(&rep_)) return f->p;
    return 0;
}

bool Scalar::is_zero() const {
    if (auto* f = std::get_if<Fp>(&rep_)) return f->v == 0;
    return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
    if (auto* f = std::get_if<Fp>(&rep_)) return f->v == 1 % f->p;
    return std::get<mpq_class>(rep_) == 1;
}

namespace {
void check_same(const Scalar& a, const Scalar& b) {
    if (a.characteristic() != b.characteristic())
        throw algebra_error("scalar arithmetic across different coefficient fields");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(*this, o);
    if (auto* f = std::get_if<Fp>(&rep_)) {
        std::uint64_t s = std::uint64_t(f->v) + std::get<Fp>(o.rep_).v;
        return Scalar(Fp{static_cast<std::uint32_t>(s % f->p), f->p});
    }
    return Scalar(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(*this, o);
    if (auto* f = std::get_if<Fp>(&rep_)) {
        std::uint64_t s = std::uint64_t(f->v) * std::get<Fp>(o.rep_).v;
        return Scalar(Fp{static_cast<std::uint32_t>(s % f->p), f->p});
    }
    return Scalar(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (auto* f = std::get_if<Fp>(&rep_))
        return Scalar(Fp{f->v == 0 ? 0 : f->p - f->v, f->p});
    return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw algebra_error("inverse of zero");
    if (auto* f = std::get_if<Fp>(&rep_)) return Scalar(Fp{mod_inverse(f->v, f->p), f->p});
    return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc = *this, out = *this;
    // out initialized only to carry the field; set to one below
    if (auto* f = std::get_if<Fp>(&out.rep_))
        out = Scalar(Fp{f->p == 1 ? 0u : 1u % f->p, f->p});
    else
        out = Scalar(mpq_class(1));
    while (e > 0) {
        if (e & 1) out = out * acc;
        e >>= 1;
        if (e) acc = acc * acc;
    }
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    if (characteristic() != o.characteristic()) return false;
    if (auto* f = std::get_if<Fp>(&rep_)) return f->v == std::get<Fp>(o.rep_).v;
    return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

bool Scalar::is_integral() const {
    if (std::holds_alternative<Fp>(rep_)) return true;
    return std::get<mpq_class>(rep_).get_den() == 1;
}

std::string Scalar::to_string() const {
    if (auto* f = std::get_if<Fp>(&rep_)) return std::to_string(f->v);
    return std::get<mpq_class>(rep_).get_str();
}

}  // namespace diffalg
