#include "hocolim/ring.hpp"

#include <stdexcept>

namespace hocolim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec RingSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("prime field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  return RingSpec(RingKind::prime_field, p);
}

Scalar RingSpec::normalize(Scalar v) const {
  switch (kind_) {
    case RingKind::rationals:
      return v;
    case RingKind::integers:
      if (v.get_den() != 1) {
        throw std::domain_error("non-integral value " + to_string(v) + " in Z");
      }
      return v;
    case RingKind::prime_field: {
      if (v.get_den() != 1) {
        // a/b = a * b^{-1} mod p
        mpz_class num = v.get_num();
        mpz_class den = v.get_den();
        mpz_class p(p_);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
          throw std::domain_error("denominator divisible by characteristic");
        }
        num = num * inv;
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        return Scalar(r);
      }
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num_mpz_t(), p_);
      return Scalar(r);
    }
  }
  return v;
}

bool RingSpec::is_unit(const Scalar& a) const {
  if (is_field()) return a != 0;
  return a == 1 || a == -1;
}

Scalar RingSpec::inverse(const Scalar& a) const {
  if (!is_unit(a)) {
    throw std::domain_error(to_string(a) + " is not a unit in " + name());
  }
  switch (kind_) {
    case RingKind::integers:
      return a;
    case RingKind::rationals:
      return Scalar(1) / a;
    case RingKind::prime_field: {
      mpz_class inv;
      mpz_class p(p_);
      mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
      return Scalar(inv);
    }
  }
  return a;
}

std::string RingSpec::name() const {
  switch (kind_) {
    case RingKind::integers:
      return "Z";
    case RingKind::rationals:
      return "Q";
    case RingKind::prime_field:
      return "F" + std::to_string(p_);
  }
  return "?";
}

std::string to_string(const Scalar& v) { return v.get_str(); }

}  // namespace hocolim
