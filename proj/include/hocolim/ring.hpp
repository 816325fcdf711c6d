#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hocolim {

/// Exact ring element. Integers and prime-field residues are stored as
/// integral rationals; prime-field values are kept reduced into [0, p).
using Scalar = mpq_class;

enum class RingKind { integers, rationals, prime_field };

/// Coefficient ring: Z, Q or F_p. All arithmetic goes through the ring so
/// that prime-field values stay reduced.
class RingSpec {
 public:
  RingSpec() = default;

  static RingSpec integers() { return RingSpec(RingKind::integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::rationals, 0); }
  /// Throws std::invalid_argument if p is not prime.
  static RingSpec prime_field(std::uint32_t p);

  RingKind kind() const { return kind_; }
  /// The prime p for F_p, 0 otherwise.
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::integers; }

  Scalar normalize(Scalar v) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  bool is_unit(const Scalar& a) const;
  /// Multiplicative inverse; throws std::domain_error for non-units.
  Scalar inverse(const Scalar& a) const;

  /// "Z", "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

 private:
  RingSpec(RingKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  RingKind kind_ = RingKind::integers;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Decimal rendering ("3", "-1/2").
std::string to_string(const Scalar& v);

}  // namespace hocolim
