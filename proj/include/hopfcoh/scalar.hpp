#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfcoh {

/// Input that violates a documented precondition (bad shapes, malformed text, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured entry budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug or invalid upstream data.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Scalar;

/// Ground field: the rationals (p == 0) or GF(p) for a prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  /// Parses "a", "-a", "a/b" (rationals) or an integer literal reduced mod p.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element.  Rationals live in int64 num/den when they fit and are
/// promoted to GMP otherwise; residues are stored in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  Field field() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// a += b * c without a temporary in the common small case.
  void add_mul(const Scalar& b, const Scalar& c);

  Scalar inverse() const;
  /// Pivot cost: bit length of numerator * denominator; 0/1 for residues.
  std::size_t size_hint() const;

  std::string to_string() const;

 private:
  friend class Field;
  static Scalar residue(std::uint32_t p, std::uint64_t v);
  static Scalar rational(std::int64_t n, std::int64_t d);  // d > 0, reduced
  static Scalar from_mpq(mpq_class q);
  mpq_class to_mpq() const;
  void check_same(const Scalar& o) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hopfcoh
