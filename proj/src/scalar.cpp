#include "hopfcoh/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace hopfcoh {

namespace {

using i128 = __int128;

constexpr i128 kMin = std::numeric_limits<std::int64_t>::min() + 1;
constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v >= kMin && v <= kMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

mpz_class mpz_from_i64(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_ == 0) return Scalar::rational(n, 1);
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(p_, static_cast<std::uint64_t>(r));
}

Scalar Field::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InputError("empty field element");
  auto slash = text.find('/');
  std::string num_text(trim(text.substr(0, slash)));
  std::string den_text = slash == std::string_view::npos ? "1" : std::string(trim(text.substr(slash + 1)));
  if (!num_text.empty() && num_text.front() == '+') num_text.erase(0, 1);
  mpz_class num, den;
  if (num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0)
    throw InputError("malformed field element '" + std::string(text) + "'");
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (p_ == 0) return Scalar::from_mpq(mpq_class(num, den));
  if (slash != std::string_view::npos) {
    mpz_class d = den % p_;
    if (d == 0) throw InputError("denominator divisible by p in '" + std::string(text) + "'");
  }
  mpz_class n = num % p_;
  if (n < 0) n += p_;
  mpz_class d = den % p_;
  if (d < 0) d += p_;
  Scalar a = Scalar::residue(p_, n.get_ui());
  Scalar b = Scalar::residue(p_, d.get_ui());
  return a / b;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Scalar::Scalar(const Scalar& o) : num_(o.num_), den_(o.den_), p_(o.p_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    p_ = o.p_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t v) {
  Scalar s;
  s.p_ = p;
  s.num_ = static_cast<std::int64_t>(v % p);
  return s;
}

Scalar Scalar::rational(std::int64_t n, std::int64_t d) {
  Scalar s;
  s.num_ = n;
  s.den_ = d;
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  q.canonicalize();
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != LONG_MIN) {
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
  } else {
    s.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i64(num_), mpz_from_i64(den_));
  q.canonicalize();
  return q;
}

Field Scalar::field() const { return Field(p_); }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw InputError("arithmetic between elements of different fields");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (p_) {
    if (r.num_) r.num_ = p_ - r.num_;
  } else if (big_) {
    *r.big_ = -*r.big_;
  } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
    return from_mpq(-to_mpq());
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  check_same(o);
  if (p_) {
    std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_);
    if (s >= p_) s -= p_;
    num_ = static_cast<std::int64_t>(s);
    return *this;
  }
  if (!big_ && !o.big_) {
    i128 n, d;
    if (den_ == 1 && o.den_ == 1) {
      n = static_cast<i128>(num_) + o.num_;
      d = 1;
    } else {
      n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
      d = static_cast<i128>(den_) * o.den_;
      i128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      if (num_ == 0) den_ = 1;
      return *this;
    }
  }
  return *this = from_mpq(to_mpq() + o.to_mpq());
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  check_same(o);
  if (p_) {
    num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) % p_);
    return *this;
  }
  if (!big_ && !o.big_) {
    i128 n, d;
    if (den_ == 1 && o.den_ == 1) {
      n = static_cast<i128>(num_) * o.num_;
      d = 1;
    } else {
      i128 g1 = gcd128(num_, o.den_), g2 = gcd128(o.num_, den_);
      n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
      d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  return *this = from_mpq(to_mpq() * o.to_mpq());
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
  if (b.is_zero() || c.is_zero()) return;
  if (p_ && b.p_ == p_ && c.p_ == p_) {
    std::uint64_t prod = static_cast<std::uint64_t>(b.num_) * static_cast<std::uint64_t>(c.num_) % p_;
    std::uint64_t s = static_cast<std::uint64_t>(num_) + prod;
    if (s >= p_) s -= p_;
    num_ = static_cast<std::int64_t>(s);
    return;
  }
  Scalar t(b);
  t *= c;
  *this += t;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (p_) return residue(p_, pow_mod(static_cast<std::uint64_t>(num_), p_ - 2, p_));
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    return num_ > 0 ? rational(den_, num_) : rational(-den_, -num_);
  }
  return from_mpq(1 / to_mpq());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.p_ != b.p_) return false;
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value that fits is never stored big
}

std::size_t Scalar::size_hint() const {
  if (p_) return num_ == 0 ? 0 : 1;
  if (big_) return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
  auto bits = [](std::int64_t v) {
    std::uint64_t u = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    return static_cast<std::size_t>(64 - __builtin_clzll(u | 1));
  };
  return bits(num_) + bits(den_);
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hopfcoh
