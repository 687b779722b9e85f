#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "br/rng.hpp"

namespace br {

// Prime field context.  Elements are raw uint64_t values in [0, p); the
// context carries the modulus and implements the arithmetic, so vectors of
// field elements stay flat.  p must be an odd prime < 2^63.  The default
// modulus is the Mersenne prime 2^31 - 1; the companion prime used for
// cross-checks is 2^61 - 1.
class PrimeField {
public:
  static constexpr std::uint64_t default_prime = 2147483647ULL;        // 2^31 - 1
  static constexpr std::uint64_t companion_prime = 2305843009213693951ULL; // 2^61 - 1

  explicit PrimeField(std::uint64_t p = default_prime) : p_(p) {
    if (p < 3 || p >= (1ULL << 63))
      throw std::invalid_argument("PrimeField: modulus out of range");
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    // Mersenne moduli admit a divisionless fold; they are also the two
    // default primes, so this branch is almost always taken and predicted.
    if (p_ == default_prime) {
      std::uint64_t t = (static_cast<std::uint64_t>(x) & p_) + static_cast<std::uint64_t>(x >> 31);
      t = (t & p_) + (t >> 31);
      return t >= p_ ? t - p_ : t;
    }
    if (p_ == companion_prime) {
      std::uint64_t t = (static_cast<std::uint64_t>(x) & p_) + static_cast<std::uint64_t>(x >> 61);
      t = (t & p_) + (t >> 61);
      return t >= p_ ? t - p_ : t;
    }
    return static_cast<std::uint64_t>(x % p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("PrimeField: element not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
  }

  std::uint64_t random(Rng& rng) const { return rng.below(p_); }

  // Representative in (-p/2, p/2], handy for printing small values.
  std::int64_t balanced(std::uint64_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  std::uint64_t p_;
};

} // namespace br
