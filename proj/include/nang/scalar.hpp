#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nang {

// Exact rationals; mpq_class keeps fractions reduced with positive denominator.
using Scalar = mpq_class;

std::string to_string(const Scalar& x);
Scalar parse_scalar(const std::string& text);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

// Prime field Z/P, used to exercise the matrix kernel away from Q.
template <std::uint32_t P>
struct Fp {
  std::uint32_t v = 0;

  Fp() = default;
  Fp(long long x) {  // NOLINT(google-explicit-constructor)
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += P;
    v = static_cast<std::uint32_t>(r);
  }

  friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) + b.v); }
  friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) - b.v); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<long long>((static_cast<std::uint64_t>(a.v) * b.v) % P));
  }
  friend Fp operator-(Fp a) { return Fp(-static_cast<long long>(a.v)); }
  Fp inv() const {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    std::uint64_t base = v, e = P - 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Fp(static_cast<long long>(r));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }
};

}  // namespace nang
