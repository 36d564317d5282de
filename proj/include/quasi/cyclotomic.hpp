#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace quasi {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
// Parses "p" or "p/q"; throws Error(parse).
Rational parse_rational(const std::string& text);
// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);

// An exact element of a cyclotomic field Q(zeta_N).
//
// Stored as coefficients on the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N) with
// z = exp(2 pi i / N), after reduction by the N-th cyclotomic polynomial. N is always the
// least conductor whose field contains the value, so equal values have identical
// representations.
class Cyc {
 public:
  Cyc() : conductor_(1), coeffs_{Rational(0)} {}
  Cyc(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT: implicit by design of the scalar type
  Cyc(const Rational& q) : conductor_(1), coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT

  // E(n)^k, i.e. exp(2 pi i k / n).
  static Cyc root(unsigned n, long long k);
  // Sum over k of dense[k] * E(n)^k; dense may have any length.
  static Cyc from_powers(unsigned n, const std::vector<Rational>& dense);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const { return conductor_ == 1; }
  // Throws Error(invalid_argument) unless rational.
  const Rational& rational() const;

  Cyc conj() const { return galois(-1); }
  // The field automorphism z -> z^a (a coprime to the conductor).
  Cyc galois(long long a) const;
  // Throws Error(division_by_zero) for zero.
  Cyc inverse() const;
  // z * conj(z); real, but rational only in special cases.
  Cyc abs2() const { return *this * conj(); }

  // When this is a root of unity, its argument as a fraction of a full turn in [0, 1).
  std::optional<Rational> root_angle() const;

  // E(N)^k notation, e.g. "E(4)", "-1", "1/2*E(5)^2+E(5)^3".
  std::string to_string() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Cyc(unsigned n, std::vector<Rational> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {}
  static Cyc normalized(unsigned n, std::vector<Rational> reduced);
  std::vector<Rational> lifted(unsigned target) const;

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

// m with 0 < m <= l and c == E(l)^m, if any. The value 1 maps to m = l.
std::optional<unsigned> as_root_of_unity(const Cyc& c, unsigned l);

// Deterministic total order used for sorting character rows: roots of unity first by
// angle, then other values by conductor and by coefficients (larger first).
std::strong_ordering display_order(const Cyc& a, const Cyc& b);

unsigned euler_phi(unsigned n);

}  // namespace quasi
