#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qhowe/poly.hpp"

namespace qhowe {

struct PoleAtPoint : std::domain_error {
  explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

// Exact element of Q(q), stored as q^e * num / den with
//   num(0) != 0, den(0) != 0, gcd(num, den) = 1 over Q[q],
//   coprime integer contents, positive leading coefficient of den.
// Zero is num = 0, e = 0, den = 1.
class RatFunc {
 public:
  RatFunc() : den_(mpz_class(1)) {}
  RatFunc(long v);  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const mpq_class& v);
  RatFunc(Poly num, Poly den, int shift = 0);

  static RatFunc q();
  static RatFunc q_pow(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;  // element of Q
  int shift() const { return e_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  // Combined degree size, used as an elimination pivot heuristic.
  int weight() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inv() const;
  RatFunc pow(int k) const;
  // Substitute q -> 1/q.
  RatFunc bar() const;
  // Substitute q -> c for a rational number c.
  RatFunc subst(const mpq_class& c) const;

  // Exact value at q = c; throws PoleAtPoint if the denominator vanishes.
  mpq_class specialize(const mpq_class& c) const;
  bool has_pole_at(const mpq_class& c) const;
  // Constant value; requires is_constant().
  mpq_class constant_value() const;

  // "(<num>)/(<den>)" in descending powers of q.
  std::string str() const;
  static RatFunc parse(const std::string& s);

 private:
  void normalize();
  int e_ = 0;
  Poly num_;
  Poly den_;
};

// [j] = (q^j - q^-j)/(q - q^-1), or [j]! when factorial is set.
RatFunc q_number(int j, bool factorial = false);
// Same, evaluated at an arbitrary value of q.
RatFunc q_number_at(const RatFunc& qv, int j, bool factorial = false);

// Agreement at `trials` seed-deterministic rational points (poles resampled).
bool probably_equal(const RatFunc& f, const RatFunc& g, int trials, std::uint64_t seed);
// Upper bound on the chance that distinct f, g agree at one random point.
double probable_error_bound(const RatFunc& f, const RatFunc& g);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace qhowe
