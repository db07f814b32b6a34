#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qhowe {

// Dense integer polynomial in q, coefficients stored in ascending order.
// The zero polynomial has no coefficients; otherwise the top coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpz_class& c);
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int low_order() const;  // smallest power with nonzero coefficient
  const mpz_class& lc() const { return c_.back(); }
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_constant() const { return c_.size() <= 1; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpz_class& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly shifted(int k) const;         // multiply by q^k, k >= 0
  Poly shifted_down(int k) const;    // divide by q^k, requires low_order() >= k
  Poly reversed() const;             // q^deg * p(1/q)
  mpz_class content() const;         // nonnegative gcd of coefficients
  Poly divexact(const mpz_class& s) const;
  Poly divexact(const Poly& d) const;  // exact division in Z[q]
  Poly pseudo_rem(const Poly& d) const;
  mpq_class eval(const mpq_class& x) const;

  // Primitive gcd with positive leading coefficient; contents are ignored.
  static Poly gcd_primitive(const Poly& a, const Poly& b);

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace qhowe
