#include "qhowe/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhowe {

namespace {
const mpz_class kZero(0);
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int power) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(power + 1, mpz_class(0));
  p.c_[power] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

const mpz_class& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(k, mpz_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shifted_down(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly Poly::reversed() const {
  Poly r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::divexact(const mpz_class& s) const {
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly();
  if (d.degree() == 0) return divexact(d.c_[0]);
  std::vector<mpz_class> rem = c_;
  const int dd = d.degree();
  const int qd = degree() - dd;
  if (qd < 0) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> quo(qd + 1);
  for (int k = qd; k >= 0; --k) {
    mpz_class& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.lc().get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
    for (int j = 0; j <= dd; ++j) rem[k + j] -= t * d.c_[j];
    quo[k] = t;
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(quo));
}

Poly Poly::pseudo_rem(const Poly& d) const {
  Poly r = *this;
  const int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    const int shift = r.degree() - dd;
    mpz_class a = r.lc();
    mpz_class b = d.lc();
    mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    r *= b;
    for (int j = 0; j <= dd; ++j) r.c_[shift + j] -= a * d.c_[j];
    r.trim();
  }
  return r;
}

Poly Poly::gcd_primitive(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() && b0.is_zero()) return Poly();
  if (a0.is_zero() || b0.is_zero()) {
    Poly p = a0.is_zero() ? b0 : a0;
    p = p.divexact(p.content());
    if (p.lc() < 0) p = -p;
    return p;
  }
  if (a0.degree() == 0 || b0.degree() == 0) return Poly(mpz_class(1));
  Poly a = a0.divexact(a0.content());
  Poly b = b0.divexact(b0.content());
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = a.pseudo_rem(b);
    a = std::move(b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return Poly(mpz_class(1));
    b = r.divexact(r.content());
  }
  if (a.lc() < 0) a = -a;
  return a;
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += mpq_class(*it);
  }
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& x = c_[k];
    if (x == 0) continue;
    mpz_class mag = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace qhowe
