#include "qhowe/ratfunc.hpp"

#include <cctype>
#include <ostream>
#include <random>

namespace qhowe {

namespace {

const Poly kOne(mpz_class(1));

// Parse one polynomial written as a sum of terms c, c*q^k, q^k, -q, ...
Poly parse_poly(const std::string& s) {
  std::vector<mpz_class> co;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool any = false;
  while (true) {
    skip();
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (any) {
      throw std::invalid_argument("bad polynomial: " + s);
    }
    mpz_class c = 1;
    bool have_c = false;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      c = mpz_class(s.substr(i, j - i));
      have_c = true;
      i = j;
    }
    skip();
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip();
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw std::invalid_argument("bad exponent: " + s);
        power = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!have_c) {
      throw std::invalid_argument("bad polynomial: " + s);
    }
    if (static_cast<int>(co.size()) <= power) co.resize(power + 1);
    co[power] += sign * c;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return Poly(std::move(co));
}

}  // namespace

RatFunc::RatFunc(long v) : num_(mpz_class(v)), den_(mpz_class(1)) {}

RatFunc::RatFunc(const mpq_class& v) : num_(v.get_num()), den_(v.get_den()) {}

RatFunc::RatFunc(Poly num, Poly den, int shift) : e_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

RatFunc RatFunc::q() { return q_pow(1); }

RatFunc RatFunc::q_pow(int k) {
  RatFunc r(1);
  r.e_ = k;
  return r;
}

bool RatFunc::is_one() const { return e_ == 0 && num_ == kOne && den_ == kOne; }

bool RatFunc::is_constant() const {
  return is_zero() || (e_ == 0 && num_.degree() == 0 && den_.degree() == 0);
}

int RatFunc::weight() const {
  if (is_zero()) return 0;
  return num_.degree() + den_.degree() + (e_ < 0 ? -e_ : e_);
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    e_ = 0;
    den_ = kOne;
    return;
  }
  int lo = num_.low_order();
  if (lo) {
    num_ = num_.shifted_down(lo);
    e_ += lo;
  }
  lo = den_.low_order();
  if (lo) {
    den_ = den_.shifted_down(lo);
    e_ -= lo;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    Poly g = Poly::gcd_primitive(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_class g = gcd(cn, cd);
  if (den_.lc() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int e = std::min(e_, o.e_);
  Poly a = num_.shifted(e_ - e);
  Poly b = o.num_.shifted(o.e_ - e);
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    num_ = a * o.den_ + b * den_;
    den_ = den_ * o.den_;
  }
  e_ = e;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  e_ += o.e_;
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    mpz_class g = gcd(num_.content(), den_.content());
    if (g != 1) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  Poly g1 = Poly::gcd_primitive(num_, o.den_);
  Poly g2 = Poly::gcd_primitive(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? num_.divexact(g1) : num_;
  Poly d2 = g1.degree() > 0 ? o.den_.divexact(g1) : o.den_;
  Poly n2 = g2.degree() > 0 ? o.num_.divexact(g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? den_.divexact(g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_class g = gcd(cn, cd);
  if (den_.lc() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  RatFunc r;
  r.e_ = -e_;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lc() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  RatFunc r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

RatFunc RatFunc::bar() const {
  if (is_zero()) return *this;
  // num(1/q) = q^-deg * rev(num)
  return RatFunc(num_.reversed(), den_.reversed(), -e_ - num_.degree() + den_.degree());
}

bool RatFunc::has_pole_at(const mpq_class& c) const {
  if (is_zero()) return false;
  if (c == 0) return e_ < 0;
  return den_.eval(c) == 0;
}

mpq_class RatFunc::specialize(const mpq_class& c) const {
  if (is_zero()) return 0;
  if (has_pole_at(c)) throw PoleAtPoint("pole at q = " + c.get_str() + " in " + str());
  if (c == 0) return e_ > 0 ? mpq_class(0) : num_.eval(c) / den_.eval(c);
  mpq_class v = num_.eval(c) / den_.eval(c);
  mpq_class p = 1;
  mpq_class base = e_ >= 0 ? c : mpq_class(1) / c;
  for (int k = 0; k < (e_ >= 0 ? e_ : -e_); ++k) p *= base;
  return v * p;
}

RatFunc RatFunc::subst(const mpq_class& c) const { return RatFunc(specialize(c)); }

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant: " + str());
  if (is_zero()) return 0;
  mpq_class v(num_.lc(), den_.lc());
  v.canonicalize();
  return v;
}

std::string RatFunc::str() const {
  Poly n = num_, d = den_;
  if (e_ > 0) n = n.shifted(e_);
  if (e_ < 0) d = d.shifted(-e_);
  return "(" + n.str() + ")/(" + d.str() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
  // Expect "(A)/(B)".
  const size_t mid = s.find(")/(");
  if (s.size() < 7 || s.front() != '(' || s.back() != ')' || mid == std::string::npos)
    throw std::invalid_argument("bad rational function: " + s);
  Poly n = parse_poly(s.substr(1, mid - 1));
  Poly d = parse_poly(s.substr(mid + 3, s.size() - mid - 4));
  return RatFunc(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

RatFunc q_number_at(const RatFunc& qv, int j, bool factorial) {
  if (j < 0) throw std::invalid_argument("q_number: negative argument");
  auto single = [&](int k) {
    if (k == 0) return RatFunc(0);
    return (qv.pow(k) - qv.pow(-k)) / (qv - qv.inv());
  };
  if (!factorial) return single(j);
  RatFunc r(1);
  for (int k = 1; k <= j; ++k) r *= single(k);
  return r;
}

RatFunc q_number(int j, bool factorial) { return q_number_at(RatFunc::q(), j, factorial); }

bool probably_equal(const RatFunc& f, const RatFunc& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("probably_equal: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000003, 1000003);
  std::uniform_int_distribution<long> den(1, 997);
  int done = 0;
  while (done < trials) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    if (c == 0 || f.has_pole_at(c) || g.has_pole_at(c)) continue;
    if (f.specialize(c) != g.specialize(c)) return false;
    ++done;
  }
  return true;
}

double probable_error_bound(const RatFunc& f, const RatFunc& g) {
  // f - g = 0 at a point means a root of a polynomial of bounded degree.
  RatFunc d = f - g;
  const int deg = d.num().degree() + (d.shift() > 0 ? d.shift() : 0);
  return static_cast<double>(deg) / (2.0 * 1000003.0 + 1.0);
}

}  // namespace qhowe
