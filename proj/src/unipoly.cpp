#include "rankforge/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace rankforge {

namespace {
const Rat kZero(0);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& v) {
  if (v == 0) return UniPoly();
  return UniPoly(std::vector<Rat>{v});
}

UniPoly UniPoly::monomial(std::size_t deg, const Rat& coeff) {
  if (coeff == 0) return UniPoly();
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = coeff;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::var() { return monomial(1, Rat(1)); }

UniPoly UniPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_integer_coeffs(const std::vector<Int>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const Int& v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

const Rat& UniPoly::coeff(std::size_t i) const {
  if (i >= c_.size()) return kZero;
  return c_[i];
}

Rat UniPoly::lc() const { return c_.empty() ? Rat(0) : c_.back(); }

bool UniPoly::is_integral() const {
  for (const Rat& v : c_)
    if (!is_integer(v)) return false;
  return true;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (Rat& v : c) v = -v;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rat> c(c_);
  for (Rat& v : c) v *= s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator/(const Rat& s) const {
  if (s == 0) throw std::invalid_argument("UniPoly: division by zero scalar");
  return *this * (Rat(1) / s);
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::taylor_coeff(unsigned long i) const {
  if (static_cast<long>(i) > degree()) return UniPoly();
  std::vector<Rat> c(c_.size() - i);
  for (std::size_t m = 0; m + i < c_.size(); ++m)
    c[m] = c_[m + i] * Rat(binomial(static_cast<unsigned long>(m) + i, i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scale_arg(const Rat& s) const {
  std::vector<Rat> c(c_);
  Rat pw(1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= pw;
    pw *= s;
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::reversed() const {
  std::vector<Rat> c(c_.rbegin(), c_.rend());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return UniPoly();
  return *this / lc();
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& v = c_[i];
    if (v == 0) continue;
    Rat a = v;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) os << to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly::IntegerForm UniPoly::primitive_integer_form() const {
  if (c_.empty()) return {Rat(0), {}};
  Int den_lcm = 1;
  for (const Rat& v : c_) den_lcm = lcm(den_lcm, Int(v.get_den()));
  Int num_gcd = 0;
  std::vector<Int> scaled(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rat v = c_[i] * Rat(den_lcm);
    scaled[i] = v.get_num();  // integer by construction
    num_gcd = gcd(num_gcd, scaled[i]);
  }
  if (scaled.back() < 0) num_gcd = -num_gcd;
  for (Int& v : scaled) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), num_gcd.get_mpz_t());
  return {make_rat(num_gcd, den_lcm), std::move(scaled)};
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
  const Rat blc = b.lc();
  const long db = b.degree();
  for (long i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / blc;
    quo[i - db] = q;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd poly_egcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(Rat(1)), s1;
  UniPoly t0, t1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UniPoly s = s0 - q * s1;
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s);
    t0 = std::move(t1); t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("resultant: both arguments zero");
  if (a.is_zero() || b.is_zero()) {
    const UniPoly& nz = a.is_zero() ? b : a;
    return nz.degree() == 0 ? Rat(1) : Rat(0);
  }
  if (a.degree() == 0) return rat_pow(a.lc(), b.degree());
  if (b.degree() == 0) return rat_pow(b.lc(), a.degree());
  if (a.degree() < b.degree()) {
    Rat sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rat(-1) : Rat(1);
    return sign * resultant(b, a);
  }
  UniPoly r = divrem(a, b).second;
  if (r.is_zero()) return Rat(0);
  Rat sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rat(-1) : Rat(1);
  return sign * rat_pow(b.lc(), a.degree() - r.degree()) * resultant(b, r);
}

Rat discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  Rat res = resultant(f, f.derivative());
  long n = f.degree();
  Rat sign = ((n * (n - 1) / 2) % 2 == 1) ? Rat(-1) : Rat(1);
  return sign * res / f.lc();
}

UniPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  UniPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * (UniPoly::var() - UniPoly::constant(xs[j]));
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw std::invalid_argument("interpolate: repeated node");
    acc = acc + basis * (ys[i] / denom);
  }
  return acc;
}

}  // namespace rankforge
