#include "rankforge/bipoly.hpp"

#include <sstream>

namespace rankforge {

void BiPoly::add_term(long du, long dt, const Rat& v) {
  if (v == 0) return;
  auto it = terms_.find({du, dt});
  if (it == terms_.end()) {
    terms_.emplace(Key{du, dt}, v);
  } else {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::monomial(long deg_u, long deg_t, const Rat& coeff) {
  BiPoly r;
  r.add_term(deg_u, deg_t, coeff);
  return r;
}

BiPoly BiPoly::from_poly_in_u(const UniPoly& f) {
  BiPoly r;
  for (long i = 0; i <= f.degree(); ++i) r.add_term(i, 0, f.coeff(i));
  return r;
}

BiPoly BiPoly::from_poly_in_t(const UniPoly& f) {
  BiPoly r;
  for (long i = 0; i <= f.degree(); ++i) r.add_term(0, i, f.coeff(i));
  return r;
}

long BiPoly::deg_u() const {
  long d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first);
  return d;
}

long BiPoly::deg_t() const {
  long d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.second);
  return d;
}

Rat BiPoly::coeff(long du, long dt) const {
  auto it = terms_.find({du, dt});
  return it == terms_.end() ? Rat(0) : it->second;
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r(*this);
  for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, v);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r(*this);
  for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, -v);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, va] : terms_)
    for (const auto& [kb, vb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

BiPoly BiPoly::operator*(const Rat& s) const {
  BiPoly r;
  if (s == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * s);
  return r;
}

BiPoly BiPoly::pow(unsigned long e) const {
  BiPoly acc = BiPoly::constant(Rat(1));
  BiPoly base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Rat BiPoly::eval(const Rat& u0, const Rat& t0) const {
  Rat acc(0);
  for (const auto& [k, v] : terms_)
    acc += v * rat_pow(u0, k.first) * rat_pow(t0, k.second);
  return acc;
}

UniPoly BiPoly::specialize(const Rat& u0) const {
  long dt = deg_t();
  if (dt < 0) return UniPoly();
  std::vector<Rat> c(static_cast<std::size_t>(dt) + 1, Rat(0));
  for (const auto& [k, v] : terms_)
    c[static_cast<std::size_t>(k.second)] += v * rat_pow(u0, k.first);
  return UniPoly(std::move(c));
}

UniPoly BiPoly::leading_t_coeff() const {
  long dt = deg_t();
  if (dt < 0) return UniPoly();
  long du = 0;
  for (const auto& [k, v] : terms_)
    if (k.second == dt) du = std::max(du, k.first);
  std::vector<Rat> c(static_cast<std::size_t>(du) + 1, Rat(0));
  for (const auto& [k, v] : terms_)
    if (k.second == dt) c[static_cast<std::size_t>(k.first)] = v;
  return UniPoly(std::move(c));
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest t-degree first, then highest u-degree
  std::map<std::pair<long, long>, Rat> ordered;
  for (const auto& [k, v] : terms_) ordered[{-k.second, -k.first}] = v;
  for (const auto& [k, v] : ordered) {
    long dt = -k.first, du = -k.second;
    Rat a = v;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = du > 0 || dt > 0;
    if (!has_var || a != 1) os << to_string(a);
    if (du > 0) {
      if (a != 1) os << "*";
      os << "u";
      if (du > 1) os << "^" << du;
    }
    if (dt > 0) {
      if (a != 1 || du > 0) os << "*";
      os << "t";
      if (dt > 1) os << "^" << dt;
    }
  }
  return os.str();
}

}  // namespace rankforge
