#include "rankforge/quotient.hpp"

namespace rankforge {

QuotElem::QuotElem(UniPoly modulus, const UniPoly& rep) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1)
    throw std::invalid_argument("QuotElem: modulus must have degree >= 1");
  rep_ = divrem(rep, modulus_).second;
}

QuotElem QuotElem::constant(const UniPoly& modulus, const Rat& v) {
  return QuotElem(modulus, UniPoly::constant(v));
}

QuotElem QuotElem::generator(const UniPoly& modulus) {
  return QuotElem(modulus, UniPoly::var());
}

void QuotElem::check_same_modulus(const QuotElem& o) const {
  if (modulus_ != o.modulus_)
    throw std::invalid_argument("QuotElem: operands have different moduli");
}

QuotElem QuotElem::operator-() const { return QuotElem(modulus_, -rep_); }

QuotElem QuotElem::operator+(const QuotElem& o) const {
  check_same_modulus(o);
  return QuotElem(modulus_, rep_ + o.rep_);
}

QuotElem QuotElem::operator-(const QuotElem& o) const {
  check_same_modulus(o);
  return QuotElem(modulus_, rep_ - o.rep_);
}

QuotElem QuotElem::operator*(const QuotElem& o) const {
  check_same_modulus(o);
  return QuotElem(modulus_, rep_ * o.rep_);
}

QuotElem QuotElem::operator*(const Rat& s) const { return QuotElem(modulus_, rep_ * s); }

QuotElem QuotElem::operator/(const Rat& s) const { return QuotElem(modulus_, rep_ / s); }

bool QuotElem::operator==(const QuotElem& o) const {
  return modulus_ == o.modulus_ && rep_ == o.rep_;
}

QuotElem QuotElem::inverse() const {
  if (rep_.is_zero())
    throw NonInvertibleError("QuotElem::inverse: zero element", UniPoly());
  auto eg = poly_egcd(rep_, modulus_);
  if (eg.g.degree() != 0)
    throw NonInvertibleError(
        "QuotElem::inverse: representative shares factor with modulus "
        "(modulus is reducible, contradicting its certificate)",
        eg.g);
  // eg.g is the constant 1 after normalization, so s is the inverse.
  return QuotElem(modulus_, eg.s);
}

QuotElem QuotElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuotElem acc = QuotElem::constant(modulus_, Rat(1));
  QuotElem base(*this);
  unsigned long ue = static_cast<unsigned long>(e);
  while (ue > 0) {
    if (ue & 1) acc = acc * base;
    base = base * base;
    ue >>= 1;
  }
  return acc;
}

UniPoly minimal_poly(const QuotElem& a) {
  const UniPoly& h = a.modulus();
  if (a.is_constant())
    return UniPoly::var() - UniPoly::constant(a.rep().coeff(0));

  // Char poly C(z) = Res_t(h(t), z - rep(t)) / lc(h)^deg(rep), degree deg h
  // in z. Evaluate the resultant at deg h + 1 rational nodes, interpolate,
  // then normalize monic.
  long n = h.degree();
  std::vector<Rat> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (long j = 0; j <= n; ++j) {
    Rat z(j);
    xs.push_back(z);
    ys.push_back(resultant(h, UniPoly::constant(z) - a.rep()));
  }
  UniPoly charpoly = lagrange_interpolate(xs, ys);
  return charpoly.monic();
}

QuotElem eval_poly_at(const UniPoly& f, const QuotElem& a) {
  QuotElem acc = QuotElem::constant(a.modulus(), Rat(0));
  for (long i = f.degree(); i >= 0; --i)
    acc = acc * a + QuotElem::constant(a.modulus(), f.coeff(static_cast<std::size_t>(i)));
  return acc;
}

}  // namespace rankforge
