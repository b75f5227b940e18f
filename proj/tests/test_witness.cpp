#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rankforge/cover.hpp"
#include "rankforge/witness.hpp"

using namespace rankforge;
using testutil::rnd_long;
using testutil::rnd_rat;

namespace {

UniPoly compose(const UniPoly& f, const UniPoly& inner) {
  UniPoly out;
  for (long i = f.degree(); i >= 0; --i) {
    out = out * inner + UniPoly::constant(f.coeff(i));
  }
  return out;
}

const UniPoly kQuint = UniPoly::from_int_coeffs({-8, -12, -22, -17, 0, 4});

}  // namespace

TEST_CASE("on-curve verification") {
  const CurveSpec c{UniPoly::from_int_coeffs({8, 8, 0, 1}),
                    UniPoly::monomial(2, Rat(1))};
  {
    const UniPoly h = UniPoly::from_int_coeffs({-17, 0, 1});
    const QuotElem x = QuotElem::constant(h, Rat(1));
    const QuotElem y = QuotElem::generator(h);
    CHECK(verify_on_curve(x, y, c));
    CHECK(!verify_on_curve(x, y + QuotElem::constant(h, Rat(1)), c));
    CHECK(!verify_on_curve(x + QuotElem::constant(h, Rat(2)), y, c));
  }
  {
    const SuperellipticSpec spec{2, 4, Rat(1)};
    const UniPoly h = UniPoly::from_int_coeffs({-1, 0, 1});
    CHECK(verify_on_curve(QuotElem::constant(h, Rat(0)),
                          QuotElem::constant(h, Rat(1)), spec));
    CHECK(!verify_on_curve(QuotElem::constant(h, Rat(1)),
                           QuotElem::constant(h, Rat(1)), spec));
  }
}

TEST_CASE("on-curve verification agrees with direct divisibility") {
  const long checked = 50;
  for (long trial = 0; trial < checked; ++trial) {
    std::vector<long> hc{rnd_long(1, 9)};
    const long deg = rnd_long(2, 5);
    for (long i = 1; i < deg; ++i) hc.push_back(rnd_long(-6, 6));
    hc.push_back(1);
    const UniPoly h = UniPoly::from_int_coeffs(hc);

    auto rnd_rep = [&] {
      std::vector<Rat> cs;
      for (long i = 0; i < deg; ++i) cs.push_back(rnd_rat(5, 3));
      return UniPoly(std::move(cs));
    };
    const UniPoly xr = rnd_rep(), yr = rnd_rep();
    const CurveSpec c{
        UniPoly({Rat(rnd_long(-9, 9)), Rat(rnd_long(-9, 9)), Rat(0), Rat(1)}),
        UniPoly::monomial(2, Rat(1))};

    const bool got = verify_on_curve(QuotElem(h, xr), QuotElem(h, yr), c);
    const UniPoly diff = compose(c.g, yr) - compose(c.f, xr);
    const bool want = divrem(diff, h).second.is_zero();
    CHECK(got == want);
  }
}

TEST_CASE("strict non-rationality of the point") {
  {
    const QuotElem x = QuotElem::constant(kQuint, Rat(3));
    const QuotElem alpha = QuotElem::generator(kQuint);
    CHECK(strictly_l_check(alpha, x, 5));
    CHECK(strictly_l_check(x, alpha, 5));
    CHECK(strictly_l_check(alpha, alpha, 5));
    CHECK(!strictly_l_check(x, x, 5));
  }
  {
    const UniPoly h = UniPoly::from_int_coeffs({-17, 0, 1});
    CHECK(strictly_l_check(QuotElem::constant(h, Rat(1)), QuotElem::generator(h), 2));
    CHECK(!strictly_l_check(QuotElem::constant(h, Rat(1)),
                            QuotElem::constant(h, Rat(5)), 2));
  }
}

TEST_CASE("denominator support of minimal polynomials") {
  const UniPoly h = UniPoly::from_int_coeffs({-2, 0, 1});
  const QuotElem alpha = QuotElem::generator(h);
  CHECK(s_integrality_check(alpha, Int(2)));
  CHECK(!s_integrality_check(alpha * make_rat(1, 3), Int(2)));
  CHECK(s_integrality_check(alpha * make_rat(1, 3), std::vector<Int>{Int(2), Int(3)}));
  // alpha^{-1} = alpha/2: the only denominator is q itself
  CHECK(s_integrality_check(alpha.inverse(), Int(2)));
  CHECK(!s_integrality_check(alpha.inverse(), std::vector<Int>{Int(3)}));
}

TEST_CASE("field fingerprints separate and collide correctly") {
  const UniPoly i2 = UniPoly::from_int_coeffs({1, 0, 1});   // t^2+1
  const UniPoly r2 = UniPoly::from_int_coeffs({-2, 0, 1});  // t^2-2
  const UniPoly r8 = UniPoly::from_int_coeffs({-8, 0, 1});  // same field as t^2-2
  {
    const auto fa = fingerprint(i2, {5, 7});
    const auto fb = fingerprint(r2, {5, 7});
    REQUIRE(fa.entries.size() == 2);
    CHECK(!fa.entries[0].skipped);
    CHECK(fa.entries[0].degrees == std::vector<long>{1, 1});  // -1 square mod 5
    CHECK(fa.entries[1].degrees == std::vector<long>{2});
    CHECK(fb.entries[0].degrees == std::vector<long>{2});
    CHECK(fb.entries[1].degrees == std::vector<long>{1, 1});  // 3^2 = 2 mod 7
    CHECK(distinguished(fa, fb));
    CHECK(!distinguished(fa, fingerprint(i2, {5, 7})));
  }
  {
    // one field, two generators: no good prime can separate them
    const auto fa = fingerprint(r2, {3, 5, 7, 11});
    const auto fb = fingerprint(r8, {3, 5, 7, 11});
    for (std::size_t i = 0; i < fa.entries.size(); ++i) {
      CHECK(fa.entries[i].degrees == fb.entries[i].degrees);
    }
    CHECK(!distinguished(fa, fb));
  }
  {
    const auto f = fingerprint(r2, {2});  // 2 divides the discriminant
    REQUIRE(f.entries.size() == 1);
    CHECK(f.entries[0].skipped);
    const auto g = fingerprint(UniPoly::from_int_coeffs({1, 1, 2}), {2});
    CHECK(g.entries[0].skipped);  // 2 divides the leading coefficient
  }
  {
    // skipped entries are never evidence either way
    const auto fa = fingerprint(r2, {2});
    const auto fb = fingerprint(i2, {2});
    CHECK(!distinguished(fa, fb));
  }
}

TEST_CASE("distinctness partition") {
  const UniPoly i2 = UniPoly::from_int_coeffs({1, 0, 1});
  const UniPoly r2 = UniPoly::from_int_coeffs({-2, 0, 1});
  const UniPoly r8 = UniPoly::from_int_coeffs({-8, 0, 1});
  const std::vector<std::uint64_t> ps{3, 5, 7, 11};
  {
    const auto rep = distinctness_report(
        {fingerprint(i2, ps), fingerprint(r2, ps), fingerprint(i2, ps)});
    REQUIRE(rep.class_count() == 2);
    CHECK(rep.classes[0] == std::vector<std::size_t>{0, 2});
    CHECK(rep.classes[1] == std::vector<std::size_t>{1});
  }
  {
    const auto rep = distinctness_report({fingerprint(i2, ps)});
    CHECK(rep.class_count() == 1);
  }
  {
    const auto rep = distinctness_report({fingerprint(r2, ps), fingerprint(r8, ps)});
    REQUIRE(rep.class_count() == 1);
    CHECK(rep.classes[0].size() == 2);
  }
  CHECK(distinctness_report({}).class_count() == 0);
}

TEST_CASE("default fingerprint primes avoid q, lc, and disc") {
  {
    const auto ps = default_fingerprint_primes(kQuint, Int(2), 12);
    CHECK(ps.size() == 12);
    const Rat disc = discriminant(kQuint);
    for (auto ell : ps) {
      CHECK(Int(ell) != 2);
      CHECK(Int(4) % Int(ell) != 0);
      CHECK(Int(disc.get_num()) % Int(ell) != 0);
    }
  }
  {
    const auto ps = default_fingerprint_primes(UniPoly::from_int_coeffs({-2, 0, 1}),
                                               Int(5), 4);
    CHECK(ps == std::vector<std::uint64_t>{3, 7, 11, 13});
  }
}

TEST_CASE("fingerprints of cover specializations are reproducible") {
  const auto f1 = fingerprint(kQuint, {3, 5, 7, 11, 13});
  const auto f2 = fingerprint(kQuint, {3, 5, 7, 11, 13});
  REQUIRE(f1.entries.size() == f2.entries.size());
  for (std::size_t i = 0; i < f1.entries.size(); ++i) {
    CHECK(f1.entries[i].prime == f2.entries[i].prime);
    CHECK(f1.entries[i].skipped == f2.entries[i].skipped);
    CHECK(f1.entries[i].degrees == f2.entries[i].degrees);
    long total = 0;
    for (long dd : f1.entries[i].degrees) total += dd;
    if (!f1.entries[i].skipped) CHECK(total == kQuint.degree());
  }
}
