#include <gtest/gtest.h>

#include <thread>

#include "gbell/gbell.hpp"
#include "oracles.hpp"

using namespace gbell;

namespace {

ExactPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(v);
}

ExactPoly random_poly(Rng& rng, long max_degree) {
  std::vector<Rational> v(static_cast<std::size_t>(rng.between(0, max_degree) + 1));
  for (auto& c : v) c = rng.rational(-9, 9, 5);
  if (v.back() == 0) v.back() = 1;
  return ExactPoly(v);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(2, -4);
  EXPECT_EQ(to_string(r), "-1/2");
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, ParseReportsPosition) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational(" 5 "), Rational(5));
  try {
    parse_rational("1/x", 10);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, FieldLawsOnRandomTriples) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational(-50, 50, 30), b = rng.rational(-50, 50, 30), c = rng.rational(-50, 50, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Stirling, BaseCases) {
  EXPECT_EQ(stirling2(0, 0), 1);
  for (std::size_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(stirling2(n, n), 1);
    EXPECT_EQ(stirling2(n, 0), 0);
  }
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_THROW(stirling2(2, 3), DomainError);
}

TEST(Stirling, MatchesAlternatingSum) {
  for (std::size_t n = 0; n <= 40; ++n)
    for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(stirling2(n, j), oracle::stirling_alternating(n, j)) << n << "," << j;
}

TEST(Stirling, MatchesPartitionCount) {
  for (std::size_t n = 0; n <= 9; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      EXPECT_EQ(stirling2(n, j), BigInt(static_cast<unsigned long>(oracle::stirling_enumerated(n, j))));
}

TEST(Stirling, ConcurrentReadersSeeOneTable) {
  std::vector<std::thread> pool;
  std::vector<BigInt> seen(8);
  for (std::size_t t = 0; t < seen.size(); ++t)
    pool.emplace_back([t, &seen] { seen[t] = stirling2(60 + t, 30); });
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < seen.size(); ++t) EXPECT_EQ(seen[t], oracle::stirling_alternating(60 + t, 30));
}

TEST(BellPoly, SmallCases) {
  EXPECT_EQ(bell_poly(0), poly({1}));
  EXPECT_EQ(bell_poly(1), poly({0, 1}));
  EXPECT_EQ(bell_poly(3), poly({0, 1, 3, 1}));
}

TEST(BellPoly, StirlingRouteEqualsRecurrenceRoute) {
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(bell_poly(n), bell_poly_by_recurrence(n)) << n;
}

TEST(ElementarySymmetric, Examples) {
  const std::vector<Rational> e = elementary_symmetric(PhiSequence::affine(Rational(0)), 3);
  EXPECT_EQ(e, (std::vector<Rational>{1, 6, 11, 6}));
  const std::vector<Rational> z = elementary_symmetric(PhiSequence(), 5);
  EXPECT_EQ(z, (std::vector<Rational>{1, 0, 0, 0, 0, 0}));
}

TEST(ElementarySymmetric, ReproducesProductOfLinearFactors) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const PhiSequence phi = random_nonneg_phi(rng);
    const std::size_t n = phi.prefix_length() + 2;
    ExactPoly product = ExactPoly::constant(1);
    for (std::size_t k = 1; k <= n; ++k) product = product * ExactPoly({phi[k], Rational(1)});
    const std::vector<Rational> e = elementary_symmetric(phi, n);
    ASSERT_EQ(e[0], 1);
    for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(product.coeff(j), e[n - j]);
  }
}

TEST(PolyArith, Examples) {
  EXPECT_EQ(poly({0, 1, 3, 1}).derivative(), poly({1, 6, 3}));
  EXPECT_EQ(gcd(poly({0, 0, 1}), poly({0, 1})), poly({0, 1}));
  EXPECT_EQ(poly({2, 4, 1})(Rational(-1)), Rational(-1));
  EXPECT_EQ(ExactPoly().degree(), -1);
  EXPECT_THROW(divmod(poly({1, 1}), ExactPoly()), DomainError);
}

TEST(PolyArith, DivisionIdentity) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const ExactPoly a = random_poly(rng, 7), b = random_poly(rng, 4);
    const PolyDivision d = divmod(a, b);
    EXPECT_EQ(d.quotient * b + d.remainder, a);
    EXPECT_LT(d.remainder.degree(), b.degree());
  }
}

TEST(PolyArith, GcdIsMonicCommonDivisor) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const ExactPoly common = random_poly(rng, 3);
    const ExactPoly a = common * random_poly(rng, 3), b = common * random_poly(rng, 3);
    const ExactPoly g = gcd(a, b);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    if (common.degree() > 0) {
      EXPECT_TRUE((g % common.monic()).is_zero());
    }
  }
}

TEST(PolyArith, SquareFreeFactorsReassemble) {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    const ExactPoly f1 = random_poly(rng, 2), f2 = random_poly(rng, 2), f3 = random_poly(rng, 1);
    const ExactPoly p = f1 * f2 * f2 * f3 * f3 * f3;
    const std::vector<ExactPoly> factors = square_free_factors(p);
    ExactPoly back = ExactPoly::constant(1);
    for (std::size_t k = 0; k < factors.size(); ++k)
      for (std::size_t r = 0; r <= k; ++r) back = back * factors[k];
    EXPECT_EQ(back, p.monic());
    for (const auto& f : factors)
      if (f.degree() > 0) {
        EXPECT_EQ(gcd(f, f.derivative()).degree(), 0);
      }
  }
}
