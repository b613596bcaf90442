#include <gtest/gtest.h>

#include <memory>

#include "gbell/gbell.hpp"
#include "oracles.hpp"

using namespace gbell;

namespace {

ExactPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(v);
}

ExactPoly linear(const Rational& root) { return ExactPoly({-root, Rational(1)}); }

RealRoot exact_root(const Rational& r) {
  return RealRoot::point(r, 1, std::make_shared<const IntPoly>(linear(r)));
}

/// sqrt(q) isolated as an interval of x^2 - q, q not a square.
RealRoot irrational_root(const Rational& q, bool negative) {
  RootIsolation iso = isolate_roots(ExactPoly({-q, Rational(0), Rational(1)}), make_rational(1, 4));
  return negative ? iso.roots.front() : iso.roots.back();
}

}  // namespace

TEST(Sturm, CountExamples) {
  EXPECT_EQ(sturm_count(poly({2, 4, 1}), Rational(-4), Rational(0)), 2u);
  EXPECT_EQ(sturm_count(poly({1, 0, 1}), Rational(-10), Rational(10)), 0u);
  EXPECT_EQ(sturm_count(poly({0, 0, 1}), Rational(-1), Rational(1)), 1u);
  // half-open (lo, hi]
  EXPECT_EQ(sturm_count(poly({-1, 1}), Rational(0), Rational(1)), 1u);
  EXPECT_EQ(sturm_count(poly({-1, 1}), Rational(1), Rational(2)), 0u);
  EXPECT_THROW(sturm_count(ExactPoly(), Rational(0), Rational(1)), DomainError);
}

TEST(Isolate, Examples) {
  RootIsolation q = isolate_roots(poly({2, 4, 1}), make_rational(1, 100));
  ASSERT_EQ(q.roots.size(), 2u);
  EXPECT_NEAR(q.roots[0].approx(), -3.41421356, 1e-2);
  EXPECT_NEAR(q.roots[1].approx(), -0.58578643, 1e-2);
  EXPECT_LT(q.roots[0].width(), make_rational(1, 100));

  RootIsolation sq = isolate_roots(poly({0, 0, 1}));
  ASSERT_EQ(sq.roots.size(), 1u);
  EXPECT_TRUE(sq.roots[0].is_point());
  EXPECT_EQ(sq.roots[0].lo(), 0);
  EXPECT_EQ(sq.roots[0].multiplicity(), 2u);

  RootIsolation b3 = isolate_roots(bell_poly(3));
  ASSERT_EQ(b3.roots.size(), 3u);
  EXPECT_TRUE(b3.roots[2].is_point());
  EXPECT_EQ(b3.negative_count(), 2u);
  EXPECT_FALSE(b3.roots[0].is_point());
}

TEST(Isolate, RationalRootsBecomePoints) {
  const ExactPoly p = linear(make_rational(-7, 3)) * linear(make_rational(5, 2)) * ExactPoly({Rational(-2), Rational(0), Rational(1)});
  RootIsolation iso = isolate_roots(p);
  ASSERT_EQ(iso.roots.size(), 4u);
  EXPECT_TRUE(iso.roots[0].is_point());
  EXPECT_EQ(iso.roots[0].lo(), make_rational(-7, 3));
  EXPECT_FALSE(iso.roots[1].is_point());
  EXPECT_FALSE(iso.roots[2].is_point());
  EXPECT_EQ(iso.roots[3].lo(), make_rational(5, 2));
}

TEST(Isolate, SoundnessOnRandomProducts) {
  Rng rng(31);
  for (int t = 0; t < 80; ++t) {
    ExactPoly p = ExactPoly::constant(rng.rational(1, 9));
    std::size_t expected_real = 0;
    const auto parts = rng.between(1, 4);
    for (long k = 0; k < parts; ++k) {
      const auto power = static_cast<std::size_t>(rng.between(1, 3));
      ExactPoly f;
      if (rng.below(2)) {
        f = linear(rng.rational(-20, 20, 6));
        expected_real += power;
      } else {
        // x^2 + b x + c, real or not
        f = ExactPoly({rng.rational(-20, 20, 4), rng.rational(-20, 20, 4), Rational(1)});
        const Rational disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
        if (sgn(disc) > 0) expected_real += 2 * power;
        if (sgn(disc) == 0) expected_real += 2 * power;
      }
      for (std::size_t r = 0; r < power; ++r) p = p * f;
    }
    RootIsolation iso = isolate_roots(p, make_rational(1, 64));
    const RealRootCount count = real_root_count(p);
    EXPECT_EQ(iso.distinct(), count.distinct);
    EXPECT_EQ(iso.real_with_multiplicity(), count.with_multiplicity);
    EXPECT_EQ(iso.real_with_multiplicity(), expected_real);
    EXPECT_EQ((iso.degree - iso.real_with_multiplicity()) % 2, 0u);
    const ExactPoly sf = square_free_part(p);
    for (std::size_t i = 0; i < iso.roots.size(); ++i) {
      const RealRoot& r = iso.roots[i];
      if (r.is_point()) {
        EXPECT_EQ(p(r.lo()), 0);
      } else {
        EXPECT_EQ(sturm_count(sf, r.lo(), r.hi()), 1u);
        EXPECT_LT(r.width(), make_rational(1, 64));
        EXPECT_TRUE(sgn(r.lo()) >= 0 || sgn(r.hi()) <= 0);
      }
      if (i > 0) {
        EXPECT_LE(iso.roots[i - 1].hi(), r.lo());
      }
    }
  }
}

TEST(RootCounts, Examples) {
  EXPECT_EQ(real_root_count(poly({1, 0, 1})).with_multiplicity, 0u);
  EXPECT_EQ(real_root_count(genbell(parse_phi("-2,-2"), 4)).with_multiplicity, 2u);
  EXPECT_EQ(multiplicity_at_zero(poly({2, 4, 1})), 0u);
  EXPECT_EQ(multiplicity_at_zero(genbell(parse_phi("-1"), 2)), 2u);
  EXPECT_EQ(multiplicity_at_zero(bell_poly(3)), 1u);
}

TEST(RootCounts, NonnegativePhiGivesSimpleRealZeros) {
  Rng rng(32);
  for (int t = 0; t < 25; ++t) {
    const PhiSequence phi = random_nonneg_phi(rng);
    const std::vector<ExactPoly> be = genbell_sequence(phi, 15);
    for (std::size_t n = 1; n <= 15; ++n) {
      EXPECT_EQ(real_root_count(be[n]).with_multiplicity, n);
      EXPECT_EQ(gcd(be[n], be[n].derivative()).degree(), 0);
    }
  }
}

TEST(Interlace, DefinitionExamples) {
  auto pts = [](std::initializer_list<long> v) {
    std::vector<RealRoot> out;
    for (long x : v) out.push_back(exact_root(Rational(x)));
    return out;
  };
  EXPECT_TRUE(check_interlace(pts({-3, -1}), pts({-2})).holds);
  EXPECT_TRUE(check_interlace(pts({-3, -1}), pts({-2, 0})).holds);
  EXPECT_FALSE(check_interlace(pts({-2, 0}), pts({-3, -1})).holds);
  EXPECT_TRUE(check_interlace({}, {}).holds);
  EXPECT_FALSE(check_interlace(pts({-1}), pts({-3, -2})).holds);
}

TEST(Interlace, AgreesWithBruteForceOnRandomSets) {
  Rng rng(33);
  for (int t = 0; t < 400; ++t) {
    const auto total = static_cast<std::size_t>(rng.between(0, 9));
    std::vector<Rational> values;
    while (values.size() < total) {
      const Rational v = rng.rational(-30, 30, 3);
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    std::vector<Rational> u, v;
    for (const auto& x : values) (rng.below(2) ? u : v).push_back(x);
    std::vector<RealRoot> ru, rv;
    for (const auto& x : u) ru.push_back(exact_root(x));
    for (const auto& x : v) rv.push_back(exact_root(x));
    EXPECT_EQ(check_interlace(ru, rv).holds, oracle::interlaces(u, v));
  }
}

TEST(Interlace, IntervalRootsAndSharedRoots) {
  // -sqrt(3) < -sqrt(2) < sqrt(2) < sqrt(3)
  std::vector<RealRoot> u{irrational_root(Rational(3), true), irrational_root(Rational(2), false)};
  std::vector<RealRoot> v{irrational_root(Rational(2), true), irrational_root(Rational(3), false)};
  EXPECT_TRUE(check_interlace(u, v).holds);
  EXPECT_FALSE(check_interlace(v, u).holds);

  RealRoot a = irrational_root(Rational(2), false);
  RealRoot b = isolate_roots(ExactPoly({Rational(-2), Rational(0), Rational(1)}) * linear(Rational(5))).roots[1];
  EXPECT_THROW(compare_roots(a, b), UndecidedError);
  RealRoot c = exact_root(Rational(1)), d = exact_root(Rational(1));
  EXPECT_THROW(compare_roots(c, d), UndecidedError);
}

TEST(Bounds, PositiveZeroPrediction) {
  EXPECT_EQ(positive_zero_prediction(parse_phi("-3/2")), 1u);
  EXPECT_EQ(positive_zero_prediction(parse_phi("1,2,0")), 0u);
  EXPECT_EQ(positive_zero_prediction(parse_phi("-3/2,-7/2")), 2u);
  EXPECT_EQ(sign_change_set(parse_phi("-3/2,-7/2")), (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(positive_zero_prediction(parse_phi("-1,1/2")), DomainError);
  EXPECT_THROW(positive_zero_prediction(parse_phi("1;tail=const:1")), DomainError);
}

TEST(Bounds, LeftmostZero) {
  EXPECT_EQ(leftmost_zero_bounds(parse_phi("5,0,0"), 3).alpha, 4);
  EXPECT_EQ(leftmost_zero_bounds(parse_phi("5,0,0"), 3).lower, -18);
  EXPECT_EQ(leftmost_zero_bounds(parse_phi("1,2,3"), 3).alpha, 0);
  EXPECT_EQ(leftmost_zero_bounds(parse_phi("1,2,3"), 3).lower, -14);
  for (std::size_t n = 1; n <= 8; ++n) {
    const LeftmostZeroBounds b = leftmost_zero_bounds(PhiSequence(), n);
    EXPECT_EQ(b.alpha, -1);
    EXPECT_EQ(b.lower, -4 * static_cast<long>(n) - 1);
  }
  EXPECT_THROW(leftmost_zero_bounds(parse_phi("1,-1"), 2), DomainError);
  EXPECT_THROW(leftmost_zero_bounds(parse_phi("1"), 0), DomainError);
}
