#include <gtest/gtest.h>

#include "nonarch/error.hpp"
#include "nonarch/frobenius.hpp"
#include "nonarch/relative.hpp"
#include "nonarch/stream.hpp"
#include "support.hpp"

using namespace nonarch;
using testing_support::poly;
using testing_support::Q;
using testing_support::Rng;

namespace {

const Field kP5 = Field::padic(5);
const Field kF5 = Field::formal_laurent(ResidueKind::kPrimeField, 5, "s", 40);

Element s_pow(const Field& f, long k, long c = 1) { return Element::monomial(f, Rational(c), k); }

LaurentSeries series_of(const Field& f, std::map<long, Element> terms) { return LaurentSeries(f, terms); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(SeriesRing, DifferenceOfSquares) {
  const auto a = poly(kP5, {{0, Q("1")}, {1, Q("1")}});
  const auto b = poly(kP5, {{0, Q("1")}, {1, Q("-1")}});
  EXPECT_EQ(a * b, poly(kP5, {{0, Q("1")}, {2, Q("-1")}}));
}

TEST(SeriesRing, AdditiveInverse) {
  const auto f = poly(kP5, {{-2, Q("3/7")}, {4, Q("10")}});
  EXPECT_TRUE((f + ser_neg(f)).is_zero());
}

TEST(SeriesRing, CubeOfFive) {
  const auto a = poly(kP5, {{0, Q("1")}, {1, Q("5")}});
  const auto b = poly(kP5, {{0, Q("1")}, {1, Q("-5")}, {2, Q("25")}});
  EXPECT_EQ(a * b, poly(kP5, {{0, Q("1")}, {3, Q("125")}}));
}

TEST(SeriesRing, RandomRingLaws) {
  Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    const auto f = testing_support::random_padic_series(rng, kP5, -4, 4, -3, 3, 4);
    const auto g = testing_support::random_padic_series(rng, kP5, -4, 4, -3, 3, 4);
    const auto h = testing_support::random_padic_series(rng, kP5, -4, 4, -3, 3, 4);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
  }
}

TEST(SeriesTails, AddTakesMinimumFloor) {
  const LogRadiusWindow d = LogRadiusWindow::closed(Rational(0), Rational(1));
  const auto f = poly(kP5, {{0, Q("1")}}).with_tail(TailCertificate{0, 0, d, TropVal(3), true});
  const auto g = poly(kP5, {{1, Q("5")}}).with_tail(TailCertificate{1, 1, d, TropVal(2), true});
  const auto sum = f + g;
  ASSERT_TRUE(sum.tail());
  EXPECT_EQ(sum.tail()->floor, TropVal(2));
  EXPECT_EQ(sum.tail()->domain, d);
}

TEST(SeriesTails, MulCrossTerms) {
  const LogRadiusWindow d = LogRadiusWindow::closed(Rational(0), Rational(1));
  const auto f = poly(kP5, {{0, Q("1")}}).with_tail(TailCertificate{0, 0, d, TropVal(3), true});
  const auto g = poly(kP5, {{1, Q("5")}}).with_tail(TailCertificate{1, 1, d, TropVal(2), true});
  // min(3 + inf_d(1 + w), 2 + inf_d(0), 3 + 2) = min(4, 2, 5)
  EXPECT_EQ((f * g).tail()->floor, TropVal(2));
}

TEST(SeriesTails, DisjointDomainsRejected) {
  const auto f = poly(kP5, {{0, Q("1")}})
                     .with_tail(TailCertificate{0, 0, LogRadiusWindow::closed(Rational(0), Rational(1)), TropVal(3), true});
  const auto g = poly(kP5, {{0, Q("1")}})
                     .with_tail(TailCertificate{0, 0, LogRadiusWindow::closed(Rational(2), Rational(3)), TropVal(3), true});
  EXPECT_EQ(code_of([&] { f + g; }), ErrorCode::kEmptyDomain);
  EXPECT_EQ(code_of([&] { poly(kP5, {{0, Q("1")}}) + poly(Field::padic(3), {{0, Q("1")}}); }),
            ErrorCode::kFieldMismatch);
}

namespace {

/// Exact product coefficient at k of two FiniteBelow(0) streams.
Element product_coefficient(const StreamSeries& f, const StreamSeries& g, long k) {
  Element sum = Element::zero(f.field());
  for (long i = 0; i <= k; ++i) sum = sum + f.coefficient(i) * g.coefficient(k - i);
  return sum;
}

}  // namespace

TEST(SeriesTails, MulFloorIsSoundAgainstDeeperExpansion) {
  Rng rng(22);
  const LogRadiusWindow d = LogRadiusWindow::closed(Rational(0), Rational(2));
  for (int n = 0; n < 60; ++n) {
    const Element cf = Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(0, 2)));
    const Element rf = Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(1, 3)));
    const Element cg = Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(0, 2)));
    const Element rg = Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(1, 3)));
    const auto f = StreamSeries::geometric(cf, rf, 1, 0, d);
    const auto g = StreamSeries::geometric(cg, rg, 1, 0, d);
    const long depth = rng.uniform(1, 4);
    const LaurentSeries prod = f.deepen(depth).certified() * g.deepen(depth).certified();
    const TropVal floor = prod.tail()->floor;
    for (long k = 0; k <= 4 * depth + 8; ++k) {
      const Element truth = product_coefficient(f, g, k);
      const Element omitted = truth - prod.coefficient(k);
      if (omitted.is_zero()) continue;
      for (const Rational& w : {Rational(0), Rational(1), Rational(2), Q("1/3")}) {
        EXPECT_GE(TropVal(term_value(omitted.valuation().value(), k, w)), floor);
      }
    }
  }
}

TEST(Frobenius, PowerExamples) {
  EXPECT_EQ(pth_power(series_of(kF5, {{1, Element::one(kF5)}})), series_of(kF5, {{5, Element::one(kF5)}}));
  const auto f = series_of(kF5, {{0, Element::one(kF5)}, {1, s_pow(kF5, 1)}});
  const auto expected = series_of(kF5, {{0, Element::one(kF5)}, {5, s_pow(kF5, 5)}});
  EXPECT_EQ(pth_power(f), expected);
  EXPECT_EQ(pth_power(f), ser_pow(f, 5));
  EXPECT_TRUE(pth_power(LaurentSeries(kF5)).is_zero());
  EXPECT_EQ(code_of([] { pth_power(poly(kP5, {{0, Q("1")}})); }), ErrorCode::kUnsupportedField);
}

TEST(Frobenius, RootExamples) {
  EXPECT_EQ(pth_root(series_of(kF5, {{5, Element::one(kF5)}})), series_of(kF5, {{1, Element::one(kF5)}}));
  const auto g = series_of(kF5, {{0, Element::one(kF5)}, {5, s_pow(kF5, 5)}});
  EXPECT_EQ(pth_root(g), series_of(kF5, {{0, Element::one(kF5)}, {1, s_pow(kF5, 1)}}));
  EXPECT_EQ(code_of([] { pth_root(series_of(kF5, {{5, s_pow(kF5, 1)}})); }), ErrorCode::kNoPthRoot);
  EXPECT_EQ(code_of([] { pth_root(series_of(kF5, {{3, Element::one(kF5)}})); }), ErrorCode::kExponentNotDivisible);
}

TEST(Frobenius, RandomRoundTrip) {
  Rng rng(23);
  for (long p : {2L, 3L, 5L}) {
    const Field f = Field::formal_laurent(ResidueKind::kPrimeField, p, "s", 60);
    for (int n = 0; n < 200; ++n) {
      LaurentSeries::Terms terms;
      const long count = rng.uniform(0, 4);
      for (long k = 0; k < count; ++k) {
        std::map<long, Rational> c;
        const long parts = rng.uniform(1, 3);
        for (long t = 0; t < parts; ++t) c[rng.uniform(-3, 6)] = Rational(rng.uniform(1, p - 1));
        const Element e = Element::from_terms(f, c);
        if (!e.is_zero()) terms.insert_or_assign(rng.uniform(-5, 5), e);
      }
      const LaurentSeries x(f, terms);
      EXPECT_EQ(pth_root(pth_power(x)), x);
      EXPECT_EQ(pth_power(pth_root(pth_power(x))), pth_power(x));
    }
  }
}

TEST(PowerIdentity, GeometricInverse) {
  // f = 1/(1 + sT) = sum (-s)^n T^n, H = (1 + sT)^5, G = 1.
  const auto f = StreamSeries::geometric(Element::one(kF5), -s_pow(kF5, 1), 1, 0,
                                         LogRadiusWindow::from(Rational(0)));
  const auto one_plus = series_of(kF5, {{0, Element::one(kF5)}, {1, s_pow(kF5, 1)}});
  const auto H = ser_pow(one_plus, 5);
  const auto G = series_of(kF5, {{0, Element::one(kF5)}});
  EXPECT_EQ(verify_power_identity(f, G, H, 1, 8), Verdict::kTrue);
  // Too shallow: the remainder floor does not reach the working precision.
  EXPECT_EQ(verify_power_identity(f, G, H, 1, 2), Verdict::kUndetermined);
  const auto G_bad = series_of(kF5, {{0, Element::one(kF5)}, {2, s_pow(kF5, 3)}});
  EXPECT_EQ(verify_power_identity(f, G_bad, H, 1, 8), Verdict::kFalse);
}

TEST(PowerIdentity, Monomials) {
  const auto T = StreamSeries::from_laurent(series_of(kF5, {{1, Element::one(kF5)}}));
  const auto one = series_of(kF5, {{0, Element::one(kF5)}});
  EXPECT_EQ(verify_power_identity(T, series_of(kF5, {{5, Element::one(kF5)}}), one, 1, 4), Verdict::kTrue);
  EXPECT_EQ(verify_power_identity(T, series_of(kF5, {{4, Element::one(kF5)}}), one, 1, 4), Verdict::kFalse);
  const auto zero = StreamSeries::from_laurent(LaurentSeries(kF5));
  EXPECT_EQ(verify_power_identity(zero, LaurentSeries(kF5), one, 1, 4), Verdict::kTrue);
}

TEST(Streams, DeepenExtendsConsistently) {
  const auto f = StreamSeries::geometric(Element::one(kP5), Element::from_long(kP5, 5), -1, 2,
                                         LogRadiusWindow::upto(Q("1/2")));
  EXPECT_EQ(f.shape().kind, ShapeKind::kInfiniteBelow);
  const auto w3 = f.deepen(3);
  const auto w6 = f.deepen(6);
  for (const auto& [e, c] : w3.coefficients.terms()) EXPECT_EQ(w6.coefficients.coefficient(e), c);
  ASSERT_TRUE(w3.tail && w6.tail);
  EXPECT_LE(w3.tail->floor, w6.tail->floor);
}

TEST(Streams, FiniteBelowVanishesBelow) {
  const auto f = StreamSeries::geometric(Element::one(kP5), Element::from_long(kP5, 5), 1, -3,
                                         LogRadiusWindow::from(Rational(0)));
  EXPECT_EQ(f.shape(), SupportShape::finite_below(-3));
  for (long i = -20; i < -3; ++i) EXPECT_TRUE(f.coefficient(i).is_zero());
  EXPECT_FALSE(f.coefficient(-3).is_zero());
}

TEST(Streams, TailFloorBoundsOmittedTerms) {
  Rng rng(24);
  const auto gauss_neg = StreamSeries::gaussian(Element::from_long(kP5, 5), -1, LogRadiusWindow::upto(Rational(3)));
  const auto gauss_pos = StreamSeries::gaussian(Element::from_long(kP5, 5), 1, LogRadiusWindow::from(Rational(-3)));
  const auto geo = StreamSeries::geometric(Element::one(kP5), Element::from_long(kP5, 5), -1, 0,
                                           LogRadiusWindow::closed(Rational(-2), Q("1/2")));
  for (const StreamSeries* s : {&gauss_neg, &gauss_pos, &geo}) {
    for (long depth = 0; depth < 6; ++depth) {
      const auto w = s->deepen(depth);
      ASSERT_TRUE(w.tail);
      for (long i = -40; i <= 40; ++i) {
        if (i >= -depth && i <= depth) continue;
        const Element c = s->coefficient(i);
        if (c.is_zero()) continue;
        for (int k = 0; k < 6; ++k) {
          Rational x = rng.small_rational(-2, 0, 4);
          if (!s->natural_domain().contains(x)) continue;
          EXPECT_GE(TropVal(term_value(c.valuation().value(), i, x)), w.tail->floor) << i;
        }
      }
    }
  }
}

TEST(Streams, TimesAndPlusMatchOracles) {
  const auto g = StreamSeries::geometric(Element::one(kP5), Element::from_long(kP5, 5), 1, 0,
                                         LogRadiusWindow::from(Rational(0)));
  const auto p = poly(kP5, {{-2, Q("1")}, {0, Q("3")}});
  const auto prod = g.times(p);
  const auto sum = g.plus(p);
  for (long k = -5; k < 10; ++k) {
    EXPECT_EQ(prod.coefficient(k), g.coefficient(k + 2) + Element::from_long(kP5, 3) * g.coefficient(k));
    EXPECT_EQ(sum.coefficient(k), g.coefficient(k) + p.coefficient(k));
  }
  EXPECT_EQ(prod.shape(), SupportShape::finite_below(-2));
  EXPECT_EQ(sum.shape(), SupportShape::finite_below(-2));
}

TEST(Streams, ShiftedTailFloorIsSound) {
  Rng rng(26);
  for (int n = 0; n < 100; ++n) {
    const long j = rng.uniform(-6, 3);
    const Rational lo = rng.small_rational(0, 2, 3);
    const auto g = StreamSeries::geometric(Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(-2, 2))),
                                           Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(1, 2))),
                                           1, rng.uniform(0, 3), LogRadiusWindow::from(lo, true));
    const auto prod = g.times(poly(kP5, {{j, Q("1")}, {j + 1, Q("5")}}));
    const long depth = std::max(2L, -j) + rng.uniform(0, 4);
    const auto window = prod.deepen(depth);
    ASSERT_TRUE(window.tail);
    const auto deep = prod.deepen(depth + 40).coefficients;
    for (const auto& [k, c] : deep.terms()) {
      if (k >= -depth && k <= depth) continue;
      for (const Rational& w : std::vector<Rational>{lo, lo + 1, lo + Rational(7, 2), lo + 20}) {
        EXPECT_GE(term_value(val(c).value(), k, w), window.tail->floor);
      }
    }
  }
}

TEST(Relative, GaussMultiplicative) {
  Rng rng(25);
  for (int n = 0; n < 200; ++n) {
    const std::vector<Rational> weights = {Rational(rng.uniform(-1, 2)), rng.small_rational(-1, 1, 2)};
    auto random_poly = [&] {
      RelativePolynomial out(kP5, weights);
      const long count = rng.uniform(1, 3);
      for (long k = 0; k < count; ++k) {
        const Element c = Element::from_rational(kP5, rng.with_valuation(5, rng.uniform(-2, 2)));
        out = out + RelativePolynomial::monomial(c, {rng.uniform(0, 3), rng.uniform(0, 3)}, weights);
      }
      return out;
    };
    const auto P = random_poly();
    const auto R = random_poly();
    EXPECT_EQ(gval(P * R), gval(P) + gval(R));
  }
}

TEST(Relative, EvaluateAndRestrict) {
  const std::vector<Rational> w = {Rational(0)};
  const auto y = RelativePolynomial::monomial(Element::one(kP5), {1}, w);
  const auto b = RelativePolynomial::constant(Element::one(kP5), w) + RelativePolynomial::monomial(Element::from_long(kP5, 5), {1}, w);
  EXPECT_EQ(b.evaluate({Element::one(kP5)}), Element::from_long(kP5, 6));
  EXPECT_EQ(y.str({"y1"}), "y1");
  const RelativeSeries F(kP5, w, {{-1, y}, {0, b}});
  EXPECT_EQ(F.restricted_from(0).terms().size(), 1u);
  EXPECT_THROW(b.evaluate({}), Error);
}
