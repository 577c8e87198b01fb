#include <gtest/gtest.h>

#include <algorithm>

#include "nonarch/error.hpp"
#include "nonarch/newton.hpp"
#include "oracles.hpp"

using namespace nonarch;
using namespace testing_support;

namespace {

const Field kP5 = Field::padic(5);

LogRadiusWindow closed(const char* a, const char* b) { return LogRadiusWindow::closed(Q(a), Q(b)); }

}  // namespace

TEST(Tropicalize, Examples) {
  const auto f = poly(kP5, {{0, Q("1")}, {1, Q("5")}});
  EXPECT_EQ(tropicalize(f, Rational(0)), TropVal(0));
  EXPECT_EQ(tropicalize(f, Rational(-2)), TropVal(-1));
  EXPECT_TRUE(tropicalize(LaurentSeries(kP5), Rational(0)).is_infinite());
}

TEST(Tropicalize, TailMustStayAbove) {
  const auto f = poly(kP5, {{0, Q("1")}}).with_tail(TailCertificate{0, 0, closed("0", "1"), TropVal(0), true});
  EXPECT_THROW(tropicalize(f, Rational(0)), Error);
  const auto g = poly(kP5, {{0, Q("1")}}).with_tail(TailCertificate{0, 0, closed("0", "1"), TropVal(1), true});
  EXPECT_EQ(tropicalize(g, Rational(0)), TropVal(0));
  try {
    tropicalize(g, Rational(2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientPrecision);
  }
}

TEST(NewtonPolygon, QuadraticWithRootsFiveAndOne) {
  const auto f = poly(kP5, {{0, Q("5")}, {1, Q("-6")}, {2, Q("1")}});
  const auto np = newton_polygon(f);
  ASSERT_EQ(np.vertices.size(), 3u);
  EXPECT_EQ(np.vertices[0], (HullPoint{0, Q("1")}));
  EXPECT_EQ(np.vertices[1], (HullPoint{1, Q("0")}));
  EXPECT_EQ(np.vertices[2], (HullPoint{2, Q("0")}));
  EXPECT_EQ(np.slopes, (std::vector<Rational>{Q("-1"), Q("0")}));
}

TEST(NewtonPolygon, MonomialAndCollinear) {
  const auto m = newton_polygon(poly(kP5, {{3, Q("7")}}));
  EXPECT_EQ(m.vertices.size(), 1u);
  EXPECT_TRUE(m.slopes.empty());
  const auto c = newton_polygon(poly(kP5, {{0, Q("1")}, {1, Q("1")}, {2, Q("1")}}));
  ASSERT_EQ(c.vertices.size(), 2u);
  EXPECT_EQ(c.vertices[1].exponent, 2);
  EXPECT_EQ(c.slopes, std::vector<Rational>{Q("0")});
  EXPECT_EQ(c.segment_indices(0), (std::vector<long>{0, 1, 2}));
  EXPECT_THROW(newton_polygon(LaurentSeries(kP5)), Error);
}

TEST(Dominance, Examples) {
  const auto T = poly(kP5, {{1, Q("1")}});
  const auto cert = std::get<DominanceCertificate>(dominant_monomial(T, closed("-3", "2")));
  EXPECT_EQ(cert.j, 1);
  EXPECT_TRUE(cert.gap.is_infinite());

  const auto one_plus_T = poly(kP5, {{0, Q("1")}, {1, Q("1")}});
  const auto tie = std::get<TieWitness>(dominant_monomial(one_plus_T, LogRadiusWindow::point(Rational(0))));
  EXPECT_EQ(tie.w, Rational(0));
  EXPECT_EQ(tie.indices, (std::set<long>{0, 1}));

  const auto f = poly(kP5, {{0, Q("1")}, {1, Q("5")}, {2, Q("25")}});
  const auto t2 = std::get<TieWitness>(dominant_monomial(f, closed("-1", "0")));
  EXPECT_EQ(t2.w, Rational(-1));
  EXPECT_EQ(t2.indices, (std::set<long>{0, 1, 2}));
  const auto c2 = std::get<DominanceCertificate>(
      dominant_monomial(f, LogRadiusWindow(Rational(-1), true, Rational(0), false)));
  EXPECT_EQ(c2.j, 0);
  EXPECT_EQ(c2.gap, TropVal(1));
  EXPECT_FALSE(c2.uniform);
}

TEST(Dominance, NoDominanceCarriesInteriorBreakpoint) {
  const auto f = poly(kP5, {{0, Q("1")}, {1, Q("1")}});
  const auto nd = std::get<NoDominance>(dominant_monomial(f, closed("-1", "1")));
  EXPECT_EQ(nd.left_index, 1);
  EXPECT_EQ(nd.right_index, 0);
  EXPECT_EQ(nd.witness.w, Rational(0));
}

TEST(Dominance, InfiniteEndsUseLimitMinimizers) {
  const auto f = poly(kP5, {{-2, Q("1")}, {0, Q("1")}});
  EXPECT_EQ(std::get<DominanceCertificate>(dominant_monomial(f, LogRadiusWindow::from(Rational(1)))).j, -2);
  EXPECT_EQ(std::get<DominanceCertificate>(dominant_monomial(f, LogRadiusWindow::upto(Rational(-1)))).j, 0);
  EXPECT_TRUE(std::holds_alternative<NoDominance>(dominant_monomial(f, LogRadiusWindow::everything())));
}

TEST(Dominance, OracleEquivalence) {
  Rng rng(31);
  for (int n = 0; n < 1000; ++n) {
    const auto f = random_padic_series(rng, kP5, -6, 6, -5, 5, 6);
    const auto W = random_window(rng);
    const auto pts = points_of(f);
    const auto brute = brute_dominance(pts, W);
    const auto result = dominant_monomial(f, W);
    if (const auto* c = std::get_if<DominanceCertificate>(&result)) {
      ASSERT_TRUE(brute.j) << f.str() << " on " << W.str();
      EXPECT_EQ(*brute.j, c->j);
      if (c->uniform && pts.size() > 1) EXPECT_LE(c->gap, TropVal(brute.min_gap));
    } else {
      EXPECT_FALSE(brute.j) << f.str() << " on " << W.str();
      const TieWitness& t = std::holds_alternative<TieWitness>(result) ? std::get<TieWitness>(result)
                                                                       : std::get<NoDominance>(result).witness;
      EXPECT_TRUE(in_closure(W, t.w));
      EXPECT_GE(t.indices.size(), 2u);
      EXPECT_EQ(oracle_minimizers(pts, t.w).second, t.indices);
    }
  }
}

TEST(NewtonPolygon, HullSoundness) {
  Rng rng(32);
  for (int n = 0; n < 300; ++n) {
    const auto f = random_padic_series(rng, kP5, -6, 6, -5, 5, 7);
    const auto np = newton_polygon(f);
    for (std::size_t k = 1; k < np.slopes.size(); ++k) EXPECT_LT(np.slopes[k - 1], np.slopes[k]);
    for (const auto& p : np.points) {
      for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k];
        const auto& b = np.vertices[k + 1];
        if (p.exponent < a.exponent || p.exponent > b.exponent) continue;
        EXPECT_GE(p.value, a.value + np.slopes[k] * Rational(p.exponent - a.exponent));
      }
    }
    // Rebuild from shuffled terms: identical hull.
    auto terms = points_of(f);
    std::shuffle(terms.begin(), terms.end(), rng.engine());
    std::vector<std::pair<long, Rational>> raw;
    for (const auto& [e, c] : f.terms()) raw.emplace_back(e, c.rational());
    std::shuffle(raw.begin(), raw.end(), rng.engine());
    EXPECT_EQ(newton_polygon(poly(kP5, raw)).vertices, np.vertices);
  }
}

TEST(NewtonPolygon, RootSlopeLaw) {
  Rng rng(33);
  for (int n = 0; n < 200; ++n) {
    LaurentSeries f = poly(kP5, {{0, Q("1")}});
    std::multiset<Rational> expected;
    const long factors = rng.uniform(1, 6);
    for (long k = 0; k < factors; ++k) {
      const long v = rng.uniform(-3, 3);
      const Rational c = rng.with_valuation(5, v);
      f = f * poly(kP5, {{0, -c}, {1, Q("1")}});
      expected.insert(Rational(-v));
    }
    const auto np = newton_polygon(f);
    std::multiset<Rational> slopes;
    for (std::size_t k = 0; k < np.slopes.size(); ++k) {
      for (long m = np.vertices[k].exponent; m < np.vertices[k + 1].exponent; ++m) slopes.insert(np.slopes[k]);
    }
    EXPECT_EQ(slopes, expected);
  }
}

TEST(Profile, Examples) {
  const auto f = poly(kP5, {{0, Q("1")}, {1, Q("5")}, {2, Q("25")}});
  const auto pieces = minimizer_profile(f, closed("-3", "1"));
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0].window, LogRadiusWindow(Rational(-3), false, Rational(-1), true));
  EXPECT_EQ(pieces[0].index, 2);
  EXPECT_EQ(pieces[1].window, LogRadiusWindow::point(Rational(-1)));
  EXPECT_FALSE(pieces[1].index);
  EXPECT_EQ(pieces[1].tie_indices, (std::set<long>{0, 1, 2}));
  EXPECT_EQ(pieces[2].window, LogRadiusWindow(Rational(-1), true, Rational(1), false));
  EXPECT_EQ(pieces[2].index, 0);

  const auto mono = minimizer_profile(poly(kP5, {{2, Q("3")}}), closed("-1", "1"));
  ASSERT_EQ(mono.size(), 1u);
  EXPECT_EQ(mono[0].index, 2);

  const auto g = minimizer_profile(poly(kP5, {{0, Q("1")}, {1, Q("1")}}), closed("-1", "1"));
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].index, 1);
  EXPECT_EQ(g[1].window, LogRadiusWindow::point(Rational(0)));
  EXPECT_EQ(g[2].index, 0);
}

TEST(Profile, MonotoneAndMatchesHull) {
  Rng rng(34);
  for (int n = 0; n < 1000; ++n) {
    const auto f = random_padic_series(rng, kP5, -6, 6, -5, 5, 6);
    const auto W = random_window(rng);
    const auto pieces = minimizer_profile(f, W);
    const auto np = newton_polygon(f);
    std::set<Rational> negated;
    for (const auto& s : np.slopes) {
      if (W.contains(-s)) negated.insert(-s);
    }
    std::set<Rational> ties;
    std::optional<long> last;
    std::size_t singles = 0;
    const auto pts = points_of(f);
    for (const auto& piece : pieces) {
      if (piece.index) {
        ++singles;
        if (last) EXPECT_LE(*piece.index, *last);
        last = piece.index;
        // Spot-check the claimed minimizer inside the piece.
        for (const auto& x : sample_points(pts, piece.window, 5)) {
          EXPECT_EQ(oracle_minimizers(pts, x).second, std::set<long>{*piece.index});
        }
      } else {
        ties.insert(*piece.window.lo());
        EXPECT_EQ(oracle_minimizers(pts, *piece.window.lo()).second, piece.tie_indices);
      }
    }
    EXPECT_LE(singles, f.size());
    EXPECT_EQ(ties, negated) << f.str() << " on " << W.str();
  }
}

TEST(Residues, Examples) {
  const auto a = residue_leading_part(poly(kP5, {{0, Q("1")}, {1, Q("1")}}), Rational(0));
  EXPECT_EQ(a.indices, (std::vector<long>{0, 1}));
  EXPECT_EQ(a.residues, (std::vector<Rational>{Q("1"), Q("1")}));
  EXPECT_FALSE(a.is_unit());
  const auto b = residue_leading_part(poly(kP5, {{0, Q("2")}, {1, Q("5")}}), Rational(0));
  EXPECT_EQ(b.indices, std::vector<long>{0});
  EXPECT_EQ(b.residues, std::vector<Rational>{Q("2")});
  EXPECT_TRUE(b.is_unit());
  const auto c = residue_leading_part(poly(kP5, {{0, Q("5")}, {1, Q("5")}}), Rational(0));
  EXPECT_EQ(c.residues, (std::vector<Rational>{Q("1"), Q("1")}));
  EXPECT_THROW(residue_leading_part(poly(kP5, {{0, Q("1")}}), Q("1/2")), Error);
}

TEST(Residues, UnitAtRadiusMatchesDominanceAtPoint) {
  Rng rng(35);
  for (int n = 0; n < 300; ++n) {
    const auto f = random_padic_series(rng, kP5, -4, 4, -3, 3, 5);
    const Rational w(rng.uniform(-3, 3));
    const bool unit = std::holds_alternative<DominanceCertificate>(dominant_monomial(f, LogRadiusWindow::point(w)));
    EXPECT_EQ(residue_leading_part(f, w).is_unit(), unit);
  }
}
