#include "trip/substitution.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "trip/e23e.hpp"
#include "test_util.hpp"

namespace trip {
namespace {

using testutil::TT;

Word ones(long n) { return Word(static_cast<size_t>(n), '1'); }

TEST(Substitution, BranchImagesOfTheBaseTriple) {
  auto e3 = TT("(e,e,e)");
  Substitution s0 = trip_substitution(0, e3);
  EXPECT_EQ(s0.image(1), "2");
  EXPECT_EQ(s0.image(2), "3");
  EXPECT_EQ(s0.image(3), "13");

  Substitution s1 = trip_substitution(1, e3);
  EXPECT_EQ(s1.image(1), "1");
  EXPECT_EQ(s1.image(2), "2");
  EXPECT_EQ(s1.image(3), "13");

  Substitution s1v = trip_substitution(1, e3, Variant::Variant31);
  EXPECT_EQ(s1v.image(1), "1");
  EXPECT_EQ(s1v.image(2), "2");
  EXPECT_EQ(s1v.image(3), "31");

  // Branch 0 is unaffected by the variant.
  EXPECT_EQ(trip_substitution(0, e3, Variant::Variant31), s0);
}

TEST(Substitution, BranchImagesConjugateWorkedExample) {
  // t = ((12),(13),(23)): images computed by hand from sigma o B_i o tau_i.
  auto t = TT("(12,13,23)");
  Substitution s0 = trip_substitution(0, t);
  EXPECT_EQ(s0.image(1), "23");
  EXPECT_EQ(s0.image(2), "3");
  EXPECT_EQ(s0.image(3), "1");

  Substitution s1 = trip_substitution(1, t);
  EXPECT_EQ(s1.image(1), "2");
  EXPECT_EQ(s1.image(2), "23");
  EXPECT_EQ(s1.image(3), "1");

  Substitution s1v = trip_substitution(1, t, Variant::Variant31);
  EXPECT_EQ(s1v.image(1), "2");
  EXPECT_EQ(s1v.image(2), "32");
  EXPECT_EQ(s1v.image(3), "1");
}

TEST(Substitution, ApplyAndCompose) {
  auto e3 = TT("(e,e,e)");
  Substitution s0 = trip_substitution(0, e3);
  Substitution s1 = trip_substitution(1, e3);
  EXPECT_EQ(s0.apply("123"), "2313");
  EXPECT_EQ(s0.apply(""), "");

  Substitution c = compose(s1, s0);  // s0 first, then s1
  EXPECT_EQ(c.image(1), "2");
  EXPECT_EQ(c.image(2), "13");
  EXPECT_EQ(c.image(3), "113");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(1, 3), len(0, 20);
  for (int trial = 0; trial < 50; ++trial) {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<char>('0' + letter(rng)));
    EXPECT_EQ(c.apply(w), s1.apply(s0.apply(w)));
  }
}

TEST(Substitution, AbelianizationMatchesBranchMatrices) {
  for (const auto& t : TripTriple::all()) {
    for (int i = 0; i < 2; ++i) {
      for (Variant v : {Variant::Canonical13, Variant::Variant31}) {
        ASSERT_EQ(abelianize_substitution(trip_substitution(i, t, v)), farey_matrix(i, t))
            << t.name() << " branch " << i;
      }
    }
  }
}

TEST(Substitution, AbelianizationIsAHomomorphism) {
  std::mt19937_64 rng(11);
  const auto& triples = TripTriple::all();
  std::uniform_int_distribution<size_t> pick(0, triples.size() - 1);
  std::uniform_int_distribution<int> branch(0, 1), letter(1, 3), len(0, 30);
  for (int trial = 0; trial < 1000; ++trial) {
    Variant v = trial % 2 == 0 ? Variant::Canonical13 : Variant::Variant31;
    Substitution s = trip_substitution(branch(rng), triples[pick(rng)], v);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<char>('0' + letter(rng)));
    ASSERT_EQ(abelianize_word(s.apply(w)), abelianize_substitution(s) * abelianize_word(w));
  }
  for (int trial = 0; trial < 200; ++trial) {
    Substitution a = trip_substitution(branch(rng), triples[pick(rng)]);
    Substitution b = trip_substitution(branch(rng), triples[pick(rng)]);
    ASSERT_EQ(abelianize_substitution(compose(a, b)),
              abelianize_substitution(a) * abelianize_substitution(b));
  }
}

TEST(Substitution, CanonicalFromMatrixRoundTrip) {
  Mat3 m;
  int fill[3][3] = {{0, 2, 1}, {1, 0, 3}, {2, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = fill[r][c];
  Substitution s = canonical_substitution_from_matrix(m);
  EXPECT_EQ(s.image(1), "233");
  EXPECT_EQ(s.image(2), "113");
  EXPECT_EQ(s.image(3), "1222");
  EXPECT_EQ(abelianize_substitution(s), m);
}

TEST(GaussSubstitution, ClosedFormsAndAcceleration) {
  auto eee = TT("(e,e,e)");
  auto e13e = TT("(e,13,e)");
  auto e23e = TT("(e,23,e)");
  for (long k = 0; k <= 5; ++k) {
    Substitution g = gauss_substitution(k, eee);
    EXPECT_EQ(g.image(1), "2");
    EXPECT_EQ(g.image(2), ones(k) + "3");
    EXPECT_EQ(g.image(3), ones(k + 1) + "3");

    Substitution h = gauss_substitution(k, e13e);
    EXPECT_EQ(h.image(1), ones(k + 1) + "3");
    EXPECT_EQ(h.image(2), ones(k) + "3");
    EXPECT_EQ(h.image(3), "2");

    Substitution f = gauss_substitution(k, e23e);
    EXPECT_EQ(f.image(1), "2");
    EXPECT_EQ(f.image(2), ones(k + 1) + "3");
    EXPECT_EQ(f.image(3), ones(k) + "3");
  }
  // G_k = S_1^k o S_0 for arbitrary triples and both variants.
  std::mt19937_64 rng(13);
  const auto& triples = TripTriple::all();
  std::uniform_int_distribution<size_t> pick(0, triples.size() - 1);
  std::uniform_int_distribution<long> kd(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const TripTriple& t = triples[pick(rng)];
    Variant v = trial % 2 == 0 ? Variant::Canonical13 : Variant::Variant31;
    long k = kd(rng);
    Substitution acc = trip_substitution(0, t, v);
    for (long i = 0; i < k; ++i) acc = compose(trip_substitution(1, t, v), acc);
    ASSERT_EQ(gauss_substitution(k, t, v), acc) << t.name() << " k=" << k;
  }
}

TEST(CodingSeq, ConstructionFormattingAndPairing) {
  CodingSeq f = CodingSeq::farey("0110");
  EXPECT_EQ(f.kind, CodingSeq::Kind::Farey);
  EXPECT_EQ(f.bits, (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.to_string(), "0110");

  CodingSeq g = CodingSeq::gauss({0, 2, 1});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.to_string(), "0,2,1");

  CodingSeq d = CodingSeq::double_gauss({{1, 0}, {2, 2}});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.to_string(), "(1,0);(2,2)");

  auto [paired, dropped] = CodingSeq::pair_up(g);
  EXPECT_TRUE(dropped);
  EXPECT_EQ(paired.pairs, (std::vector<std::pair<long, long>>{{0, 2}}));
  auto [paired2, dropped2] = CodingSeq::pair_up(CodingSeq::gauss({3, 1, 0, 0}));
  EXPECT_FALSE(dropped2);
  EXPECT_EQ(paired2.pairs, (std::vector<std::pair<long, long>>{{3, 1}, {0, 0}}));
}

TEST(CodingSubstitutions, FareyAndGaussAgree) {
  auto e3 = TT("(e,e,e)");
  auto subs_f = coding_substitutions(CodingSeq::farey("0110"), e3);
  ASSERT_EQ(subs_f.size(), 4u);
  EXPECT_EQ(subs_f[0], trip_substitution(0, e3));
  EXPECT_EQ(subs_f[1], trip_substitution(1, e3));
  EXPECT_EQ(subs_f[3], trip_substitution(0, e3));

  auto subs_g = coding_substitutions(CodingSeq::gauss({0, 2}), e3);
  ASSERT_EQ(subs_g.size(), 2u);
  EXPECT_EQ(subs_g[0], gauss_substitution(0, e3));
  EXPECT_EQ(subs_g[1], gauss_substitution(2, e3));

  // The Gauss digits [0,2] expand to bits 0 110; the composed products match.
  auto prod = [](const std::vector<Substitution>& subs) {
    Substitution acc = subs.front();
    for (size_t i = 1; i < subs.size(); ++i) acc = compose(acc, subs[i]);
    return acc;
  };
  EXPECT_EQ(prod(subs_g), prod(coding_substitutions(CodingSeq::farey("0110"), e3)));
}

TEST(CodingSubstitutions, DoubleGaussMatchesClosedForm) {
  const TripTriple& t = e23e_triple();
  for (long j = 0; j < 3; ++j) {
    for (long k = 0; k < 3; ++k) {
      auto subs = coding_substitutions(CodingSeq::double_gauss({{j, k}}), t);
      ASSERT_EQ(subs.size(), 1u);
      EXPECT_EQ(subs[0].images, e23e_double_images(j, k)) << j << "," << k;
      EXPECT_EQ(subs[0], compose(gauss_substitution(j, t), gauss_substitution(k, t)));
    }
  }
}

TEST(CodingSubstitutions, DoubleGaussCacheSurvivesGrowth) {
  // Regression: a long run of distinct pairs forces the internal cache to
  // rehash repeatedly; every returned substitution must stay intact.
  const TripTriple& t = e23e_triple();
  std::vector<std::pair<long, long>> pairs;
  for (long j = 0; j <= 5; ++j)
    for (long k = 0; k <= 5; ++k)
      if (j != k) pairs.emplace_back(j, k);
  std::shuffle(pairs.begin(), pairs.end(), std::mt19937_64(2024));
  pairs.insert(pairs.end(), {{4, 1}, {1, 4}, {0, 5}});
  auto subs = coding_substitutions(CodingSeq::double_gauss(pairs), t);
  ASSERT_EQ(subs.size(), pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [j, k] = pairs[i];
    ASSERT_FALSE(subs[i].image(1).empty());
    ASSERT_EQ(subs[i], compose(gauss_substitution(j, t), gauss_substitution(k, t)))
        << "pair (" << j << "," << k << ") at index " << i;
  }
}

TEST(ExpandWord, MatchesComposedProduct) {
  auto e3 = TT("(e,e,e)");
  CodingSeq seq = CodingSeq::farey("0110");
  auto subs = coding_substitutions(seq, e3);
  Substitution acc = subs[0];
  for (size_t i = 1; i < subs.size(); ++i) acc = compose(acc, subs[i]);
  for (char seed : {'1', '2', '3'}) {
    EXPECT_EQ(expand_word(seq, e3, 4, seed), acc.apply(std::string(1, seed)));
  }
  EXPECT_EQ(expand_word(seq, e3, 0), "1");
  EXPECT_EQ(expand_word(CodingSeq::gauss({0, 2}), e3, 2), expand_word(seq, e3, 4));
}

TEST(Primitivity, GaussProductsOfTheBaseTripleTurnPositiveFast) {
  std::mt19937_64 rng(17);
  auto e3 = TT("(e,e,e)");
  for (int trial = 0; trial < 50; ++trial) {
    auto ks = random_gauss_ks(rng, 6);
    auto res = check_primitive(CodingSeq::gauss(ks), e3, 6);
    ASSERT_TRUE(res.primitive());
    EXPECT_LE(*res.positive_at, 3);
    EXPECT_LE(res.depth_checked, 6);
  }
}

TEST(Primitivity, DegenerateDigitsNeverTurnPositive) {
  auto t = TT("(e,13,e)");
  std::vector<long> zeros(40, 0);
  auto res = check_primitive(CodingSeq::gauss(zeros), t, 40);
  EXPECT_FALSE(res.primitive());
  EXPECT_EQ(res.depth_checked, 40);
}

TEST(Frequency, ReportInvariantsAndConvergence) {
  std::mt19937_64 rng(21);
  auto e3 = TT("(e,e,e)");
  auto ks = random_gauss_ks(rng, 400, 4);
  CodingSeq seq = CodingSeq::gauss(ks);

  FrequencyReport small = estimate_frequency(seq, e3, Int(10000));
  FrequencyReport large = estimate_frequency(seq, e3, Int(10000000));
  for (const FrequencyReport* r : {&small, &large}) {
    EXPECT_FALSE(r->exhausted);
    EXPECT_GE(r->word_len, Int(10000));
    EXPECT_TRUE(r->positive);
    EXPECT_EQ(r->freq[0] + r->freq[1] + r->freq[2], Rat(1));
    for (int i = 0; i < 3; ++i) {
      Rat lo = r->subtriangle[0][i], hi = r->subtriangle[0][i];
      for (int v = 1; v < 3; ++v) {
        lo = std::min(lo, r->subtriangle[v][i]);
        hi = std::max(hi, r->subtriangle[v][i]);
      }
      EXPECT_LE(lo, r->freq[i]);
      EXPECT_LE(r->freq[i], hi);
    }
  }
  EXPECT_GT(large.depth_used, small.depth_used);
  EXPECT_LE(large.diameter, small.diameter);

  Rat err(0);
  for (int i = 0; i < 3; ++i) {
    Rat d = small.freq[i] - large.freq[i];
    if (d < 0) d = -d;
    err = std::max(err, d);
  }
  // Both estimates lie in the depth_used(small) subtriangle.
  EXPECT_LE(err, small.diameter);
  EXPECT_LE(err * Rat(small.word_len), Rat(16));
}

TEST(RandomCodings, DeterministicAndCapped) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(random_gauss_ks(a, 64), random_gauss_ks(b, 64));
  std::mt19937_64 c(5);
  auto ks = random_gauss_ks(c, 200, 3);
  for (long k : ks) {
    EXPECT_GE(k, 0);
    EXPECT_LE(k, 3);
  }
  std::mt19937_64 d(9);
  for (int bit : random_farey_bits(d, 200)) EXPECT_TRUE(bit == 0 || bit == 1);
  std::mt19937_64 e(9);
  for (auto [j, k] : random_gauss_pairs(e, 100, 5)) {
    EXPECT_GE(j, 0);
    EXPECT_LE(j, 5);
    EXPECT_GE(k, 0);
    EXPECT_LE(k, 5);
  }
}

}  // namespace
}  // namespace trip
