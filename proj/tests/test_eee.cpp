#include "trip/eee.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace trip {
namespace {

ExtensionDiagram diag_of(std::initializer_list<const char*> cells) {
  ExtensionDiagram d;
  for (const char* s : cells) d.set_cell(s[0] - '0', s[1] - '0');
  return d;
}

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Word ones(long n) { return Word(static_cast<size_t>(n), '1'); }
Word twos(long n) { return Word(static_cast<size_t>(n), '2'); }

TEST(EeeTables, AllowedTwoLetterWords) {
  EXPECT_EQ(sorted(eee_allowed_two_words(0, 0)),
            (std::vector<Word>{"13", "21", "31", "32", "33"}));
  EXPECT_EQ(sorted(eee_allowed_two_words(0, 2)),
            (std::vector<Word>{"13", "21", "22", "32", "33"}));
  EXPECT_EQ(sorted(eee_allowed_two_words(1, 0)),
            (std::vector<Word>{"11", "13", "21", "31", "32"}));
  EXPECT_EQ(sorted(eee_allowed_two_words(2, 1)),
            (std::vector<Word>{"11", "13", "21", "22", "31", "32"}));

  // The diagram of the empty word carries the same cells, and m(eps) is 1
  // exactly when both leading digits are positive.
  for (long k0 : {0L, 1L, 3L}) {
    for (long k1 : {0L, 2L}) {
      ExtensionDiagram d = eee_empty_diagram(k0, k1);
      EXPECT_EQ(d.word, "");
      std::vector<Word> cells;
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          if (d.has(a, b)) cells.push_back({static_cast<char>('0' + a), static_cast<char>('0' + b)});
      EXPECT_EQ(cells, sorted(eee_allowed_two_words(k0, k1)));
      EXPECT_EQ(bilateral_multiplicity(d), k0 >= 1 && k1 >= 1 ? 1 : 0);
    }
  }
}

TEST(EeeTables, AgeZeroRunsOfOnes) {
  // j = k0, k1 = 0
  EXPECT_EQ(eee_age0_diagram(2, 2, 0).cells, diag_of({"13", "21", "31", "33"}).cells);
  // j = k0, k1 > 0
  EXPECT_EQ(eee_age0_diagram(1, 1, 2).cells, diag_of({"13", "21", "33"}).cells);
  // 1 <= j < k0
  EXPECT_EQ(eee_age0_diagram(1, 3, 1).cells, diag_of({"11", "13", "21", "31"}).cells);
  EXPECT_EQ(eee_age0_diagram(2, 3, 0).cells, diag_of({"11", "13", "21", "31"}).cells);
}

TEST(EeeTables, FirstGenerationPlus) {
  struct Case {
    int s0, s1, s2;
    std::initializer_list<const char*> cells;
  };
  const Case cases[] = {
      {0, 0, 0, {"11", "12", "13", "32"}}, {0, 0, 1, {"11", "13", "32", "33"}},
      {0, 1, 0, {"12", "13", "32"}},       {0, 1, 1, {"12", "13", "32", "33"}},
      {1, 0, 0, {"11", "12", "32"}},       {1, 0, 1, {"11", "31", "32"}},
      {1, 1, 0, {"11", "12", "32"}},       {1, 1, 1, {"11", "12", "31", "32"}},
  };
  for (const auto& c : cases) {
    for (long scale : {1L, 2L}) {
      long k0 = c.s0 * scale, k1 = c.s1 * scale, k2 = c.s2 * scale;
      ExtensionDiagram d = eee_w1_plus_diagram(k0, k1, k2);
      EXPECT_EQ(d.cells, diag_of(c.cells).cells)
          << "signs " << c.s0 << c.s1 << c.s2 << " scale " << scale;
      EXPECT_EQ(d.word, ones(k0) + "3");
    }
  }
}

TEST(EeeTables, FirstGenerationMinus) {
  for (long k0 : {0L, 2L}) {
    for (long k2 : {0L, 1L}) {
      ExtensionDiagram d = eee_w1_minus_diagram(k0, 2, k2);
      auto want = k2 == 0 ? diag_of({"11", "12", "32"}) : diag_of({"11", "32"});
      EXPECT_EQ(d.cells, want.cells) << k0 << "," << k2;
      EXPECT_EQ(d.word, ones(k0) + "3" + "22");
      EXPECT_EQ(bilateral_multiplicity(d),
                -bilateral_multiplicity(eee_w1_plus_diagram(k0, 2, k2)));
    }
  }
}

TEST(EeeTables, W131IsNeutral) {
  for (long k0 : {1L, 2L}) {
    for (long k1 : {0L, 1L}) {
      ExtensionDiagram d = eee_w131_diagram(k0, k1, 1);
      EXPECT_EQ(d.word, ones(k0) + "3" + ones(k0));
      EXPECT_TRUE(d.is_bispecial());
      EXPECT_EQ(bilateral_multiplicity(d), 0);
    }
  }
}

TEST(EeeAntecedent, WorkedExampleAndRejections) {
  auto ant = eee_antecedent("132111311131132111", 2);
  ASSERT_TRUE(ant.has_value());
  EXPECT_EQ(ant->a, "13");
  EXPECT_EQ(ant->v, "13321");
  EXPECT_EQ(ant->b, "111");
  Substitution g = gauss_substitution(2, eee_triple());
  EXPECT_EQ(ant->a + g.apply(ant->v) + ant->b, "132111311131132111");

  EXPECT_FALSE(eee_antecedent("1111", 2).has_value());  // no terminator
  EXPECT_FALSE(eee_antecedent("23", 2).has_value());    // bare 3 is no image
  EXPECT_FALSE(eee_antecedent("2111", 1).has_value());  // 1-run too long

  auto ant0 = eee_antecedent("331", 0);
  ASSERT_TRUE(ant0.has_value());
  EXPECT_EQ(ant0->a, "3");
  EXPECT_EQ(ant0->v, "2");
  EXPECT_EQ(ant0->b, "1");
}

TEST(EeeAntecedent, AgeIteration) {
  std::vector<long> ks{3, 1, 2, 0, 1, 1};
  EXPECT_EQ(bispecial_age("", ks).age, 0);
  EXPECT_EQ(bispecial_age("11", ks).age, 0);
  EXPECT_EQ(bispecial_age("11", ks).terminal, "11");
  auto a1 = bispecial_age("1113", ks);
  EXPECT_EQ(a1.age, 1);
  EXPECT_EQ(a1.terminal, "");
  // A trailing block of 2s pulls back to a run of 1s in one step.
  auto a2 = bispecial_age("111322", ks);
  EXPECT_EQ(a2.age, 1);
  EXPECT_EQ(a2.terminal, "11");
}

// Port of the diagram-image oracle: every bispecial of a sampled language is
// either a tabulated shape or decomposes as a . G_{k0}(v) . b with the
// predicted extension image matching the sampled diagram of w (computed from
// the sampled diagram of v in the shifted language).
TEST(EeeAlpha, TableAndImagePredictionsMatchSampledDiagrams) {
  std::mt19937_64 rng(11);
  const TripTriple& t = eee_triple();
  for (int trial = 0; trial < 4; ++trial) {
    auto ks = random_gauss_ks(rng, 42);
    SCOPED_TRACE("trial " + std::to_string(trial));
    const long k0 = ks[0];
    std::vector<long> tail(ks.begin() + 1, ks.end());
    LanguageSample L0 = expand_language_sample(CodingSeq::gauss(ks), t, 44);
    LanguageSample L1 = expand_language_sample(CodingSeq::gauss(tail), t, 44);
    int win = L0.reliable_window(), win1 = L1.reliable_window();
    ASSERT_GE(win, 10);

    long checked = 0;
    for (const auto& entry : enumerate_bispecial(L0, win - 2)) {
      const Word& w = entry.word;
      if (auto table = eee_age_table_lookup(w, ks)) {
        EXPECT_EQ(table->cells, entry.diagram.cells) << "tabulated w=" << w;
        continue;
      }
      auto ant = eee_antecedent(w, k0);
      ASSERT_TRUE(ant.has_value()) << "w=" << w;
      Substitution g = gauss_substitution(k0, t);
      ASSERT_EQ(ant->a + g.apply(ant->v) + ant->b, w);
      ASSERT_TRUE(ant->a.empty() || ant->a == ones(k0) + "3") << "w=" << w;
      ASSERT_TRUE(ant->b.empty() || ant->b == ones(k0)) << "w=" << w;
      if (static_cast<int>(ant->v.size()) + 2 > win1) continue;
      ExtensionDiagram ev = extension_diagram(L1, ant->v);
      ExtensionDiagram pred =
          eee_extension_image(ev, ant->a.empty(), ant->b.empty(), k0);
      EXPECT_EQ(pred.cells, entry.diagram.cells) << "w=" << w << " v=" << ant->v;
      ++checked;
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(EeeChain, InvariantsDiagramsAndCoverage) {
  std::mt19937_64 rng(29);
  const TripTriple& t = eee_triple();
  for (int trial = 0; trial < 3; ++trial) {
    auto ks = random_gauss_ks(rng, 42);
    SCOPED_TRACE("trial " + std::to_string(trial));
    auto chain = eee_build_chain(ks, 40);
    ASSERT_GE(chain.size(), 3u);

    LanguageSample L = expand_language_sample(CodingSeq::gauss(ks), t, 44);
    int win = L.reliable_window();

    for (size_t i = 0; i < chain.size(); ++i) {
      const ChainEntry& e = chain[i];
      EXPECT_GE(e.m_plus(), 0);
      EXPECT_LE(e.m_plus(), 1);
      EXPECT_EQ(e.m_minus(), -e.m_plus());
      EXPECT_LE(e.w_plus.size(), e.w_minus.size());
      if (i + 1 < chain.size()) {
        EXPECT_LT(e.w_minus.size(), chain[i + 1].w_plus.size());
      }
      if (i >= 1) {
        EXPECT_EQ(e.a_is_13, i % 2 == 1) << "generation " << i;
        EXPECT_EQ(bispecial_age(e.w_plus, ks).age, static_cast<int>(i));
      }
      for (const Word* w : {&e.w_plus, &e.w_minus}) {
        const ExtensionDiagram& d = w == &e.w_plus ? e.diag_plus : e.diag_minus;
        EXPECT_EQ(d.word, *w);
        if (static_cast<int>(w->size()) + 2 <= win) {
          EXPECT_EQ(d, extension_diagram(L, *w)) << "generation " << i;
        }
      }
    }

    // Every non-neutral bispecial within the window is a chain word.
    std::set<Word> chain_words;
    for (const auto& e : chain) {
      chain_words.insert(e.w_plus);
      chain_words.insert(e.w_minus);
    }
    for (const auto& entry : enumerate_bispecial(L, win - 2)) {
      if (entry.m != 0) {
        EXPECT_TRUE(chain_words.count(entry.word)) << "w=" << entry.word;
      }
    }
  }
}

TEST(EeeChain, LetterCountRecurrence) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    auto ks = random_gauss_ks(rng, 42);
    const long k0 = ks[0];
    std::vector<long> tail(ks.begin() + 1, ks.end());
    auto chain = eee_build_chain(ks, 200);
    auto shifted = eee_build_chain(tail, 200);
    ASSERT_GE(chain.size(), 3u);
    Mat3 M = abelianize_substitution(gauss_substitution(k0, eee_triple()));
    auto attach = [&](const Vec3& v, bool a13, bool b1k0) {
      Vec3 r = M * v;
      if (a13) {
        r[0] += k0;
        r[2] += 1;
      }
      if (b1k0) r[0] += k0;
      return r;
    };
    for (size_t m = 1; m < chain.size() && m - 1 < shifted.size(); ++m) {
      const ChainEntry& e = chain[m];
      const ChainEntry& prev = shifted[m - 1];
      for (int side = 0; side < 2; ++side) {
        const Word& w = side == 0 ? e.w_plus : e.w_minus;
        bool b_flag = side == 0 ? e.b_plus_is_1k0 : e.b_minus_is_1k0;
        Vec3 want = abelianize_word(w);
        bool found = false;
        for (const Word* v : {&prev.w_plus, &prev.w_minus}) {
          if (attach(abelianize_word(*v), e.a_is_13, b_flag) == want) found = true;
        }
        EXPECT_TRUE(found) << "generation " << m << " side " << side;
      }
    }
  }
}

TEST(EeeCertify, FixedAndRandomCodings) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    auto ks = random_gauss_ks(rng, 60);
    EeeCertificate cert = certify_eee(ks, 60);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_TRUE(cert.ok()) << (cert.failures.empty() ? "" : cert.failures.front());
    EXPECT_TRUE(cert.bounds_ok);
    EXPECT_TRUE(cert.coverage_ok);
    EXPECT_TRUE(cert.m_values_ok);
    EXPECT_TRUE(cert.interleaving_ok);
    EXPECT_TRUE(cert.parity_ok);
    EXPECT_TRUE(cert.failures.empty());
    EXPECT_GT(cert.chain_entries, 0);
    EXPECT_GT(cert.bispecials_checked, 0);
    ASSERT_EQ(cert.profile.size(), 61u);
    EXPECT_EQ(cert.profile[0], 1);
    for (int n = 1; n <= 60; ++n) {
      EXPECT_GE(cert.profile[static_cast<size_t>(n)], 2 * n + 1);
      EXPECT_LE(cert.profile[static_cast<size_t>(n)], 3 * n);
      long inc = cert.profile[static_cast<size_t>(n)] - cert.profile[static_cast<size_t>(n) - 1];
      EXPECT_TRUE(inc == 2 || inc == 3) << n;
    }
  }
  EXPECT_THROW(certify_eee({1, 0, 2}, 60), WindowError);
}

}  // namespace
}  // namespace trip
