#include "trip/e23e.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace trip {
namespace {

Word ones(long n) { return Word(static_cast<size_t>(n), '1'); }
Word twos(long n) { return Word(static_cast<size_t>(n), '2'); }

TEST(E23eImages, ClosedForm) {
  for (long j = 0; j < 4; ++j) {
    for (long k = 0; k < 4; ++k) {
      auto im = e23e_double_images(j, k);
      EXPECT_EQ(im[0], ones(j + 1) + "3");
      EXPECT_EQ(im[1], twos(k + 1) + ones(j) + "3");
      EXPECT_EQ(im[2], twos(k) + ones(j) + "3");
    }
  }
}

TEST(E23eParse, MiddleTilingAndRejections) {
  EXPECT_EQ(e23e_parse_middle("21311313", 1, 0), "213");
  EXPECT_EQ(e23e_parse_middle("", 1, 0), "");
  EXPECT_EQ(e23e_parse_middle("33", 0, 0), "33");  // image of 3 is bare "3"
  EXPECT_FALSE(e23e_parse_middle("33", 1, 0).has_value());
  EXPECT_FALSE(e23e_parse_middle("2131131", 1, 0).has_value());  // truncated block
  EXPECT_FALSE(e23e_parse_middle("12", 1, 0).has_value());       // no terminator
}

TEST(E23eAntecedent, DecompositionAroundTheFirstAndLastThree) {
  auto ant = e23e_antecedent("13213113132", 1, 0);
  ASSERT_TRUE(ant.has_value());
  EXPECT_EQ(ant->a, "13");
  EXPECT_EQ(ant->v, "213");
  EXPECT_EQ(ant->b, "2");

  EXPECT_FALSE(e23e_antecedent("1212", 1, 0).has_value());  // no '3'
  // Middle fails to tile.
  EXPECT_FALSE(e23e_antecedent("1331", 1, 0).has_value());
}

TEST(E23eAlpha, LetterMapsByShape) {
  using A = std::array<int, 4>;
  // Left attachments: identity when k0 = 0; otherwise folding per shape.
  EXPECT_EQ(e23e_alpha_left("13", 1, 0), (A{0, 1, 2, 3}));
  EXPECT_EQ(e23e_alpha_left("13", 1, 2), (A{0, 1, 2, 2}));
  EXPECT_EQ(e23e_alpha_left("2213", 1, 2), (A{0, 0, 2, 3}));
  EXPECT_THROW(e23e_alpha_left("2", 1, 1), DomainError);
  EXPECT_THROW(e23e_alpha_left("113", 1, 0), DomainError);  // wrong 1-run for j0=1

  // Right attachments.
  EXPECT_EQ(e23e_alpha_right("", 1, 2), (A{0, 1, 2, 2}));
  EXPECT_EQ(e23e_alpha_right("", 0, 0), (A{0, 1, 2, 3}));
  EXPECT_EQ(e23e_alpha_right("", 2, 0), (A{0, 1, 2, 1}));
  EXPECT_EQ(e23e_alpha_right("11", 2, 0), (A{0, 1, 0, 3}));
  EXPECT_EQ(e23e_alpha_right("22", 0, 2), (A{0, 0, 2, 3}));
  EXPECT_EQ(e23e_alpha_right("22", 1, 2), (A{0, 0, 2, 1}));
  EXPECT_THROW(e23e_alpha_right("22", 1, 0), DomainError);  // k0 = 0 has no 2-run
  EXPECT_THROW(e23e_alpha_right("1", 2, 0), DomainError);   // wrong 1-run for j0=2
}

TEST(E23eAlpha, ExtensionImageDropsErasedCells) {
  ExtensionDiagram ev;
  ev.set_cell(1, 1);
  ev.set_cell(2, 3);
  ev.set_cell(3, 2);
  ExtensionDiagram out =
      e23e_extension_image(ev, {0, 1, 2, 2}, {0, 1, 0, 3});
  // (1,1) -> (1,1); (2,3) -> (2,3); (3,2) -> (2, erased) dropped.
  ExtensionDiagram want;
  want.set_cell(1, 1);
  want.set_cell(2, 3);
  EXPECT_EQ(out.cells, want.cells);

  ExtensionDiagram folded = e23e_extension_image(ev, {0, 0, 2, 3}, {0, 1, 2, 3});
  // (1,1) erased on the left; (2,3) -> (2,3); (3,2) -> (3,2).
  ExtensionDiagram want2;
  want2.set_cell(2, 3);
  want2.set_cell(3, 2);
  EXPECT_EQ(folded.cells, want2.cells);
}

// Port of the doubled-step oracle: in a sampled pair-coding language, every
// bispecial containing '3' decomposes with tabulated attachment shapes, and
// pushing the antecedent's sampled diagram through the alpha maps reproduces
// the sampled diagram exactly.
TEST(E23eAlpha, ImagePredictionsMatchSampledDiagrams) {
  std::mt19937_64 rng(11);
  const TripTriple& t = e23e_triple();
  for (int trial = 0; trial < 5; ++trial) {
    auto pairs = random_gauss_pairs(rng, 24, 5);
    SCOPED_TRACE("trial " + std::to_string(trial));
    const auto [j0, k0] = pairs[0];
    std::vector<std::pair<long, long>> tail(pairs.begin() + 1, pairs.end());
    LanguageSample L0 = expand_language_sample(CodingSeq::double_gauss(pairs), t, 40);
    LanguageSample L1 = expand_language_sample(CodingSeq::double_gauss(tail), t, 40);
    int win = L0.reliable_window(), win1 = L1.reliable_window();
    ASSERT_GE(win, 10);

    std::vector<Word> a_allowed{ones(j0) + "3", twos(k0) + ones(j0) + "3"};
    std::vector<Word> b_allowed{""};
    if (k0 == 0 && j0 >= 1) b_allowed.push_back(ones(j0));
    if (k0 >= 1) b_allowed.push_back(twos(k0));

    Substitution d{e23e_double_images(j0, k0)};
    long checked = 0;
    for (const auto& entry : enumerate_bispecial(L0, win - 2)) {
      const Word& w = entry.word;
      if (w.find('3') == Word::npos) continue;
      auto ant = e23e_antecedent(w, j0, k0);
      ASSERT_TRUE(ant.has_value()) << "w=" << w;
      ASSERT_EQ(ant->a + d.apply(ant->v) + ant->b, w);
      ASSERT_TRUE(std::count(a_allowed.begin(), a_allowed.end(), ant->a)) << "a=" << ant->a;
      ASSERT_TRUE(std::count(b_allowed.begin(), b_allowed.end(), ant->b)) << "b=" << ant->b;
      ASSERT_LE(static_cast<int>(ant->v.size()) + 2, win1) << "w=" << w;
      ASSERT_TRUE(L1.contains(ant->v)) << "v=" << ant->v;
      ExtensionDiagram pred = e23e_extension_image(extension_diagram(L1, ant->v),
                                                   e23e_alpha_left(ant->a, j0, k0),
                                                   e23e_alpha_right(ant->b, j0, k0));
      EXPECT_EQ(pred.cells, entry.diagram.cells) << "w=" << w << " v=" << ant->v;
      ++checked;
    }
    EXPECT_GT(checked, 0);

    // Soundness of the decomposition on arbitrary window-valid factors.
    long parsed = 0;
    for (int n = 1; n <= win - 2 && parsed < 300; ++n) {
      L0.factors().for_each(n, [&](std::string_view f) {
        if (parsed >= 300 || f.find('3') == std::string_view::npos) return;
        Word w(f);
        auto ant = e23e_antecedent(w, j0, k0);
        ASSERT_TRUE(ant.has_value()) << "w=" << w;
        ASSERT_EQ(ant->a + d.apply(ant->v) + ant->b, w);
        EXPECT_TRUE(L1.contains(ant->v)) << "w=" << w << " v=" << ant->v;
        ++parsed;
      });
    }
    EXPECT_GT(parsed, 100);
  }
}

TEST(E23eCheck, BoundHoldsOnRandomCodings) {
  std::mt19937_64 rng(19);
  auto pairs = random_gauss_pairs(rng, 40, 8);
  E23eReport rep = check_e23e(pairs, 60);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_TRUE(rep.bound_ok);
  EXPECT_TRUE(rep.delta_ok);
  EXPECT_EQ(rep.n_max, 60);
  ASSERT_EQ(rep.profile.size(), 60u);
  EXPECT_EQ(rep.profile[0], 3);
  for (int n = 1; n <= 60; ++n) {
    EXPECT_LE(rep.profile[static_cast<size_t>(n) - 1], 3 * n);
    if (n >= 2) {
      long inc = rep.profile[static_cast<size_t>(n) - 1] - rep.profile[static_cast<size_t>(n) - 2];
      EXPECT_GE(inc, 0);
      EXPECT_LE(inc, 3);
    }
  }
  EXPECT_GT(rep.word_len, Int(1000));

  EXPECT_THROW(check_e23e({{1, 1}, {0, 2}}, 200), WindowError);
}

}  // namespace
}  // namespace trip
