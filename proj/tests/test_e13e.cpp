#include "trip/e13e.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace trip {
namespace {

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(E13eConditions, VanishingPatterns) {
  E13eConditions c = e13e_conditions({{}, {0}});
  EXPECT_TRUE(c.all_even_zero);
  EXPECT_TRUE(c.all_odd_zero);
  EXPECT_TRUE(c.cofinitely_even_zero);
  EXPECT_TRUE(c.cofinitely_odd_zero);

  c = e13e_conditions({{1}, {0}});
  EXPECT_FALSE(c.all_even_zero);
  EXPECT_TRUE(c.cofinitely_even_zero);
  EXPECT_TRUE(c.all_odd_zero);

  c = e13e_conditions({{}, {0, 1}});
  EXPECT_TRUE(c.all_even_zero);
  EXPECT_FALSE(c.all_odd_zero);
  EXPECT_FALSE(c.cofinitely_odd_zero);

  c = e13e_conditions({{2}, {0, 1}});
  EXPECT_FALSE(c.cofinitely_even_zero);
  EXPECT_TRUE(c.all_odd_zero);

  // An odd period mixes the parities: one nonzero digit in the period kills
  // both conditions.
  c = e13e_conditions({{}, {0, 0, 1}});
  EXPECT_FALSE(c.cofinitely_even_zero);
  EXPECT_FALSE(c.cofinitely_odd_zero);
  c = e13e_conditions({{}, {0, 0, 0}});
  EXPECT_TRUE(c.all_even_zero);
  EXPECT_TRUE(c.all_odd_zero);

  EXPECT_THROW(e13e_conditions({{1}, {}}), DomainError);
}

TEST(E13eTwoLetter, WordTable) {
  auto all_zero = e13e_conditions({{}, {0}});
  EXPECT_EQ(sorted(e13e_two_letter_words(0, all_zero)),
            (std::vector<Word>{"13", "23", "32"}));

  auto mixed = e13e_conditions({{1, 1}, {0}});
  EXPECT_EQ(sorted(e13e_two_letter_words(1, mixed)),
            (std::vector<Word>{"11", "13", "21", "31", "32"}));

  auto even_only = e13e_conditions({{}, {0, 1}});
  EXPECT_EQ(sorted(e13e_two_letter_words(0, even_only)),
            (std::vector<Word>{"13", "23", "31", "32"}));
}

std::vector<long> realize(const E13eInput& in, size_t n) {
  std::vector<long> ks = in.prefix;
  while (ks.size() < n) ks.push_back(in.period[(ks.size() - in.prefix.size()) % in.period.size()]);
  return ks;
}

TEST(E13eChains, StabilizationOnABoundedCoding) {
  auto ks = realize({{1, 1}, {0}}, 40);
  E13eChains ch = e13e_chains(ks, 64);
  ASSERT_TRUE(ch.v_limit.has_value());
  ASSERT_TRUE(ch.w_limit.has_value());
  EXPECT_EQ(*ch.v_limit, 1);
  EXPECT_EQ(*ch.w_limit, 3);
  ASSERT_FALSE(ch.v_words.empty());
  ASSERT_FALSE(ch.w_words.empty());
  for (const Word& v : ch.v_words) {
    EXPECT_TRUE(v.back() == '1' || v.back() == '2') << v;
  }
  for (const Word& w : ch.w_words) EXPECT_EQ(w.back(), '3') << w;
  auto nested = [](const std::vector<Word>& words) {
    for (size_t i = 1; i < words.size(); ++i) {
      if (words[i].size() < words[i - 1].size()) return false;
      if (words[i].substr(words[i].size() - words[i - 1].size()) != words[i - 1]) return false;
    }
    return true;
  };
  EXPECT_TRUE(nested(ch.v_words));
  EXPECT_TRUE(nested(ch.w_words));
  EXPECT_EQ(ch.v_words.back().size(), 1u);
  EXPECT_EQ(ch.w_words.back().size(), 3u);

  EXPECT_THROW(e13e_chains({1, 0, 1}, 64), DomainError);
}

TEST(E13eProfile, ClosedFormEqualsMinForm) {
  const std::optional<long> vals[] = {std::nullopt, 0L, 1L, 2L, 5L, 9L};
  for (const auto& lv : vals) {
    for (const auto& lw : vals) {
      auto direct = e13e_predicted_profile(lv, lw, 30);
      auto minform = e13e_min_form(lv, lw, 30);
      ASSERT_EQ(direct, minform) << (lv ? *lv : -1) << "," << (lw ? *lw : -1);
      ASSERT_EQ(direct.size(), 30u);
      EXPECT_EQ(direct[0], 3);
    }
  }
  auto aperiodic = e13e_predicted_profile(std::nullopt, std::nullopt, 20);
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(aperiodic[static_cast<size_t>(n) - 1], 2 * n + 1);
  auto bounded = e13e_predicted_profile(1, 3, 10);
  EXPECT_EQ(bounded, (std::vector<long>{3, 5, 6, 7, 7, 7, 7, 7, 7, 7}));
}

struct NamedCase {
  const char* label;
  E13eInput input;
  std::optional<long> lv, lw;
  const char* verdict;
  std::optional<long> fitted_c, fitted_plateau;
};

TEST(E13eAnalyze, TrichotomyOnConstructedCodings) {
  const NamedCase cases[] = {
      {"all-ones", {{}, {1}}, std::nullopt, std::nullopt, "2n+1", std::nullopt, std::nullopt},
      {"alternating", {{}, {0, 1}}, 0, std::nullopt, "n+c", 2, std::nullopt},
      {"prefixed-alternating", {{2, 1}, {0, 1}}, 2, std::nullopt, "n+c", 4, std::nullopt},
      {"tail-zero-small", {{1, 1}, {0}}, 1, 3, "bounded", std::nullopt, 7},
      {"all-zero", {{}, {0}}, 0, 0, "bounded", std::nullopt, 3},
      {"tail-zero-large", {{3, 2}, {0}}, 3, 10, "bounded", std::nullopt, 16},
      {"all-twos", {{}, {2}}, std::nullopt, std::nullopt, "2n+1", std::nullopt, std::nullopt},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.label);
    E13eReport rep = analyze_e13e(c.input, 60);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.v_limit, c.lv);
    EXPECT_EQ(rep.w_limit, c.lw);
    EXPECT_EQ(rep.verdict, c.verdict);
    EXPECT_EQ(rep.fitted_c, c.fitted_c);
    EXPECT_EQ(rep.fitted_plateau, c.fitted_plateau);
    ASSERT_EQ(rep.profile.size(), 60u);
    EXPECT_EQ(rep.profile, e13e_min_form(c.lv, c.lw, 60));
    EXPECT_EQ(rep.n_check, 60);
  }
}

TEST(E13eAnalyze, MixedAndRandomCodings) {
  E13eReport mixed = analyze_e13e({{0, 3}, {1, 0, 2}}, 60);
  EXPECT_TRUE(mixed.ok()) << (mixed.failures.empty() ? "" : mixed.failures.front());
  EXPECT_EQ(mixed.verdict, "2n+1");  // odd period with nonzero digits

  E13eReport p3 = analyze_e13e({{5}, {0, 0, 1}}, 60);
  EXPECT_TRUE(p3.ok()) << (p3.failures.empty() ? "" : p3.failures.front());
  EXPECT_EQ(p3.verdict, "2n+1");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> digit(0, 3);
  for (int trial = 0; trial < 3; ++trial) {
    E13eInput in;
    for (int i = 0; i < 6; ++i) in.prefix.push_back(digit(rng));
    for (int i = 0; i < 2; ++i) in.period.push_back(digit(rng));
    SCOPED_TRACE("random trial " + std::to_string(trial) + " coding " +
                 CodingSeq::gauss(realize(in, 10)).to_string());
    E13eReport rep = analyze_e13e(in, 60);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.profile, e13e_min_form(rep.v_limit, rep.w_limit, 60));
  }

  EXPECT_THROW(analyze_e13e({{1}, {}}, 60), DomainError);
  EXPECT_THROW(analyze_e13e({{}, {1}}, 4), DomainError);
}

}  // namespace
}  // namespace trip
