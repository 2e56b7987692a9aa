// Language analysis of the triple (e,13,e), whose attractor is degenerate in
// a hidden way: complexity follows min(2n+1, n+c1, c2) where the constants
// come from two chains of right-special factors that may or may not
// stabilize, governed by the vanishing pattern of the even/odd Gauss digits.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trip/language.hpp"
#include "trip/substitution.hpp"

namespace trip {

/// The triple (e,13,e).
const TripTriple& e13e_triple();

/// An eventually periodic Gauss coding: prefix then period repeated forever.
struct E13eInput {
  std::vector<long> prefix;
  std::vector<long> period;
};

/// Vanishing conditions on the infinite coding:
///  (I)  every even-index digit is 0,    (II) every odd-index digit is 0,
/// and their cofinite relaxations (all but finitely many).
struct E13eConditions {
  bool all_even_zero = false;
  bool all_odd_zero = false;
  bool cofinitely_even_zero = false;
  bool cofinitely_odd_zero = false;
};
E13eConditions e13e_conditions(const E13eInput& input);

/// Two-letter words of the language: {13,32}, plus 11 (k0 >= 1) or 23
/// (k0 = 0), plus 21 unless (I), plus 31 unless (II).
std::vector<Word> e13e_two_letter_words(long k0, const E13eConditions& c);

/// The two right-special chains.  v_m ends in 1 or 2 with right extensions
/// {1,3}; w_m ends in 3 with right extensions {1,2}; both are suffix-nested,
/// so each chain either stabilizes at a finite word (recording its length as
/// the limit) or grows forever (empty limit).  Long entries are tracked as
/// capped suffixes, which is sound because all comparisons are by suffix.
struct E13eChains {
  std::vector<Word> v_words, w_words;  // exact realized entries, in order, deduped
  Word v_tail, w_tail;                 // suffix (up to max_len+2 chars) of the last entry
  std::optional<long> v_limit, w_limit;
};
E13eChains e13e_chains(const std::vector<long>& ks, long max_len);

/// Closed-form profile p(1..n_max) from the chain limits:
/// p(1) = 3 and p(n+1) - p(n) = [n <= Lv] + [n <= Lw].
std::vector<long> e13e_predicted_profile(const std::optional<long>& lv,
                                         const std::optional<long>& lw, int n_max);

/// The same profile as min(2n+1, n+c1, c2) with c1 = min(Lv,Lw)+2 and
/// c2 = Lv+Lw+3 (terms dropped when a limit is infinite).
std::vector<long> e13e_min_form(const std::optional<long>& lv, const std::optional<long>& lw,
                                int n_max);

struct E13eReport {
  int n_check = 0;
  std::vector<long> profile;  // sampled p(1..n_check)
  std::optional<long> v_limit, w_limit;
  std::string verdict;  // "2n+1", "n+c", or "bounded"

  /// Constants recovered from the sampled profile alone: c once the
  /// increments settle at 1, and the plateau value once they settle at 0.
  std::optional<long> fitted_c, fitted_plateau;

  bool conditions_ok = false;  // finite chain <=> cofinite vanishing condition
  bool chains_ok = false;      // chain entries realized, right-special, nested
  bool rs_ok = false;          // all right-specials are chain-tail suffixes
  bool profile_ok = false;     // sampled == closed form == min form
  bool fit_ok = false;         // empirical constants match the chain limits
  bool two_letter_ok = false;

  std::vector<std::string> failures;

  bool ok() const {
    return conditions_ok && chains_ok && rs_ok && profile_ok && fit_ok && two_letter_ok;
  }
};

/// Samples the language of the eventually periodic coding, resolves both
/// chains, and verifies the predicted complexity trichotomy against the
/// sample up to n_check.
E13eReport analyze_e13e(const E13eInput& input, int n_check);

}  // namespace trip
