// The (e,23,e) map: doubled Gauss substitutions, the antecedent decomposition
// w = a . D(v) . b around one doubled step, the induced extension maps, and a
// sampled complexity-bound check (p(n) <= 3n with per-step increments <= 3).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trip/algebra.hpp"
#include "trip/language.hpp"
#include "trip/substitution.hpp"

namespace trip {

/// The triple (e, 23, e).
const TripTriple& e23e_triple();

/// Letter images of the doubled substitution S_j o S_k for this triple:
///   1 -> 1^{j+1} 3,   2 -> 2^{k+1} 1^j 3,   3 -> 2^k 1^j 3.
std::array<Word, 3> e23e_double_images(long j, long k);

/// Parse a concatenation of doubled-substitution image blocks back to its
/// preimage word; nullopt when the blocks do not tile exactly.
std::optional<Word> e23e_parse_middle(std::string_view mid, long j, long k);

/// Decomposition of a factor containing '3' around one doubled step:
/// a = prefix through the first '3', b = suffix after the last '3', and the
/// middle parses as D(v).
struct E23eAntecedent {
  Word a, v, b;
};

/// nullopt when w has no '3' or its middle does not parse.
std::optional<E23eAntecedent> e23e_antecedent(const Word& w, long j, long k);

/// Left/right extension-letter maps induced by the decomposition, indexed by
/// letter value 1..3 (entry 0 unused); a stored 0 means the letter is erased.
/// Throw DomainError when a / b is not one of the shapes the decomposition
/// can produce for bispecial factors.
std::array<int, 4> e23e_alpha_left(const Word& a, long j, long k);
std::array<int, 4> e23e_alpha_right(const Word& b, long j, long k);

/// Push an extension diagram through the alpha maps, dropping erased cells.
/// The result's word field is left empty.
ExtensionDiagram e23e_extension_image(const ExtensionDiagram& ev, const std::array<int, 4>& left,
                                      const std::array<int, 4>& right);

/// Complexity-bound report for one doubled-Gauss coding.
struct E23eReport {
  int n_max = 0;
  std::vector<long> profile;  ///< sampled p(1..n_max)
  Int word_len = 0;           ///< exact length of the fully expanded word (seed '1')
  bool bound_ok = false;      ///< p(n) <= 3n for 1 <= n <= n_max
  bool delta_ok = false;      ///< 0 <= p(n+1) - p(n) <= 3 throughout
  std::vector<std::string> failures;
  bool ok() const { return bound_ok && delta_ok; }
};

/// Sample the language of the doubled coding and check the 3n bound.
/// Throws WindowError when the coding is too short for n_max.
E23eReport check_e23e(const std::vector<std::pair<long, long>>& pairs, int n_max);

}  // namespace trip
