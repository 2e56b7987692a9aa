// Bispecial combinatorics of the fully symmetric triple (e,e,e): the
// tabulated low-age extension diagrams, the antecedent decomposition under a
// Gauss substitution step, the induced extension-diagram image maps, the
// chain of non-neutral bispecial factors, and the complexity certificate
// p(n) <= 3n built from all of that.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trip/language.hpp"
#include "trip/substitution.hpp"

namespace trip {

/// The triple (e,e,e).
const TripTriple& eee_triple();

// ---------------------------------------------------------------------------
// Tabulated diagrams (low age)
// ---------------------------------------------------------------------------

/// Allowed two-letter words, determined by which of the first two Gauss
/// digits vanish; equivalently the extension diagram of the empty word.
std::vector<Word> eee_allowed_two_words(long k0, long k1);
ExtensionDiagram eee_empty_diagram(long k0, long k1);

/// E(1^j) for 1 <= j <= k0 (age 0).
ExtensionDiagram eee_age0_diagram(long j, long k0, long k1);

/// E(1^{k0} 3) (age 1), determined by the signs of k0,k1,k2.
ExtensionDiagram eee_w1_plus_diagram(long k0, long k1, long k2);

/// E(1^{k0} 3 2^{k1}) for k1 >= 1 (age 1).
ExtensionDiagram eee_w1_minus_diagram(long k0, long k1, long k2);

/// E(1^{k0} 3 1^{k0}) for k0 >= 1 (age 1, always neutral).
ExtensionDiagram eee_w131_diagram(long k0, long k1, long k2);

/// Predicted diagram for any tabulated word shape under the given coding:
/// the empty word, 1^j, 2^j, 1^{k0}3, 1^{k0}32^{k1}, 1^{k0}31^{k0}.
/// Empty when w is not a tabulated shape for this coding.
std::optional<ExtensionDiagram> eee_age_table_lookup(std::string_view w,
                                                     const std::vector<long>& ks);

// ---------------------------------------------------------------------------
// Antecedents and diagram images
// ---------------------------------------------------------------------------

/// Decomposition w = a . G_{k0}(v) . b where G_{k0} is the Gauss substitution
/// of (e,e,e) with digit k0, a is a (possibly partial) image suffix ending at
/// the first terminator, and b is a trailing run of 1s.  Empty when w does
/// not have that shape.
struct EeeAntecedent {
  Word a, v, b;
};
std::optional<EeeAntecedent> eee_antecedent(std::string_view w, long k0);

/// E(a . G_{k0}(v) . b) from E(v), for the bispecial-relevant attachments
/// a in {eps, 1^{k0}3} and b in {eps, 1^{k0}}.  The word of the returned
/// diagram is left empty for the caller to fill.
ExtensionDiagram eee_extension_image(const ExtensionDiagram& ev, bool a_is_empty,
                                     bool b_is_empty, long k0);

/// Iterate antecedents with successive Gauss digits until the empty word or
/// a run of 1s remains.
struct BispecialAge {
  int age = 0;
  Word terminal;
};
BispecialAge bispecial_age(std::string_view w, const std::vector<long>& ks);

// ---------------------------------------------------------------------------
// The bispecial chain
// ---------------------------------------------------------------------------

/// One generation of the chain: the twin pair w_m^+ (m-value 0 or +1) and
/// w_m^- (opposite m-value), possibly collapsed to a single word.  The flags
/// record which prefix/suffix was attached when pulling the previous
/// generation through the Gauss substitution, so that
///   counts(w) = L(G_{k0}) * counts(v) + A*(k0,0,1)^T + B*(k0,0,0)^T.
struct ChainEntry {
  Word w_plus, w_minus;
  ExtensionDiagram diag_plus, diag_minus;
  bool a_is_13 = false;        // attached prefix was 1^{k0}3 rather than eps
  bool b_plus_is_1k0 = false;  // attached suffix of w_plus was 1^{k0}
  bool b_minus_is_1k0 = false;

  bool single() const { return w_plus == w_minus; }
  int m_plus() const { return bilateral_multiplicity(diag_plus); }
  int m_minus() const { return bilateral_multiplicity(diag_minus); }
};

/// Generations 0,1,2,... of the chain for this Gauss coding, stopping after
/// the first generation whose w^+ exceeds n_max (kept as the witness that no
/// later non-neutral bispecial fits below n_max) or when the coding runs out
/// of lookahead.
std::vector<ChainEntry> eee_build_chain(const std::vector<long>& ks, long n_max);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

/// Everything checked by certify_eee; ok() only when all five hold.
struct EeeCertificate {
  int n_max = 0;
  std::vector<long> profile;  // p(0..n_max)
  long chain_entries = 0;
  long bispecials_checked = 0;

  bool bounds_ok = false;        // 2n+1 <= p(n) <= 3n and increments in {2,3}
  bool coverage_ok = false;      // every non-neutral bispecial is a chain word
  bool m_values_ok = false;      // chain m-values/diagrams match the sample
  bool interleaving_ok = false;  // |w_m^+| <= |w_m^-| < |w_{m+1}^+|
  bool parity_ok = false;        // attached prefix alternates eps/1^{k0}3

  std::vector<std::string> failures;

  bool ok() const {
    return bounds_ok && coverage_ok && m_values_ok && interleaving_ok && parity_ok;
  }
};

/// Samples the language of the coding, builds the chain, and verifies the
/// five certificate checks up to n_max.  Throws WindowError when the coding
/// is too short to certify that far.
EeeCertificate certify_eee(const std::vector<long>& ks, int n_max);

}  // namespace trip
