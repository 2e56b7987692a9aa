// Combinatorial equivalence of the 216 maps: relabeling (conjugating the
// language by a letter permutation), the twin involution (word reversal with
// complemented branch digits), the induced partition into 21 classes, and the
// per-class complexity verdicts.
#pragma once

#include <string>
#include <vector>

#include "trip/algebra.hpp"
#include "trip/language.hpp"
#include "trip/substitution.hpp"

namespace trip {

/// Apply a letter permutation to a word: each letter c becomes p(c).
Word relabel_word(std::string_view w, const Perm3& p);
Word reverse_word(std::string_view w);

/// Reverse every image of a substitution.
Substitution reverse_substitution(const Substitution& s);

/// Rebuild a sample with every factor relabeled / reversed.  Window, depth,
/// and provenance carry over (the provenance coding field is annotated).
LanguageSample relabel_language(const LanguageSample& L, const Perm3& p);
LanguageSample reverse_language(const LanguageSample& L);

/// The twin triple (sigma o (13), (12) o tau1, (12) o tau0): its language at
/// the complemented coding is the reversal of the original's.
TripTriple twin(const TripTriple& t);

/// Relabeled normal form: the language of (rho,tau0,tau1) relabels by rho^-1
/// to that of (e, tau0 o rho, tau1 o rho).
TripTriple e_form(const TripTriple& t);

/// All relabelings of t's language, one per letter permutation: the triples
/// (rho, a o rho^-1, b o rho^-1) where (e,a,b) = e_form(t).  Sorted; always
/// exactly six triples.
std::vector<TripTriple> conjugacy_orbit(const TripTriple& t);

/// Full equivalence class: conjugacy orbit of t united with that of twin(t).
/// Sorted; size 12, or 6 when t is twin-equivalent to itself.
std::vector<TripTriple> equivalence_class(const TripTriple& t);

/// What is known about the subword complexity of every map in a class.
enum class ClassVerdict {
  kLinearThreeN,     // certified 2n+1 <= p(n) <= 3n
  kTwoNPlusOne,      // p(n) = 2n+1
  kDegenerate,       // p(n) = n+1 for n >= some n0 (two-letter tail)
  kHiddenR2,         // eventually two-letter; p(n) = min(2n+1, n+c1, c2)
  kConjecturedThreeN,  // p(n) <= 3n observed, unproven
  kCounterexample,   // some coding exceeds every linear bound candidate c*n, c<=3
};
std::string verdict_name(ClassVerdict v);

struct TripClass {
  TripTriple representative;       // canonical listed representative
  bool starred = false;            // size-6 class (self-twinned up to relabeling)
  ClassVerdict verdict{};
  std::vector<TripTriple> members;  // sorted; 6 or 12 triples
};

/// The partition of all 216 triples into 21 classes, in the canonical listing
/// order of the representatives.  The partition is recomputed from scratch and
/// cross-checked against the hard-coded table of representatives, sizes, and
/// verdicts; any mismatch throws DomainError.
const std::vector<TripClass>& enumerate_classes();

/// The class containing t.
const TripClass& class_of(const TripTriple& t);

}  // namespace trip
