// Substitutions on the alphabet {1,2,3}: the branch substitutions attached to
// each triple of permutations, their Gauss-accelerated compositions, coding
// sequences, abelianization, primitivity checks, the incremental language
// sampler, and exact letter-frequency estimates from matrix products.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trip/algebra.hpp"
#include "trip/language.hpp"

namespace trip {

using Vec3 = std::array<Int, 3>;

// ---------------------------------------------------------------------------
// Substitutions
// ---------------------------------------------------------------------------

struct Substitution {
  std::array<Word, 3> images;  // images[c-1] = image of letter c

  const Word& image(int letter) const { return images[static_cast<size_t>(letter - 1)]; }

  /// Apply letterwise and concatenate.
  Word apply(std::string_view w) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// (outer o inner): apply inner first, then outer.
Substitution compose(const Substitution& outer, const Substitution& inner);

/// Which convention is used for the image of letter 3 under the branch-1
/// substitution: "13" (canonical) or "31".
enum class Variant { Canonical13, Variant31 };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view s);

/// Branch substitution S_i = sigma o B_i o tau_i (tau_i applied first), where
/// B_0: 1->2, 2->3, 3->13 and B_1: 1->1, 2->2, 3->13 (variant31: 3->31).
Substitution trip_substitution(int branch, const TripTriple& t, Variant v = Variant::Canonical13);

/// Accelerated substitution S_1^k o S_0 for one Gauss step with digit k.
Substitution gauss_substitution(long k, const TripTriple& t, Variant v = Variant::Canonical13);

// ---------------------------------------------------------------------------
// Abelianization
// ---------------------------------------------------------------------------

Vec3 abelianize_word(std::string_view w);

/// Column c-1 holds the letter counts of the image of c; functorial, so the
/// abelianization of a composition is the matrix product.
Mat3 abelianize_substitution(const Substitution& s);

/// The substitution sending c to 1^M(0,c-1) 2^M(1,c-1) 3^M(2,c-1); entries
/// must be nonnegative and of reasonable size.
Substitution canonical_substitution_from_matrix(const Mat3& m);

// ---------------------------------------------------------------------------
// Coding sequences
// ---------------------------------------------------------------------------

/// A finite prefix of a symbolic coding, at one of three granularities:
/// binary branch choices, Gauss digits (k = run of 1s before a 0), or pairs
/// of consecutive Gauss digits.
struct CodingSeq {
  enum class Kind { Farey, Gauss, DoubleGauss };
  Kind kind = Kind::Farey;
  std::vector<int> bits;
  std::vector<long> ks;
  std::vector<std::pair<long, long>> pairs;

  size_t size() const;
  std::string to_string() const;  // "0110" / "0,2,1" / "(1,0);(2,2)"

  static CodingSeq farey(std::string_view bits01);
  static CodingSeq farey(std::vector<int> bits);
  static CodingSeq gauss(std::vector<long> ks);
  static CodingSeq double_gauss(std::vector<std::pair<long, long>> pairs);

  /// Group a Gauss coding into consecutive pairs.  An odd trailing digit is
  /// dropped; the flag reports whether that happened.
  static std::pair<CodingSeq, bool> pair_up(const CodingSeq& gauss);
};

/// The substitution attached to each coding entry, outermost first.
std::vector<Substitution> coding_substitutions(const CodingSeq& seq, const TripTriple& t,
                                               Variant v = Variant::Canonical13);

// ---------------------------------------------------------------------------
// Primitivity
// ---------------------------------------------------------------------------

struct PrimitivityResult {
  /// Smallest n such that the product of the first n abelianization matrices
  /// is strictly positive; empty when none within the examined depth.
  std::optional<long> positive_at;
  long depth_checked = 0;

  bool primitive() const { return positive_at.has_value(); }
};

PrimitivityResult check_primitive(const CodingSeq& seq, const TripTriple& t, long horizon,
                                  Variant v = Variant::Canonical13);

// ---------------------------------------------------------------------------
// Language sampling
// ---------------------------------------------------------------------------

/// Expand the coding's substitution products over all three seed letters and
/// collect every factor up to max_factor_len, tracking per-length stability.
/// The sample's reliable window is the longest prefix of lengths that gained
/// no new factor during the final stability_margin expansion depths; a
/// too-short coding yields window 0 (flagged on the sample).
///
/// Words are never materialized beyond a small multiple of max_factor_len:
/// once a seed's expansion exceeds that, only its boundary prefix/suffix and
/// exact length are kept, and new factors are harvested from the junctions
/// between the images being concatenated (junction scans are memoized on
/// their surrounding text).
LanguageSample expand_language_sample(const CodingSeq& seq, const TripTriple& t,
                                      int max_factor_len, Variant v = Variant::Canonical13,
                                      int stability_margin = 3);

/// Expanded prefix of the coding: the image of seed under the composition of
/// the first `depth` substitutions (outermost first).  Materializes the word;
/// use only for modest depths.
Word expand_word(const CodingSeq& seq, const TripTriple& t, int depth, char seed = '1',
                 Variant v = Variant::Canonical13);

// ---------------------------------------------------------------------------
// Letter frequencies
// ---------------------------------------------------------------------------

struct FrequencyReport {
  /// Exact letter frequencies of the expanded seed-1 prefix (abelianization
  /// over length), computed from the matrix product without materializing.
  std::array<Rat, 3> freq;
  Int word_len = 0;       // length of that prefix
  long depth_used = 0;    // coding entries consumed
  bool exhausted = false; // coding ran out before reaching the target length

  /// Vertices of the nested subtriangle after depth_used steps: the
  /// normalized columns of the same matrix product.  Any point coded by this
  /// prefix lies inside it, and freq does too.
  std::array<std::array<Rat, 3>, 3> subtriangle;
  /// Max pairwise L-infinity distance between the vertices: an exact bound
  /// on the distance between freq and the coded point.
  Rat diameter;
  bool positive = false;  // matrix product strictly positive at depth_used
};

/// Consume coding entries until the expanded seed-1 prefix reaches
/// target_len letters (or the coding is exhausted).
FrequencyReport estimate_frequency(const CodingSeq& seq, const TripTriple& t,
                                   const Int& target_len, Variant v = Variant::Canonical13);

// ---------------------------------------------------------------------------
// Random codings
// ---------------------------------------------------------------------------

/// Gauss digits drawn i.i.d. geometric(1/2) (number of heads before the
/// first tail), capped.
std::vector<long> random_gauss_ks(std::mt19937_64& rng, size_t n, long cap = 8);
std::vector<int> random_farey_bits(std::mt19937_64& rng, size_t n);
std::vector<std::pair<long, long>> random_gauss_pairs(std::mt19937_64& rng, size_t n,
                                                      long cap = 8);

}  // namespace trip
