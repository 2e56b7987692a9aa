// Factor storage and the combinatorial analysis of sampled languages:
// complexity profiles, extension sets/diagrams, bispecial factors, bilateral
// multiplicity, and the first/second difference identities.
//
// A LanguageSample is a deduplicated set of factors up to a length bound,
// together with a certified "reliable window": the factor sets of lengths
// inside the window were stable over the final expansion depths, so
// extension queries there are exact.  All extension queries are restricted
// to |w| + 2 <= reliable_window and that restriction is enforced hard --
// silent window overrun is the main correctness hazard of sampling.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

namespace trip {

/// Words over the alphabet {1,2,3} are stored as digit strings "133213".
using Word = std::string;

class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// FactorSet: per-length deduplicated factor storage
// ---------------------------------------------------------------------------

/// Per-length hash sets of factors.  Short factors are keyed by packed 2-bit
/// characters (two 64-bit limbs cover lengths up to 64); longer factors fall
/// back to byte strings deduplicated through a 64-bit rolling hash with
/// byte-exact verification on hash collisions.
class FactorSet {
 public:
  explicit FactorSet(int max_len);

  FactorSet(FactorSet&&) = default;
  FactorSet& operator=(FactorSet&&) = default;
  FactorSet(const FactorSet&) = delete;
  FactorSet& operator=(const FactorSet&) = delete;

  int max_len() const { return max_len_; }

  /// Insert a factor (length must be in [1, max_len]); true if new.
  bool insert(std::string_view f);
  bool contains(std::string_view f) const;

  long count(int len) const;
  long total() const;

  /// Visit every stored factor of one length, in a deterministic order.
  void for_each(int len, const std::function<void(std::string_view)>& fn) const;

  /// Rolling 64-bit polynomial hash used by the long-factor tier; exposed so
  /// incremental window scans can maintain it in O(1) per extension.
  static constexpr std::uint64_t kHashBase = 0x100000001b3ULL;
  static std::uint64_t poly_hash(std::string_view s);

  /// Fast-path insert for a long factor whose rolling hash is already known.
  bool insert_long(std::string_view f, std::uint64_t hash);

  /// Fast-path insert for a packed short factor (len <= 64).
  struct PackedKey {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(const PackedKey&, const PackedKey&) = default;
    template <typename H>
    friend H AbslHashValue(H h, const PackedKey& k) {
      return H::combine(std::move(h), k.lo, k.hi);
    }
  };
  static PackedKey pack(std::string_view f);
  bool insert_packed(int len, PackedKey key);

 private:
  struct LongTier {
    // hash -> head index of the verification chain; entries live in `offsets`
    // (into the shared arena) and chain through `next`.
    absl::flat_hash_map<std::uint64_t, std::uint32_t> by_hash;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> next;
    std::string arena;
  };

  bool long_contains(const LongTier& t, int len, std::string_view f, std::uint64_t h) const;

  int max_len_;
  std::vector<absl::flat_hash_set<PackedKey>> packed_;  // index: len - 1, for len <= 64
  std::vector<LongTier> long_;                          // index: len - 65
};

// ---------------------------------------------------------------------------
// LanguageSample
// ---------------------------------------------------------------------------

struct Provenance {
  std::string kind;     // "coding" or "finite-word"
  std::string triple;   // "(e,13,e)" when applicable
  std::string variant;  // "canonical13" / "variant31"
  std::string coding;   // serialized coding or source-word description
};

class LanguageSample {
 public:
  LanguageSample(FactorSet factors, int reliable_window, int depth, Provenance prov);

  const FactorSet& factors() const { return factors_; }
  int reliable_window() const { return reliable_window_; }
  /// True when no window stabilized (reliable_window == 0): the coding was
  /// too short for any length to be certified.
  bool window_flagged() const { return reliable_window_ == 0; }
  int depth() const { return depth_; }
  const Provenance& provenance() const { return prov_; }

  bool contains(std::string_view f) const { return f.empty() || factors_.contains(f); }
  long count(int len) const { return len == 0 ? 1 : factors_.count(len); }

 private:
  FactorSet factors_;
  int reliable_window_;
  int depth_;
  Provenance prov_;
};

/// Language of a single finite word: every factor of length <= max_factor_len.
/// The window equals max_factor_len (the word is fully known); note that such
/// a language is generally not extendable at the word's ends, so the
/// difference identities are not expected to hold for it.
LanguageSample sample_from_word(std::string_view word, int max_factor_len);

namespace detail {

/// Insert every window of s of length <= fs.max_len() -- restricted, when a
/// boundary is given, to windows straddling it (start < boundary < end).
/// Packed keys and the rolling hash are maintained incrementally, so the scan
/// is O(number of windows).  When touched_lengths is non-null, index len is
/// set to 1 for every length that gained a new factor.
void scan_windows(FactorSet& fs, std::string_view s, std::optional<size_t> boundary,
                  std::vector<char>* touched_lengths);

}  // namespace detail

// ---------------------------------------------------------------------------
// Extension diagrams
// ---------------------------------------------------------------------------

/// The two-sided extension table of a factor w: cell (a,b) is set when the
/// word a.w.b belongs to the language.  E^L / E^R are the projections onto
/// rows/columns.
struct ExtensionDiagram {
  Word word;
  std::uint16_t cells = 0;  // bit (a-1)*3 + (b-1)

  bool has(int a, int b) const { return cells >> ((a - 1) * 3 + (b - 1)) & 1; }
  void set_cell(int a, int b) { cells |= static_cast<std::uint16_t>(1u << ((a - 1) * 3 + (b - 1))); }

  int size() const;         // |E|
  int left_mask() const;    // bit a-1 set when a in E^L
  int right_mask() const;   // bit b-1 set when b in E^R
  int left_count() const;
  int right_count() const;
  bool is_bispecial() const { return left_count() >= 2 && right_count() >= 2; }

  /// 3x3 ASCII table with row/column headers.
  std::string ascii() const;

  friend bool operator==(const ExtensionDiagram&, const ExtensionDiagram&) = default;
};

/// m(w) = |E(w)| - |E^L(w)| - |E^R(w)| + 1.
int bilateral_multiplicity(const ExtensionDiagram& d);

// ---------------------------------------------------------------------------
// Analysis operations
// ---------------------------------------------------------------------------

/// p(0..n_max); p(0) = 1.  Requires n_max <= reliable_window.
std::vector<long> complexity_profile(const LanguageSample& L, int n_max);

/// Exact extension table of w.  Requires w in L and |w| + 2 <= window.
ExtensionDiagram extension_diagram(const LanguageSample& L, std::string_view w);

struct BispecialEntry {
  Word word;
  ExtensionDiagram diagram;
  int m;
};

/// All bispecial factors (including the empty word when bispecial) of length
/// <= len_max, ordered by (length, word).  Requires len_max + 2 <= window.
std::vector<BispecialEntry> enumerate_bispecial(const LanguageSample& L, int len_max);

struct DifferenceRow {
  int n;
  long dp;         // p(n+1) - p(n)
  long sum_left;   // sum over w in L_n of (|E^L(w)| - 1)
  long sum_right;  // sum over w in L_n of (|E^R(w)| - 1)
  long d2p;        // p(n+2) - 2 p(n+1) + p(n)
  long sum_m;      // sum over w in L_n of m(w)
};

struct DifferenceReport {
  bool ok = true;
  std::optional<int> first_violation;
  std::vector<DifferenceRow> rows;
};

/// Checks, for every n with n + 2 <= n_max, that
///   p(n+1) - p(n)          = sum (|E^L| - 1) = sum (|E^R| - 1)   and
///   p(n+2) - 2p(n+1) + p(n) = sum m(w)
/// over the length-n factors (with n = 0 contributing the empty word).
/// Requires n_max <= reliable_window.
DifferenceReport verify_difference_identities(const LanguageSample& L, int n_max);

}  // namespace trip
