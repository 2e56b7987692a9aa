#include "trip/substitution.hpp"

#include <algorithm>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

namespace trip {

// ---------------------------------------------------------------------------
// Substitutions
// ---------------------------------------------------------------------------

Word Substitution::apply(std::string_view w) const {
  size_t out_len = 0;
  for (char c : w) {
    if (c < '1' || c > '3') throw DomainError("Substitution::apply: letter outside {1,2,3}");
    out_len += images[static_cast<size_t>(c - '1')].size();
  }
  Word out;
  out.reserve(out_len);
  for (char c : w) out += images[static_cast<size_t>(c - '1')];
  return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution s;
  for (int c = 1; c <= 3; ++c) s.images[static_cast<size_t>(c - 1)] = outer.apply(inner.image(c));
  return s;
}

std::string_view variant_name(Variant v) {
  return v == Variant::Canonical13 ? "canonical13" : "variant31";
}

Variant parse_variant(std::string_view s) {
  if (s == "canonical13") return Variant::Canonical13;
  if (s == "variant31") return Variant::Variant31;
  throw DomainError("unknown variant: " + std::string(s));
}

Substitution trip_substitution(int branch, const TripTriple& t, Variant v) {
  if (branch != 0 && branch != 1) throw DomainError("trip_substitution: branch must be 0 or 1");
  static const std::array<Word, 3> kB0 = {"2", "3", "13"};
  static const std::array<Word, 3> kB1Canonical = {"1", "2", "13"};
  static const std::array<Word, 3> kB1Variant = {"1", "2", "31"};
  const auto& base =
      branch == 0 ? kB0 : (v == Variant::Canonical13 ? kB1Canonical : kB1Variant);
  const Perm3& tau = branch == 0 ? t.tau0 : t.tau1;
  Substitution s;
  for (int c = 1; c <= 3; ++c) {
    const Word& mid = base[static_cast<size_t>(tau(c) - 1)];
    Word img;
    img.reserve(mid.size());
    for (char d : mid) img += static_cast<char>('0' + t.sigma(d - '0'));
    s.images[static_cast<size_t>(c - 1)] = std::move(img);
  }
  return s;
}

Substitution gauss_substitution(long k, const TripTriple& t, Variant v) {
  if (k < 0) throw DomainError("gauss_substitution: k must be >= 0");
  Substitution s = trip_substitution(0, t, v);
  Substitution s1 = trip_substitution(1, t, v);
  for (long i = 0; i < k; ++i) s = compose(s1, s);
  return s;
}

// ---------------------------------------------------------------------------
// Abelianization
// ---------------------------------------------------------------------------

Vec3 abelianize_word(std::string_view w) {
  Vec3 counts{0, 0, 0};
  for (char c : w) {
    if (c < '1' || c > '3') throw DomainError("abelianize_word: letter outside {1,2,3}");
    counts[static_cast<size_t>(c - '1')] += 1;
  }
  return counts;
}

Mat3 abelianize_substitution(const Substitution& s) {
  Mat3 m = Mat3::zero();
  for (int c = 1; c <= 3; ++c) {
    Vec3 col = abelianize_word(s.image(c));
    for (int r = 0; r < 3; ++r) m(r, c - 1) = col[static_cast<size_t>(r)];
  }
  return m;
}

Substitution canonical_substitution_from_matrix(const Mat3& m) {
  constexpr long kMaxImage = 1 << 20;
  Substitution s;
  for (int c = 0; c < 3; ++c) {
    Word img;
    for (int r = 0; r < 3; ++r) {
      const Int& e = m(r, c);
      if (e < 0 || e > kMaxImage) {
        throw DomainError("canonical_substitution_from_matrix: entry out of range");
      }
      img.append(static_cast<size_t>(e.convert_to<long>()), static_cast<char>('1' + r));
    }
    if (img.empty()) {
      throw DomainError("canonical_substitution_from_matrix: empty image column");
    }
    s.images[static_cast<size_t>(c)] = std::move(img);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Coding sequences
// ---------------------------------------------------------------------------

size_t CodingSeq::size() const {
  switch (kind) {
    case Kind::Farey: return bits.size();
    case Kind::Gauss: return ks.size();
    case Kind::DoubleGauss: return pairs.size();
  }
  return 0;
}

std::string CodingSeq::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::Farey:
      for (int b : bits) out += static_cast<char>('0' + b);
      break;
    case Kind::Gauss:
      for (size_t i = 0; i < ks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ks[i]);
      }
      break;
    case Kind::DoubleGauss:
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ';';
        out += '(' + std::to_string(pairs[i].first) + ',' + std::to_string(pairs[i].second) + ')';
      }
      break;
  }
  return out;
}

CodingSeq CodingSeq::farey(std::string_view bits01) {
  CodingSeq s;
  s.kind = Kind::Farey;
  s.bits.reserve(bits01.size());
  for (char c : bits01) {
    if (c != '0' && c != '1') throw DomainError("farey coding: characters must be 0/1");
    s.bits.push_back(c - '0');
  }
  return s;
}

CodingSeq CodingSeq::farey(std::vector<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("farey coding: bits must be 0/1");
  }
  CodingSeq s;
  s.kind = Kind::Farey;
  s.bits = std::move(bits);
  return s;
}

CodingSeq CodingSeq::gauss(std::vector<long> ks) {
  for (long k : ks) {
    if (k < 0) throw DomainError("gauss coding: digits must be >= 0");
  }
  CodingSeq s;
  s.kind = Kind::Gauss;
  s.ks = std::move(ks);
  return s;
}

CodingSeq CodingSeq::double_gauss(std::vector<std::pair<long, long>> pairs) {
  for (auto [j, k] : pairs) {
    if (j < 0 || k < 0) throw DomainError("double gauss coding: digits must be >= 0");
  }
  CodingSeq s;
  s.kind = Kind::DoubleGauss;
  s.pairs = std::move(pairs);
  return s;
}

std::pair<CodingSeq, bool> CodingSeq::pair_up(const CodingSeq& gauss) {
  if (gauss.kind != Kind::Gauss) throw DomainError("pair_up: expected a Gauss coding");
  std::vector<std::pair<long, long>> pairs;
  pairs.reserve(gauss.ks.size() / 2);
  for (size_t i = 0; i + 1 < gauss.ks.size(); i += 2) {
    pairs.emplace_back(gauss.ks[i], gauss.ks[i + 1]);
  }
  bool dropped = gauss.ks.size() % 2 != 0;
  return {double_gauss(std::move(pairs)), dropped};
}

std::vector<Substitution> coding_substitutions(const CodingSeq& seq, const TripTriple& t,
                                               Variant v) {
  std::vector<Substitution> subs;
  subs.reserve(seq.size());
  switch (seq.kind) {
    case CodingSeq::Kind::Farey: {
      Substitution s0 = trip_substitution(0, t, v);
      Substitution s1 = trip_substitution(1, t, v);
      for (int b : seq.bits) subs.push_back(b == 0 ? s0 : s1);
      break;
    }
    case CodingSeq::Kind::Gauss: {
      absl::flat_hash_map<long, Substitution> cache;
      for (long k : seq.ks) {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, gauss_substitution(k, t, v)).first;
        subs.push_back(it->second);
      }
      break;
    }
    case CodingSeq::Kind::DoubleGauss: {
      absl::flat_hash_map<long, Substitution> cache;
      // By value: emplace may rehash, so references into the map do not
      // survive the second lookup of compose(gauss(j), gauss(k)).
      auto gauss = [&](long k) -> Substitution {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, gauss_substitution(k, t, v)).first;
        return it->second;
      };
      for (auto [j, k] : seq.pairs) subs.push_back(compose(gauss(j), gauss(k)));
      break;
    }
  }
  return subs;
}

// ---------------------------------------------------------------------------
// Primitivity
// ---------------------------------------------------------------------------

PrimitivityResult check_primitive(const CodingSeq& seq, const TripTriple& t, long horizon,
                                  Variant v) {
  if (horizon < 0) throw DomainError("check_primitive: horizon must be >= 0");
  auto subs = coding_substitutions(seq, t, v);
  PrimitivityResult res;
  Mat3 prod = Mat3::identity();
  long depth = std::min<long>(horizon, static_cast<long>(subs.size()));
  for (long n = 1; n <= depth; ++n) {
    prod = prod * abelianize_substitution(subs[static_cast<size_t>(n - 1)]);
    res.depth_checked = n;
    if (strictly_positive(prod)) {
      res.positive_at = n;
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Language sampling
// ---------------------------------------------------------------------------

namespace {

/// Incremental expander.  For each seed letter it tracks the expansion of the
/// coding's prefix product, keeping the full word only while it is small;
/// afterwards only a K-character prefix/suffix pair and the exact length
/// survive, and factor harvesting happens at the junctions where images of
/// the newly applied substitution meet.
class Sampler {
 public:
  Sampler(int max_len, int margin)
      : kF_(max_len),
        kK_(static_cast<size_t>(max_len - 1)),
        margin_(margin),
        facs_(max_len),
        last_change_(static_cast<size_t>(max_len) + 1, 0) {
    for (int c = 0; c < 3; ++c) {
      auto& st = states_[static_cast<size_t>(c)];
      st.full = Word(1, static_cast<char>('1' + c));
      st.len = 1;
      facs_.insert(*st.full);  // depth-0 expansions
    }
  }

  /// Deepen every seed by one substitution: the new substitution acts inside,
  /// so the next expansion of c concatenates the previous expansions of the
  /// letters of sub(c).
  void step(const Substitution& sub) {
    ++depth_;
    std::vector<char> touched(static_cast<size_t>(kF_) + 1, 0);
    std::array<CharState, 3> next;
    for (int c = 0; c < 3; ++c) {
      next[static_cast<size_t>(c)] = expand_one(sub.images[static_cast<size_t>(c)], &touched);
    }
    states_ = std::move(next);
    for (int n = 1; n <= kF_; ++n) {
      if (touched[static_cast<size_t>(n)]) last_change_[static_cast<size_t>(n)] = depth_;
    }
  }

  int depth() const { return depth_; }

  /// Longest prefix of lengths whose factor sets stayed unchanged over the
  /// last margin_ depths.
  int window() const {
    int cut = depth_ - margin_;
    int w = 0;
    while (w + 1 <= kF_ && last_change_[static_cast<size_t>(w) + 1] <= cut) ++w;
    return w;
  }

  FactorSet take_factors() { return std::move(facs_); }

 private:
  struct CharState {
    std::optional<Word> full;  // entire expansion while small enough
    Word pre, suf;             // first/last K characters otherwise
    Int len = 0;
  };

  const Word& prefix_of(const CharState& st) const { return st.full ? *st.full : st.pre; }

  CharState expand_one(const Word& img, std::vector<char>* touched) {
    if (img.empty()) throw DomainError("sampler: substitution image is empty");
    Int total = 0;
    bool all_full = true;
    for (char d : img) {
      const auto& ps = states_[static_cast<size_t>(d - '1')];
      total += ps.len;
      all_full = all_full && ps.full.has_value();
    }
    CharState out;
    out.len = total;
    if (all_full && total <= 4 * static_cast<long>(kK_) + 8) {
      Word w;
      w.reserve(static_cast<size_t>(total.convert_to<long>()));
      for (char d : img) w += *states_[static_cast<size_t>(d - '1')].full;
      detail::scan_windows(facs_, w, std::nullopt, touched);
      out.full = std::move(w);
      return out;
    }
    // Junction mode.  rights[i] = first K characters of the concatenation of
    // parts i.. ; run = last K characters of the concatenation of parts ..i-1.
    const size_t np = img.size();
    std::vector<Word> rights(np);
    for (size_t i = np; i-- > 0;) {
      const auto& ps = states_[static_cast<size_t>(img[i] - '1')];
      Word r = prefix_of(ps);
      if (r.size() < kK_ && i + 1 < np) r += rights[i + 1];
      if (r.size() > kK_) r.resize(kK_);
      rights[i] = std::move(r);
    }
    const auto& first = states_[static_cast<size_t>(img[0] - '1')];
    Word run = first.full ? *first.full : first.suf;
    if (run.size() > kK_) run.erase(0, run.size() - kK_);
    for (size_t i = 1; i < np; ++i) {
      if (!run.empty() && !rights[i].empty()) {
        Word key;
        key.reserve(run.size() + 1 + rights[i].size());
        key += run;
        key += '\x01';
        key += rights[i];
        if (junction_memo_.insert(std::move(key)).second) {
          Word joined = run + rights[i];
          detail::scan_windows(facs_, joined, run.size(), touched);
        }
      }
      const auto& ps = states_[static_cast<size_t>(img[i] - '1')];
      if (ps.full) {
        run += *ps.full;
        if (run.size() > kK_) run.erase(0, run.size() - kK_);
      } else {
        run = ps.suf;  // a truncated part already carries K suffix characters
      }
    }
    out.pre = rights[0];
    out.suf = std::move(run);
    return out;
  }

  const int kF_;
  const size_t kK_;
  const int margin_;
  FactorSet facs_;
  std::vector<int> last_change_;
  std::array<CharState, 3> states_;
  absl::flat_hash_set<Word> junction_memo_;
  int depth_ = 0;
};

}  // namespace

LanguageSample expand_language_sample(const CodingSeq& seq, const TripTriple& t,
                                      int max_factor_len, Variant v, int stability_margin) {
  if (max_factor_len < 1) throw DomainError("expand_language_sample: max_factor_len must be >= 1");
  if (stability_margin < 1) throw DomainError("expand_language_sample: margin must be >= 1");
  auto subs = coding_substitutions(seq, t, v);
  Sampler sampler(max_factor_len, stability_margin);
  for (const auto& s : subs) sampler.step(s);
  Provenance prov;
  prov.kind = "coding";
  prov.triple = t.name();
  prov.variant = std::string(variant_name(v));
  prov.coding = seq.to_string();
  int window = sampler.window();
  return LanguageSample(sampler.take_factors(), window, sampler.depth(), std::move(prov));
}

Word expand_word(const CodingSeq& seq, const TripTriple& t, int depth, char seed, Variant v) {
  if (seed < '1' || seed > '3') throw DomainError("expand_word: seed must be 1, 2, or 3");
  auto subs = coding_substitutions(seq, t, v);
  int d = std::min<int>(depth, static_cast<int>(subs.size()));
  Word w(1, seed);
  for (int i = d - 1; i >= 0; --i) w = subs[static_cast<size_t>(i)].apply(w);
  return w;
}

// ---------------------------------------------------------------------------
// Letter frequencies
// ---------------------------------------------------------------------------

FrequencyReport estimate_frequency(const CodingSeq& seq, const TripTriple& t,
                                   const Int& target_len, Variant v) {
  if (target_len < 1) throw DomainError("estimate_frequency: target length must be >= 1");
  auto subs = coding_substitutions(seq, t, v);
  Mat3 prod = Mat3::identity();
  Int len = 1;
  long used = 0;
  for (const auto& s : subs) {
    prod = prod * abelianize_substitution(s);
    ++used;
    len = prod(0, 0) + prod(1, 0) + prod(2, 0);
    if (len >= target_len) break;
  }
  FrequencyReport rep;
  rep.word_len = len;
  rep.depth_used = used;
  rep.exhausted = len < target_len;
  for (int i = 0; i < 3; ++i) rep.freq[static_cast<size_t>(i)] = Rat(prod(i, 0), len);
  for (int j = 0; j < 3; ++j) {
    Int colsum = prod(0, j) + prod(1, j) + prod(2, j);
    for (int i = 0; i < 3; ++i) {
      rep.subtriangle[static_cast<size_t>(j)][static_cast<size_t>(i)] = Rat(prod(i, j), colsum);
    }
  }
  rep.diameter = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int i = 0; i < 3; ++i) {
        Rat d = rep.subtriangle[static_cast<size_t>(a)][static_cast<size_t>(i)] -
                rep.subtriangle[static_cast<size_t>(b)][static_cast<size_t>(i)];
        if (d < 0) d = -d;
        if (d > rep.diameter) rep.diameter = d;
      }
    }
  }
  rep.positive = strictly_positive(prod);
  return rep;
}

// ---------------------------------------------------------------------------
// Random codings
// ---------------------------------------------------------------------------

namespace {
long geometric_digit(std::mt19937_64& rng, long cap) {
  long k = 0;
  while (k < cap && (rng() & 1)) ++k;
  return k;
}
}  // namespace

std::vector<long> random_gauss_ks(std::mt19937_64& rng, size_t n, long cap) {
  std::vector<long> ks(n);
  for (auto& k : ks) k = geometric_digit(rng, cap);
  return ks;
}

std::vector<int> random_farey_bits(std::mt19937_64& rng, size_t n) {
  std::vector<int> bits(n);
  for (auto& b : bits) b = static_cast<int>(rng() & 1);
  return bits;
}

std::vector<std::pair<long, long>> random_gauss_pairs(std::mt19937_64& rng, size_t n, long cap) {
  std::vector<std::pair<long, long>> out(n);
  for (auto& p : out) {
    p.first = geometric_digit(rng, cap);
    p.second = geometric_digit(rng, cap);
  }
  return out;
}

}  // namespace trip
