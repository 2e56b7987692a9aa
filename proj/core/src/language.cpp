#include "trip/language.hpp"

#include <algorithm>
#include <bit>

#include "trip/algebra.hpp"

namespace trip {

namespace {

constexpr std::uint32_t kNoEntry = 0xffffffffu;

void check_alphabet(std::string_view f) {
  for (char c : f) {
    if (c < '1' || c > '3') throw DomainError("factor contains a character outside {1,2,3}");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FactorSet
// ---------------------------------------------------------------------------

FactorSet::FactorSet(int max_len) : max_len_(max_len) {
  if (max_len < 1) throw DomainError("FactorSet: max_len must be >= 1");
  packed_.resize(static_cast<size_t>(std::min(max_len, 64)));
  if (max_len > 64) long_.resize(static_cast<size_t>(max_len - 64));
}

FactorSet::PackedKey FactorSet::pack(std::string_view f) {
  PackedKey k;
  for (size_t i = 0; i < f.size(); ++i) {
    auto bits = static_cast<std::uint64_t>(f[i] - '1');
    if (i < 32) {
      k.lo |= bits << (2 * i);
    } else {
      k.hi |= bits << (2 * (i - 32));
    }
  }
  return k;
}

std::uint64_t FactorSet::poly_hash(std::string_view s) {
  std::uint64_t h = 0;
  for (char c : s) h = h * kHashBase + static_cast<unsigned char>(c);
  return h;
}

bool FactorSet::insert_packed(int len, PackedKey key) {
  return packed_[static_cast<size_t>(len - 1)].insert(key).second;
}

bool FactorSet::long_contains(const LongTier& t, int len, std::string_view f,
                              std::uint64_t h) const {
  auto it = t.by_hash.find(h);
  if (it == t.by_hash.end()) return false;
  for (std::uint32_t e = it->second; e != kNoEntry; e = t.next[e]) {
    std::string_view stored(t.arena.data() + t.offsets[e], static_cast<size_t>(len));
    if (stored == f) return true;
  }
  return false;
}

bool FactorSet::insert_long(std::string_view f, std::uint64_t hash) {
  auto& t = long_[f.size() - 65];
  int len = static_cast<int>(f.size());
  auto [it, fresh] = t.by_hash.try_emplace(hash, kNoEntry);
  if (!fresh) {
    for (std::uint32_t e = it->second; e != kNoEntry; e = t.next[e]) {
      std::string_view stored(t.arena.data() + t.offsets[e], static_cast<size_t>(len));
      if (stored == f) return false;
    }
  }
  auto idx = static_cast<std::uint32_t>(t.offsets.size());
  t.offsets.push_back(static_cast<std::uint32_t>(t.arena.size()));
  t.next.push_back(it->second);
  it->second = idx;
  t.arena.append(f);
  return true;
}

bool FactorSet::insert(std::string_view f) {
  if (f.empty() || static_cast<int>(f.size()) > max_len_) {
    throw DomainError("FactorSet::insert: length out of range");
  }
  check_alphabet(f);
  if (f.size() <= 64) return insert_packed(static_cast<int>(f.size()), pack(f));
  return insert_long(f, poly_hash(f));
}

bool FactorSet::contains(std::string_view f) const {
  if (f.empty() || static_cast<int>(f.size()) > max_len_) return false;
  if (f.size() <= 64) return packed_[f.size() - 1].contains(pack(f));
  return long_contains(long_[f.size() - 65], static_cast<int>(f.size()), f, poly_hash(f));
}

long FactorSet::count(int len) const {
  if (len < 1 || len > max_len_) return 0;
  if (len <= 64) return static_cast<long>(packed_[static_cast<size_t>(len - 1)].size());
  return static_cast<long>(long_[static_cast<size_t>(len - 65)].offsets.size());
}

long FactorSet::total() const {
  long s = 0;
  for (int len = 1; len <= max_len_; ++len) s += count(len);
  return s;
}

void FactorSet::for_each(int len, const std::function<void(std::string_view)>& fn) const {
  if (len < 1 || len > max_len_) return;
  if (len <= 64) {
    const auto& set = packed_[static_cast<size_t>(len - 1)];
    std::vector<PackedKey> keys(set.begin(), set.end());
    std::sort(keys.begin(), keys.end(), [](const PackedKey& a, const PackedKey& b) {
      return std::tie(a.hi, a.lo) < std::tie(b.hi, b.lo);
    });
    std::string buf(static_cast<size_t>(len), '1');
    for (const auto& k : keys) {
      for (int i = 0; i < len; ++i) {
        std::uint64_t limb = i < 32 ? k.lo : k.hi;
        buf[static_cast<size_t>(i)] =
            static_cast<char>('1' + (limb >> (2 * (i % 32)) & 3));
      }
      fn(buf);
    }
    return;
  }
  const auto& t = long_[static_cast<size_t>(len - 65)];
  for (std::uint32_t off : t.offsets) {
    fn(std::string_view(t.arena.data() + off, static_cast<size_t>(len)));
  }
}

// ---------------------------------------------------------------------------
// LanguageSample
// ---------------------------------------------------------------------------

LanguageSample::LanguageSample(FactorSet factors, int reliable_window, int depth, Provenance prov)
    : factors_(std::move(factors)),
      reliable_window_(reliable_window),
      depth_(depth),
      prov_(std::move(prov)) {
  if (reliable_window_ < 0 || reliable_window_ > factors_.max_len()) {
    throw DomainError("LanguageSample: reliable window out of range");
  }
}

namespace detail {

void scan_windows(FactorSet& fs, std::string_view s, std::optional<size_t> boundary,
                  std::vector<char>* touched_lengths) {
  const size_t n = s.size();
  const auto F = static_cast<size_t>(fs.max_len());
  size_t i_lo = 0, i_hi = n;
  if (boundary) {
    // Only windows that straddle the boundary: start < b, end > b.
    size_t b = *boundary;
    if (b == 0 || b >= n) return;
    i_lo = b >= F ? b - F + 1 : 0;
    i_hi = b;
  }
  for (size_t i = i_lo; i < i_hi; ++i) {
    size_t j0 = boundary ? *boundary + 1 : i + 1;
    size_t j_end = std::min(n, i + F);
    if (j0 > j_end) continue;
    FactorSet::PackedKey key;
    std::uint64_t h = 0;
    for (size_t p = i; p + 1 < j0; ++p) {  // prefix s[i, j0-1) feeding the rolling state
      size_t pos = p - i;
      auto bits = static_cast<std::uint64_t>(s[p] - '1');
      if (pos < 32) {
        key.lo |= bits << (2 * pos);
      } else if (pos < 64) {
        key.hi |= bits << (2 * (pos - 32));
      }
      h = h * FactorSet::kHashBase + static_cast<unsigned char>(s[p]);
    }
    for (size_t j = j0; j <= j_end; ++j) {
      size_t pos = j - 1 - i;  // index of the appended character within the window
      auto bits = static_cast<std::uint64_t>(s[j - 1] - '1');
      if (pos < 32) {
        key.lo |= bits << (2 * pos);
      } else if (pos < 64) {
        key.hi |= bits << (2 * (pos - 32));
      }
      h = h * FactorSet::kHashBase + static_cast<unsigned char>(s[j - 1]);
      size_t len = j - i;
      bool fresh = len <= 64 ? fs.insert_packed(static_cast<int>(len), key)
                             : fs.insert_long(s.substr(i, len), h);
      if (fresh && touched_lengths) (*touched_lengths)[len] = 1;
    }
  }
}

}  // namespace detail

LanguageSample sample_from_word(std::string_view word, int max_factor_len) {
  check_alphabet(word);
  FactorSet fs(max_factor_len);
  detail::scan_windows(fs, word, std::nullopt, nullptr);
  Provenance prov;
  prov.kind = "finite-word";
  prov.coding = "word of length " + std::to_string(word.size());
  return LanguageSample(std::move(fs), max_factor_len, 0, std::move(prov));
}

// ---------------------------------------------------------------------------
// Extension diagrams
// ---------------------------------------------------------------------------

int ExtensionDiagram::size() const { return std::popcount(static_cast<unsigned>(cells & 0x1ff)); }

int ExtensionDiagram::left_mask() const {
  int m = 0;
  for (int a = 1; a <= 3; ++a) {
    if (cells >> (3 * (a - 1)) & 7) m |= 1 << (a - 1);
  }
  return m;
}

int ExtensionDiagram::right_mask() const {
  int m = 0;
  for (int b = 1; b <= 3; ++b) {
    if (cells >> (b - 1) & 0111) m |= 1 << (b - 1);  // octal 0111: bits 0,3,6
  }
  return m;
}

int ExtensionDiagram::left_count() const { return std::popcount(static_cast<unsigned>(left_mask())); }

int ExtensionDiagram::right_count() const {
  return std::popcount(static_cast<unsigned>(right_mask()));
}

std::string ExtensionDiagram::ascii() const {
  std::string out = "E(" + (word.empty() ? std::string("eps") : word) + ")  b=1 b=2 b=3\n";
  for (int a = 1; a <= 3; ++a) {
    out += "a=" + std::to_string(a) + "        ";
    for (int b = 1; b <= 3; ++b) {
      out += has(a, b) ? " X " : " . ";
      if (b < 3) out += " ";
    }
    out += "\n";
  }
  return out;
}

int bilateral_multiplicity(const ExtensionDiagram& d) {
  return d.size() - d.left_count() - d.right_count() + 1;
}

// ---------------------------------------------------------------------------
// Analysis operations
// ---------------------------------------------------------------------------

namespace {

void require_window(const LanguageSample& L, int need, const char* what) {
  if (need > L.reliable_window()) {
    throw WindowError(std::string(what) + ": needs window " + std::to_string(need) +
                      " but sample is only reliable up to " +
                      std::to_string(L.reliable_window()));
  }
}

/// Extension diagrams of every length-n factor in one pass over the
/// (n+2)-factors: each v = a.w.b contributes cell (a,b) to E(w).  Inside the
/// reliable window every length-n factor occurs as such an interior, which is
/// verified against the direct count.
std::vector<ExtensionDiagram> diagrams_of_length(const LanguageSample& L, int n) {
  absl::flat_hash_map<Word, std::uint16_t> cells;
  L.factors().for_each(n + 2, [&](std::string_view v) {
    Word core(v.substr(1, static_cast<size_t>(n)));
    int a = v.front() - '0', b = v.back() - '0';
    cells[core] |= static_cast<std::uint16_t>(1u << ((a - 1) * 3 + (b - 1)));
  });
  if (static_cast<long>(cells.size()) != L.count(n)) {
    throw DomainError("extension scan: a length-" + std::to_string(n) +
                      " factor is not two-sided extendable inside the window");
  }
  std::vector<ExtensionDiagram> out;
  out.reserve(cells.size());
  for (auto& [w, c] : cells) out.push_back(ExtensionDiagram{w, c});
  std::sort(out.begin(), out.end(),
            [](const ExtensionDiagram& x, const ExtensionDiagram& y) { return x.word < y.word; });
  return out;
}

}  // namespace

std::vector<long> complexity_profile(const LanguageSample& L, int n_max) {
  if (n_max < 0) throw DomainError("complexity_profile: n_max must be >= 0");
  require_window(L, n_max, "complexity_profile");
  std::vector<long> p(static_cast<size_t>(n_max) + 1);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) p[static_cast<size_t>(n)] = L.count(n);
  return p;
}

ExtensionDiagram extension_diagram(const LanguageSample& L, std::string_view w) {
  require_window(L, static_cast<int>(w.size()) + 2, "extension_diagram");
  if (!L.contains(w)) throw DomainError("extension_diagram: word is not in the language");
  ExtensionDiagram d;
  d.word = Word(w);
  Word probe;
  probe.reserve(w.size() + 2);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      probe.clear();
      probe += static_cast<char>('0' + a);
      probe += w;
      probe += static_cast<char>('0' + b);
      if (L.contains(probe)) d.set_cell(a, b);
    }
  }
  return d;
}

std::vector<BispecialEntry> enumerate_bispecial(const LanguageSample& L, int len_max) {
  if (len_max < 0) throw DomainError("enumerate_bispecial: len_max must be >= 0");
  require_window(L, len_max + 2, "enumerate_bispecial");
  std::vector<BispecialEntry> out;
  for (int n = 0; n <= len_max; ++n) {
    for (auto& d : diagrams_of_length(L, n)) {
      if (d.is_bispecial()) {
        int m = bilateral_multiplicity(d);
        out.push_back(BispecialEntry{d.word, std::move(d), m});
      }
    }
  }
  return out;
}

DifferenceReport verify_difference_identities(const LanguageSample& L, int n_max) {
  require_window(L, n_max, "verify_difference_identities");
  if (n_max < 2) throw DomainError("verify_difference_identities: n_max must be >= 2");
  auto p = complexity_profile(L, n_max);
  DifferenceReport rep;
  for (int n = 0; n + 2 <= n_max; ++n) {
    DifferenceRow row;
    row.n = n;
    row.dp = p[static_cast<size_t>(n) + 1] - p[static_cast<size_t>(n)];
    row.d2p = p[static_cast<size_t>(n) + 2] - 2 * p[static_cast<size_t>(n) + 1] +
              p[static_cast<size_t>(n)];
    row.sum_left = row.sum_right = row.sum_m = 0;
    for (const auto& d : diagrams_of_length(L, n)) {
      row.sum_left += d.left_count() - 1;
      row.sum_right += d.right_count() - 1;
      row.sum_m += bilateral_multiplicity(d);
    }
    bool good = row.dp == row.sum_left && row.dp == row.sum_right && row.d2p == row.sum_m;
    if (!good && !rep.first_violation) {
      rep.ok = false;
      rep.first_violation = n;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace trip
