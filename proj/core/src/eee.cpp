#include "trip/eee.hpp"

#include <algorithm>
#include <array>

#include <absl/container/flat_hash_map.h>

namespace trip {

const TripTriple& eee_triple() {
  static const TripTriple t{};  // all permutations default to the identity
  return t;
}

// ---------------------------------------------------------------------------
// Tabulated diagrams
// ---------------------------------------------------------------------------

namespace {

int sgn01(long k) { return k > 0 ? 1 : 0; }

ExtensionDiagram from_pairs(std::initializer_list<const char*> pairs) {
  ExtensionDiagram d;
  for (const char* p : pairs) d.set_cell(p[0] - '0', p[1] - '0');
  return d;
}

const ExtensionDiagram& empty_word_table(int s0, int s1) {
  static const std::array<ExtensionDiagram, 4> tbl = {
      from_pairs({"13", "21", "31", "32", "33"}),  // (0,0)
      from_pairs({"13", "21", "22", "32", "33"}),  // (0,1)
      from_pairs({"11", "13", "21", "31", "32"}),  // (1,0)
      from_pairs({"11", "13", "21", "22", "31", "32"}),  // (1,1)
  };
  return tbl[static_cast<size_t>(2 * s0 + s1)];
}

const ExtensionDiagram& w1_plus_table(int s0, int s1, int s2) {
  static const std::array<ExtensionDiagram, 8> tbl = {
      from_pairs({"11", "12", "13", "32"}),  // (0,0,0)
      from_pairs({"11", "13", "32", "33"}),  // (0,0,1)
      from_pairs({"12", "13", "32"}),        // (0,1,0)
      from_pairs({"12", "13", "32", "33"}),  // (0,1,1)
      from_pairs({"11", "12", "32"}),        // (1,0,0)
      from_pairs({"11", "31", "32"}),        // (1,0,1)
      from_pairs({"11", "12", "32"}),        // (1,1,0)
      from_pairs({"11", "12", "31", "32"}),  // (1,1,1)
  };
  return tbl[static_cast<size_t>(4 * s0 + 2 * s1 + s2)];
}

const ExtensionDiagram& w1_minus_table(int s0, int s2) {
  static const std::array<ExtensionDiagram, 4> tbl = {
      from_pairs({"11", "12", "32"}),  // (0,0)
      from_pairs({"11", "32"}),        // (0,1)
      from_pairs({"11", "12", "32"}),  // (1,0)
      from_pairs({"11", "32"}),        // (1,1)
  };
  return tbl[static_cast<size_t>(2 * s0 + s2)];
}

const ExtensionDiagram& w131_table(int s1, int s2) {
  static const std::array<ExtensionDiagram, 4> tbl = {
      from_pairs({"11", "13"}),        // (1,0,0)
      from_pairs({"11", "13", "33"}),  // (1,0,1)
      from_pairs({"13"}),              // (1,1,0)
      from_pairs({"13", "33"}),        // (1,1,1)
  };
  return tbl[static_cast<size_t>(2 * s1 + s2)];
}

Word run_of(char c, long n) { return Word(static_cast<size_t>(n), c); }

}  // namespace

ExtensionDiagram eee_empty_diagram(long k0, long k1) {
  ExtensionDiagram d = empty_word_table(sgn01(k0), sgn01(k1));
  d.word.clear();
  return d;
}

std::vector<Word> eee_allowed_two_words(long k0, long k1) {
  std::vector<Word> out;
  const ExtensionDiagram& d = empty_word_table(sgn01(k0), sgn01(k1));
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (d.has(a, b)) out.push_back({static_cast<char>('0' + a), static_cast<char>('0' + b)});
    }
  }
  return out;
}

ExtensionDiagram eee_age0_diagram(long j, long k0, long k1) {
  if (j < 1 || j > k0) throw DomainError("eee_age0_diagram: need 1 <= j <= k0");
  ExtensionDiagram d;
  if (j == k0) {
    d = k1 == 0 ? from_pairs({"13", "21", "31", "33"}) : from_pairs({"13", "21", "33"});
  } else {
    d = from_pairs({"11", "13", "21", "31"});
  }
  d.word = run_of('1', j);
  return d;
}

ExtensionDiagram eee_w1_plus_diagram(long k0, long k1, long k2) {
  ExtensionDiagram d = w1_plus_table(sgn01(k0), sgn01(k1), sgn01(k2));
  d.word = run_of('1', k0) + '3';
  return d;
}

ExtensionDiagram eee_w1_minus_diagram(long k0, long k1, long k2) {
  if (k1 < 1) throw DomainError("eee_w1_minus_diagram: needs k1 >= 1");
  ExtensionDiagram d = w1_minus_table(sgn01(k0), sgn01(k2));
  d.word = run_of('1', k0) + '3' + run_of('2', k1);
  return d;
}

ExtensionDiagram eee_w131_diagram(long k0, long k1, long k2) {
  if (k0 < 1) throw DomainError("eee_w131_diagram: needs k0 >= 1");
  ExtensionDiagram d = w131_table(sgn01(k1), sgn01(k2));
  d.word = run_of('1', k0) + '3' + run_of('1', k0);
  return d;
}

std::optional<ExtensionDiagram> eee_age_table_lookup(std::string_view w,
                                                     const std::vector<long>& ks) {
  if (ks.size() < 3) throw DomainError("eee_age_table_lookup: need at least 3 Gauss digits");
  long k0 = ks[0], k1 = ks[1], k2 = ks[2];
  auto with_word = [&](ExtensionDiagram d) {
    d.word = Word(w);
    return d;
  };
  if (w.empty()) return with_word(eee_empty_diagram(k0, k1));
  auto all_of_char = [&](char c) { return w.find_first_not_of(c) == w.npos; };
  long n = static_cast<long>(w.size());
  if (all_of_char('1')) {
    if (n <= k0) return with_word(eee_age0_diagram(n, k0, k1));
    return std::nullopt;
  }
  if (all_of_char('2')) {
    // 2^j = G_{k0}(1^j) with nothing attached, so its diagram is the image of
    // the age-0 diagram of 1^j one coding level deeper.
    if (n > k1) return std::nullopt;
    return with_word(eee_extension_image(eee_age0_diagram(n, k1, k2), true, true, k0));
  }
  if (w == run_of('1', k0) + '3') return with_word(eee_w1_plus_diagram(k0, k1, k2));
  if (k1 >= 1 && w == run_of('1', k0) + '3' + run_of('2', k1)) {
    return with_word(eee_w1_minus_diagram(k0, k1, k2));
  }
  if (k0 >= 1 && w == run_of('1', k0) + '3' + run_of('1', k0)) {
    return with_word(eee_w131_diagram(k0, k1, k2));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Antecedents and diagram images
// ---------------------------------------------------------------------------

std::optional<EeeAntecedent> eee_antecedent(std::string_view w, long k0) {
  if (k0 < 0) throw DomainError("eee_antecedent: k0 must be >= 0");
  size_t t0 = w.find_first_of("23");
  if (t0 == w.npos) return std::nullopt;
  size_t tl = w.find_last_of("23");
  Word b(w.substr(tl + 1));  // all 1s: nothing after the last terminator can be 2/3
  if (static_cast<long>(b.size()) > k0 + 1) return std::nullopt;
  auto r = static_cast<long>(t0);  // leading 1-run before the first terminator
  Word a, mid;
  if (w[t0] == '2') {
    if (r != 0) return std::nullopt;
    mid = Word(w.substr(0, tl + 1));
  } else {  // first terminator is 3
    if (r <= k0) {
      a = Word(w.substr(0, t0 + 1));
      mid = Word(w.substr(t0 + 1, tl - t0));
    } else if (r == k0 + 1) {
      mid = Word(w.substr(0, tl + 1));
    } else {
      return std::nullopt;
    }
  }
  // mid must be a concatenation of full images 2 = G(1), 1^{k0}3 = G(2),
  // 1^{k0+1}3 = G(3).
  Word v;
  size_t i = 0;
  while (i < mid.size()) {
    size_t j = i;
    while (j < mid.size() && mid[j] == '1') ++j;
    if (j == mid.size()) return std::nullopt;
    auto run = static_cast<long>(j - i);
    if (mid[j] == '2') {
      if (run != 0) return std::nullopt;
      v += '1';
    } else if (run == k0) {
      v += '2';
    } else if (run == k0 + 1) {
      v += '3';
    } else {
      return std::nullopt;
    }
    i = j + 1;
  }
  return EeeAntecedent{std::move(a), std::move(v), std::move(b)};
}

ExtensionDiagram eee_extension_image(const ExtensionDiagram& ev, bool a_is_empty,
                                     bool b_is_empty, long k0) {
  // index = source letter; value = target letter, 0 = erased
  const std::array<int, 4> alpha_l = a_is_empty ? std::array<int, 4>{0, 2, 3, 3}
                                                : std::array<int, 4>{0, 0, 3, 1};
  std::array<int, 4> alpha_r;
  if (k0 == 0) {
    alpha_r = {0, 2, 3, 1};
  } else if (b_is_empty) {
    alpha_r = {0, 2, 1, 1};
  } else {
    alpha_r = {0, 0, 3, 1};
  }
  ExtensionDiagram out;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (!ev.has(a, b)) continue;
      int na = alpha_l[static_cast<size_t>(a)], nb = alpha_r[static_cast<size_t>(b)];
      if (na && nb) out.set_cell(na, nb);
    }
  }
  return out;
}

BispecialAge bispecial_age(std::string_view w, const std::vector<long>& ks) {
  BispecialAge res;
  Word cur(w);
  while (!cur.empty() && cur.find_first_of("23") != cur.npos) {
    if (res.age >= static_cast<int>(ks.size())) {
      throw DomainError("bispecial_age: coding too short for " + Word(w));
    }
    auto dec = eee_antecedent(cur, ks[static_cast<size_t>(res.age)]);
    if (!dec) throw DomainError("bispecial_age: word has no antecedent: " + cur);
    cur = dec->v;
    ++res.age;
  }
  res.terminal = cur;
  return res;
}

// ---------------------------------------------------------------------------
// The bispecial chain
// ---------------------------------------------------------------------------

namespace {

struct PullImage {
  Word w;
  ExtensionDiagram diag;
  bool a13 = false;
  bool b1k0 = false;
};

std::vector<PullImage> pull_through(const Word& v, const ExtensionDiagram& ev, long k0,
                                    const Substitution& g) {
  int elm = ev.left_mask();
  bool a_empty;
  if (elm == 0b101) {  // {1,3}
    a_empty = true;
  } else if (elm == 0b110) {  // {2,3}
    a_empty = false;
  } else {
    throw DomainError("eee chain: unexpected left extension set of " + v);
  }
  Word core = a_empty ? g.apply(v) : run_of('1', k0) + '3' + g.apply(v);
  int erm = ev.right_mask();
  int erc = ev.right_count();
  std::vector<PullImage> out;
  if (erc == 2) {
    bool b_1k0 = erm == 0b110;  // {2,3}
    Word b = b_1k0 ? run_of('1', k0) : Word();
    out.push_back({core + b, eee_extension_image(ev, a_empty, !b_1k0, k0), !a_empty, b_1k0});
  } else if (erc == 3) {
    out.push_back({core, eee_extension_image(ev, a_empty, true, k0), !a_empty, false});
    if (k0 >= 1) {
      out.push_back(
          {core + run_of('1', k0), eee_extension_image(ev, a_empty, false, k0), !a_empty, true});
    }
  } else {
    throw DomainError("eee chain: word is not right special: " + v);
  }
  for (auto& img : out) img.diag.word = img.w;
  return out;
}

ChainEntry chain_entry(const std::vector<long>& ks, size_t shift, long m) {
  long k0 = ks.at(shift);
  ChainEntry e;
  if (m == 0) {
    long k1 = ks.at(shift + 1);
    e.diag_plus = eee_empty_diagram(k0, k1);
    if (k0 == 0) {
      e.w_minus.clear();
      e.diag_minus = e.diag_plus;
    } else {
      e.w_minus = run_of('1', k0);
      e.diag_minus = eee_age0_diagram(k0, k0, k1);
      e.b_minus_is_1k0 = true;
    }
    return e;
  }
  if (m == 1) {
    long k1 = ks.at(shift + 1), k2 = ks.at(shift + 2);
    e.w_plus = run_of('1', k0) + '3';
    e.diag_plus = eee_w1_plus_diagram(k0, k1, k2);
    e.a_is_13 = true;
    if (k1 == 0) {
      e.w_minus = e.w_plus;
      e.diag_minus = e.diag_plus;
    } else {
      e.w_minus = e.w_plus + run_of('2', k1);
      e.diag_minus = eee_w1_minus_diagram(k0, k1, k2);
    }
    return e;
  }
  ChainEntry prev = chain_entry(ks, shift + 1, m - 1);
  Substitution g = gauss_substitution(k0, eee_triple());
  if (prev.single()) {
    auto imgs = pull_through(prev.w_plus, prev.diag_plus, k0, g);
    e.w_plus = imgs[0].w;
    e.diag_plus = imgs[0].diag;
    e.a_is_13 = imgs[0].a13;
    e.b_plus_is_1k0 = imgs[0].b1k0;
    const PullImage& minus = imgs.size() == 2 ? imgs[1] : imgs[0];
    e.w_minus = minus.w;
    e.diag_minus = minus.diag;
    e.b_minus_is_1k0 = minus.b1k0;
    return e;
  }
  auto i1 = pull_through(prev.w_plus, prev.diag_plus, k0, g);
  auto i2 = pull_through(prev.w_minus, prev.diag_minus, k0, g);
  if (i1.size() != 1 || i2.size() != 1 || i1[0].a13 != i2[0].a13) {
    throw DomainError("eee chain: twin pair did not pull to a twin pair");
  }
  e.w_plus = i1[0].w;
  e.diag_plus = i1[0].diag;
  e.w_minus = i2[0].w;
  e.diag_minus = i2[0].diag;
  e.a_is_13 = i1[0].a13;
  e.b_plus_is_1k0 = i1[0].b1k0;
  e.b_minus_is_1k0 = i2[0].b1k0;
  return e;
}

}  // namespace

std::vector<ChainEntry> eee_build_chain(const std::vector<long>& ks, long n_max) {
  if (ks.size() < 4) throw DomainError("eee_build_chain: need at least 4 Gauss digits");
  std::vector<ChainEntry> out;
  long m = 0;
  while (true) {
    out.push_back(chain_entry(ks, 0, m));
    if (static_cast<long>(out.back().w_plus.size()) > n_max) break;
    ++m;
    if (2 * m + 4 > static_cast<long>(ks.size())) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

EeeCertificate certify_eee(const std::vector<long>& ks, int n_max) {
  if (n_max < 2) throw DomainError("certify_eee: n_max must be >= 2");
  auto seq = CodingSeq::gauss(ks);
  auto sample = expand_language_sample(seq, eee_triple(), n_max + 2);
  if (sample.reliable_window() < n_max + 2) {
    throw WindowError("certify_eee: window " + std::to_string(sample.reliable_window()) +
                      " is too small for n_max " + std::to_string(n_max) +
                      "; use a longer coding");
  }

  EeeCertificate cert;
  cert.n_max = n_max;
  cert.profile = complexity_profile(sample, n_max);
  auto fail = [&cert](std::string msg) {
    if (cert.failures.size() < 32) cert.failures.push_back(std::move(msg));
  };

  // (i) complexity bounds and increments
  cert.bounds_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    long p = cert.profile[static_cast<size_t>(n)];
    if (p < 2L * n + 1 || p > 3L * n) {
      cert.bounds_ok = false;
      fail("bounds: p(" + std::to_string(n) + ") = " + std::to_string(p));
    }
  }
  for (int n = 0; n < n_max; ++n) {
    long d = cert.profile[static_cast<size_t>(n) + 1] - cert.profile[static_cast<size_t>(n)];
    if (d != 2 && d != 3) {
      cert.bounds_ok = false;
      fail("bounds: p(n+1)-p(n) = " + std::to_string(d) + " at n = " + std::to_string(n));
    }
  }

  std::vector<ChainEntry> chain;
  try {
    chain = eee_build_chain(ks, n_max);
  } catch (const std::exception& e) {
    fail(std::string("chain construction failed: ") + e.what());
    return cert;
  }
  cert.chain_entries = static_cast<long>(chain.size());

  // (iii) m-values and diagram agreement with the sampled language
  cert.m_values_ok = true;
  absl::flat_hash_map<Word, const ExtensionDiagram*> chain_words;
  for (const auto& e : chain) {
    int mp = e.m_plus(), mm = e.m_minus();
    if (mp < 0 || mp > 1 || mm != -mp) {
      cert.m_values_ok = false;
      fail("m-values: (" + std::to_string(mp) + "," + std::to_string(mm) + ") at |w+| = " +
           std::to_string(e.w_plus.size()));
    }
    chain_words[e.w_plus] = &e.diag_plus;
    chain_words[e.w_minus] = &e.diag_minus;
  }
  for (const auto& [w, diag] : chain_words) {
    if (static_cast<int>(w.size()) + 2 > sample.reliable_window()) continue;
    if (!sample.contains(w)) {
      cert.m_values_ok = false;
      fail("chain word is not a factor: " + (w.empty() ? Word("eps") : w));
      continue;
    }
    if (extension_diagram(sample, w).cells != diag->cells) {
      cert.m_values_ok = false;
      fail("chain diagram mismatch at: " + (w.empty() ? Word("eps") : w));
    }
  }

  // (ii) every non-neutral bispecial below n_max is a chain word
  auto bis = enumerate_bispecial(sample, n_max);
  cert.bispecials_checked = static_cast<long>(bis.size());
  cert.coverage_ok = true;
  for (const auto& be : bis) {
    if (be.m != 0 && !chain_words.contains(be.word)) {
      cert.coverage_ok = false;
      fail("non-neutral bispecial missing from chain: " + be.word);
    }
  }

  // (iv) interleaving of the twin pairs
  cert.interleaving_ok = true;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].w_plus.size() > chain[i].w_minus.size()) {
      cert.interleaving_ok = false;
      fail("interleaving: |w+| > |w-| at generation " + std::to_string(i));
    }
    if (i + 1 < chain.size() &&
        chain[i].w_minus.size() >= chain[i + 1].w_plus.size()) {
      cert.interleaving_ok = false;
      fail("interleaving: generations " + std::to_string(i) + "," + std::to_string(i + 1) +
           " overlap");
    }
  }

  // (v) prefix parity along the chain
  cert.parity_ok = true;
  for (size_t i = 1; i < chain.size(); ++i) {
    if (chain[i].a_is_13 != (i % 2 == 1)) {
      cert.parity_ok = false;
      fail("parity: prefix flag wrong at generation " + std::to_string(i));
    }
  }
  return cert;
}

}  // namespace trip
