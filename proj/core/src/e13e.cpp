#include "trip/e13e.hpp"

#include <algorithm>
#include <bit>

#include <absl/container/flat_hash_map.h>

namespace trip {

const TripTriple& e13e_triple() {
  static const TripTriple t{Perm3{}, *Perm3::parse("13"), Perm3{}};
  return t;
}

// ---------------------------------------------------------------------------
// Conditions and the two-letter table
// ---------------------------------------------------------------------------

E13eConditions e13e_conditions(const E13eInput& input) {
  if (input.period.empty()) throw DomainError("e13e_conditions: period must be nonempty");
  const auto& pre = input.prefix;
  const auto& per = input.period;
  size_t start = pre.size();
  bool odd_period = per.size() % 2 == 1;
  auto all_zero = [&](size_t par) {
    for (size_t i = 0; i < pre.size(); ++i) {
      if (i % 2 == par && pre[i] != 0) return false;
    }
    for (size_t j = 0; j < per.size(); ++j) {
      if ((start + j) % 2 == par && per[j] != 0) return false;
      // an odd period drifts across parities, so every entry must vanish
      if (odd_period && (start + j) % 2 != par && per[j] != 0) return false;
    }
    return true;
  };
  auto cofinitely_zero = [&](size_t par) {
    for (size_t j = 0; j < per.size(); ++j) {
      if ((start + j) % 2 == par && per[j] != 0) return false;
      if (odd_period && per[j] != 0) return false;
    }
    return true;
  };
  E13eConditions c;
  c.all_even_zero = all_zero(0);
  c.all_odd_zero = all_zero(1);
  c.cofinitely_even_zero = cofinitely_zero(0);
  c.cofinitely_odd_zero = cofinitely_zero(1);
  return c;
}

std::vector<Word> e13e_two_letter_words(long k0, const E13eConditions& c) {
  std::vector<Word> out{"13", "32"};
  out.push_back(k0 >= 1 ? "11" : "23");
  if (!c.all_even_zero) out.push_back("21");
  if (!c.all_odd_zero) out.push_back("31");
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// The right-special chains
// ---------------------------------------------------------------------------

namespace {

/// A chain word tracked as a suffix: at most `cap` trailing characters plus
/// the length, saturating at cap+1 for anything longer.
struct SuffixWord {
  Word s;
  long len = 0;
  bool exact(long cap) const { return len <= cap && len == static_cast<long>(s.size()); }
  friend bool operator==(const SuffixWord&, const SuffixWord&) = default;
};

}  // namespace

E13eChains e13e_chains(const std::vector<long>& ks, long max_len) {
  if (ks.size() < 4) throw DomainError("e13e_chains: need at least 4 Gauss digits");
  const long big_m = static_cast<long>(ks.size()) - 1;
  const long cap = max_len + 2;

  absl::flat_hash_map<long, Substitution> cache;
  auto gsub = [&](long k) -> const Substitution& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, gauss_substitution(k, e13e_triple())).first;
    return it->second;
  };
  auto cap_suffix = [&](Word w) {
    if (static_cast<long>(w.size()) > cap) w.erase(0, w.size() - static_cast<size_t>(cap));
    return w;
  };
  auto apply = [&](const Substitution& g, const SuffixWord& sw) -> SuffixWord {
    Word out = g.apply(sw.s);
    long out_len =
        sw.exact(cap) ? std::min<long>(static_cast<long>(out.size()), cap + 1) : cap + 1;
    return {cap_suffix(std::move(out)), out_len};
  };
  auto append_ones = [&](SuffixWord sw, long k) -> SuffixWord {
    sw.s.append(static_cast<size_t>(k), '1');
    long len = std::min<long>(sw.len + k, cap + 1);
    return {cap_suffix(std::move(sw.s)), len};
  };

  std::vector<SuffixWord> v(static_cast<size_t>(big_m)), w(static_cast<size_t>(big_m));
  std::vector<SuffixWord> vs{SuffixWord{}}, ws{SuffixWord{}};
  auto resolved = [&](const std::vector<SuffixWord>& seq) {
    if (seq.back().len > max_len) return true;
    size_t n = seq.size();
    return n >= 4 && seq[n - 1] == seq[n - 2] && seq[n - 1] == seq[n - 3] &&
           seq[n - 1] == seq[n - 4];
  };

  long m = 0;
  while (!(resolved(vs) && resolved(ws))) {
    ++m;
    if (m >= big_m - 1) throw DomainError("e13e_chains: coding too short to resolve the chains");
    auto width = static_cast<size_t>(big_m - m);
    std::vector<SuffixWord> nv(width), nw(width);
    for (size_t s = 0; s < width; ++s) {
      nv[s] = append_ones(apply(gsub(ks[s]), w[s + 1]), ks[s]);
    }
    for (size_t s = 0; s < width; ++s) {
      nw[s] = apply(gsub(ks[s]), s + 1 < width ? nv[s + 1] : SuffixWord{});
    }
    vs.push_back(nv[0]);
    ws.push_back(nw[0]);
    v = std::move(nv);
    w = std::move(nw);
  }

  auto limit = [&](const std::vector<SuffixWord>& seq) -> std::optional<long> {
    if (seq.back().len > max_len) return std::nullopt;
    size_t n = seq.size();
    if (!(seq[n - 1] == seq[n - 2] && seq[n - 1] == seq[n - 3])) {
      throw DomainError("e13e_chains: chain did not stabilize cleanly");
    }
    return seq.back().len;
  };
  auto realized = [&](const std::vector<SuffixWord>& seq) {
    std::vector<Word> out;
    for (const auto& e : seq) {
      if (e.len <= max_len && e.exact(cap) &&
          std::find(out.begin(), out.end(), e.s) == out.end()) {
        out.push_back(e.s);
      }
    }
    return out;
  };

  E13eChains res;
  res.v_limit = limit(vs);
  res.w_limit = limit(ws);
  res.v_words = realized(vs);
  res.w_words = realized(ws);
  res.v_tail = vs.back().s;
  res.w_tail = ws.back().s;
  return res;
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

std::vector<long> e13e_predicted_profile(const std::optional<long>& lv,
                                         const std::optional<long>& lw, int n_max) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(n_max));
  long p = 3;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(p);
    p += (!lv || n <= *lv ? 1 : 0) + (!lw || n <= *lw ? 1 : 0);
  }
  return out;
}

std::vector<long> e13e_min_form(const std::optional<long>& lv, const std::optional<long>& lw,
                                int n_max) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    long p = 2 * n + 1;
    if (lv && lw) {
      p = std::min(p, n + std::min(*lv, *lw) + 2);
      p = std::min(p, *lv + *lw + 3);
    } else if (lv || lw) {
      p = std::min(p, n + (lv ? *lv : *lw) + 2);
    }
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Full analysis
// ---------------------------------------------------------------------------

namespace {

/// Right-special factors of length n with their extension sets (as masks).
absl::flat_hash_map<Word, int> right_specials(const LanguageSample& L, int n) {
  absl::flat_hash_map<Word, int> exts;
  L.factors().for_each(n + 1, [&](std::string_view f) {
    exts[Word(f.substr(0, static_cast<size_t>(n)))] |= 1 << (f.back() - '1');
  });
  absl::flat_hash_map<Word, int> out;
  for (const auto& [u, mask] : exts) {
    if (std::popcount(static_cast<unsigned>(mask)) >= 2) out.emplace(u, mask);
  }
  return out;
}

bool is_tail_suffix(const Word& tail, const Word& u) {
  return u.size() <= tail.size() && tail.compare(tail.size() - u.size(), u.size(), u) == 0;
}

}  // namespace

E13eReport analyze_e13e(const E13eInput& input, int n_check) {
  if (n_check < 8) throw DomainError("analyze_e13e: n_check must be >= 8");
  if (input.period.empty()) throw DomainError("analyze_e13e: period must be nonempty");

  // Materialize enough digits for both the sampler and the chain resolution.
  size_t want = std::max<size_t>(3 * static_cast<size_t>(n_check), 120) + input.prefix.size();
  std::vector<long> ks = input.prefix;
  while (ks.size() < want) ks.insert(ks.end(), input.period.begin(), input.period.end());

  E13eReport rep;
  rep.n_check = n_check;
  auto fail = [&rep](std::string msg) {
    if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
  };

  auto sample = expand_language_sample(CodingSeq::gauss(ks), e13e_triple(), n_check + 2);
  if (sample.reliable_window() < n_check + 2) {
    throw WindowError("analyze_e13e: window " + std::to_string(sample.reliable_window()) +
                      " is too small for n_check " + std::to_string(n_check));
  }
  auto full_profile = complexity_profile(sample, n_check);
  rep.profile.assign(full_profile.begin() + 1, full_profile.end());

  auto chains = e13e_chains(ks, n_check + 5);
  rep.v_limit = chains.v_limit;
  rep.w_limit = chains.w_limit;
  rep.verdict = !rep.v_limit && !rep.w_limit ? "2n+1"
                : rep.v_limit && rep.w_limit ? "bounded"
                                             : "n+c";

  // Conditions vs chain finiteness.
  auto conds = e13e_conditions(input);
  rep.conditions_ok = true;
  if ((conds.all_even_zero && !conds.cofinitely_even_zero) ||
      (conds.all_odd_zero && !conds.cofinitely_odd_zero)) {
    rep.conditions_ok = false;
    fail("conditions: strict condition without its cofinite form");
  }
  if (rep.v_limit.has_value() != conds.cofinitely_even_zero) {
    rep.conditions_ok = false;
    fail("conditions: v-chain finiteness disagrees with cofinite even-vanishing");
  }
  if (rep.w_limit.has_value() != conds.cofinitely_odd_zero) {
    rep.conditions_ok = false;
    fail("conditions: w-chain finiteness disagrees with cofinite odd-vanishing");
  }

  // Chain entries: realized, right-special of the claimed kind, suffix-nested.
  rep.chains_ok = true;
  auto check_chain_words = [&](const std::vector<Word>& words, const Word& tail,
                               char kind) {
    for (size_t i = 0; i + 1 < words.size(); ++i) {
      if (!is_tail_suffix(words[i + 1], words[i])) {
        rep.chains_ok = false;
        fail(std::string("chains: ") + kind + "-chain is not suffix-nested");
      }
    }
    if (!words.empty() && !is_tail_suffix(tail, words.back())) {
      rep.chains_ok = false;
      fail(std::string("chains: ") + kind + "-tail does not extend the last entry");
    }
    for (const auto& u : words) {
      if (u.empty() || static_cast<int>(u.size()) + 2 > sample.reliable_window()) continue;
      char last = u.back();
      bool last_ok = kind == 'v' ? (last == '1' || last == '2') : last == '3';
      int want_mask = kind == 'v' ? 0b101 : 0b011;  // {1,3} vs {1,2}
      int mask = 0;
      for (int c = 1; c <= 3; ++c) {
        if (sample.contains(u + static_cast<char>('0' + c))) mask |= 1 << (c - 1);
      }
      if (!last_ok || !sample.contains(u) || mask != want_mask) {
        rep.chains_ok = false;
        fail(std::string("chains: ") + kind + "-entry not right-special as claimed: " + u);
      }
    }
  };
  check_chain_words(chains.v_words, chains.v_tail, 'v');
  check_chain_words(chains.w_words, chains.w_tail, 'w');

  // Every right-special factor is a tail suffix of an active chain, with
  // exactly two right extensions; counts match the limits.
  rep.rs_ok = true;
  for (int n = 1; n <= n_check; ++n) {
    auto rs = right_specials(sample, n);
    bool v_active = !rep.v_limit || n <= *rep.v_limit;
    bool w_active = !rep.w_limit || n <= *rep.w_limit;
    long expected = (v_active ? 1 : 0) + (w_active ? 1 : 0);
    if (static_cast<long>(rs.size()) != expected) {
      rep.rs_ok = false;
      fail("right-specials: count " + std::to_string(rs.size()) + " != " +
           std::to_string(expected) + " at n = " + std::to_string(n));
      continue;
    }
    for (const auto& [u, mask] : rs) {
      bool from_v = v_active && n <= static_cast<int>(chains.v_tail.size()) &&
                    is_tail_suffix(chains.v_tail, u);
      bool from_w = w_active && n <= static_cast<int>(chains.w_tail.size()) &&
                    is_tail_suffix(chains.w_tail, u);
      if (std::popcount(static_cast<unsigned>(mask)) != 2 || (!from_v && !from_w)) {
        rep.rs_ok = false;
        fail("right-specials: unexpected word at n = " + std::to_string(n) + ": " + u);
      }
    }
  }

  // Sampled profile == closed form == min form.
  auto closed = e13e_predicted_profile(rep.v_limit, rep.w_limit, n_check);
  auto minf = e13e_min_form(rep.v_limit, rep.w_limit, n_check);
  rep.profile_ok = rep.profile == closed && rep.profile == minf;
  if (!rep.profile_ok) {
    for (int n = 1; n <= n_check; ++n) {
      auto i = static_cast<size_t>(n - 1);
      if (rep.profile[i] != closed[i] || rep.profile[i] != minf[i]) {
        fail("profile: p(" + std::to_string(n) + ") = " + std::to_string(rep.profile[i]) +
             ", closed form " + std::to_string(closed[i]) + ", min form " +
             std::to_string(minf[i]));
        break;
      }
    }
  }

  // Empirical fit from the tail increment of the sampled profile.
  long n_last = n_check;
  long p_last = rep.profile.back();
  long d_last = p_last - rep.profile[static_cast<size_t>(n_check) - 2];
  rep.fit_ok = true;
  if (d_last == 0) {
    rep.fitted_plateau = p_last;
    if (!(rep.v_limit && rep.w_limit && p_last == *rep.v_limit + *rep.w_limit + 3)) {
      rep.fit_ok = false;
      fail("fit: plateau " + std::to_string(p_last) + " disagrees with Lv+Lw+3");
    }
  } else if (d_last == 1) {
    rep.fitted_c = p_last - n_last;
    long c1;
    if (rep.v_limit && rep.w_limit) {
      c1 = std::min(*rep.v_limit, *rep.w_limit) + 2;
    } else if (rep.v_limit || rep.w_limit) {
      c1 = (rep.v_limit ? *rep.v_limit : *rep.w_limit) + 2;
    } else {
      c1 = -1;
    }
    if (*rep.fitted_c != c1) {
      rep.fit_ok = false;
      fail("fit: slope-1 constant " + std::to_string(*rep.fitted_c) +
           " disagrees with min(Lv,Lw)+2");
    }
  } else if (d_last == 2) {
    if (p_last != 2 * n_last + 1) {
      rep.fit_ok = false;
      fail("fit: tail increment 2 but p(n) != 2n+1");
    }
  } else {
    rep.fit_ok = false;
    fail("fit: impossible tail increment " + std::to_string(d_last));
  }

  // Two-letter words.
  std::vector<Word> two;
  sample.factors().for_each(2, [&](std::string_view f) { two.emplace_back(f); });
  std::sort(two.begin(), two.end());
  auto expected_two = e13e_two_letter_words(ks[0], conds);
  rep.two_letter_ok = two == expected_two;
  if (!rep.two_letter_ok) {
    std::string got;
    for (const auto& t : two) got += t + " ";
    fail("two-letter words: got " + got);
  }
  return rep;
}

}  // namespace trip
