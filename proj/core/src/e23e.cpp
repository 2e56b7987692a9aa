#include "trip/e23e.hpp"

namespace trip {

const TripTriple& e23e_triple() {
  static const TripTriple t{Perm3{}, *Perm3::parse("23"), Perm3{}};
  return t;
}

std::array<Word, 3> e23e_double_images(long j, long k) {
  auto run = [](long n, char c) { return Word(static_cast<size_t>(n), c); };
  return {run(j + 1, '1') + '3', run(k + 1, '2') + run(j, '1') + '3',
          run(k, '2') + run(j, '1') + '3'};
}

std::optional<Word> e23e_parse_middle(std::string_view mid, long j, long k) {
  auto img = e23e_double_images(j, k);
  Word v;
  size_t i = 0;
  while (i < mid.size()) {
    size_t t = mid.find('3', i);
    if (t == std::string_view::npos) return std::nullopt;
    std::string_view piece = mid.substr(i, t + 1 - i);
    if (piece == img[0]) {
      v += '1';
    } else if (piece == img[1]) {
      v += '2';
    } else if (piece == img[2]) {
      v += '3';
    } else {
      return std::nullopt;
    }
    i = t + 1;
  }
  return v;
}

std::optional<E23eAntecedent> e23e_antecedent(const Word& w, long j, long k) {
  size_t f = w.find('3');
  if (f == Word::npos) return std::nullopt;
  size_t l = w.rfind('3');
  auto v = e23e_parse_middle(std::string_view(w).substr(f + 1, l - f), j, k);
  if (!v) return std::nullopt;
  return E23eAntecedent{w.substr(0, f + 1), std::move(*v), w.substr(l + 1)};
}

std::array<int, 4> e23e_alpha_left(const Word& a, long j, long k) {
  Word a13 = Word(static_cast<size_t>(j), '1') + '3';
  if (k == 0) {
    if (a != a13) throw DomainError("e23e_alpha_left: unexpected prefix " + a);
    return {0, 1, 2, 3};
  }
  if (a == a13) return {0, 1, 2, 2};
  if (a == Word(static_cast<size_t>(k), '2') + a13) return {0, 0, 2, 3};
  throw DomainError("e23e_alpha_left: unexpected prefix " + a);
}

std::array<int, 4> e23e_alpha_right(const Word& b, long j, long k) {
  if (b.empty()) {
    if (k >= 1) return {0, 1, 2, 2};
    return j == 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 1, 2, 1};
  }
  if (k == 0) {
    if (j < 1 || b != Word(static_cast<size_t>(j), '1')) {
      throw DomainError("e23e_alpha_right: unexpected suffix " + b);
    }
    return {0, 1, 0, 3};
  }
  if (b != Word(static_cast<size_t>(k), '2')) {
    throw DomainError("e23e_alpha_right: unexpected suffix " + b);
  }
  return j == 0 ? std::array<int, 4>{0, 0, 2, 3} : std::array<int, 4>{0, 0, 2, 1};
}

ExtensionDiagram e23e_extension_image(const ExtensionDiagram& ev, const std::array<int, 4>& left,
                                      const std::array<int, 4>& right) {
  ExtensionDiagram out;
  for (int x = 1; x <= 3; ++x) {
    for (int y = 1; y <= 3; ++y) {
      if (!ev.has(x, y)) continue;
      int nx = left[static_cast<size_t>(x)];
      int ny = right[static_cast<size_t>(y)];
      if (nx != 0 && ny != 0) out.set_cell(nx, ny);
    }
  }
  return out;
}

E23eReport check_e23e(const std::vector<std::pair<long, long>>& pairs, int n_max) {
  if (n_max < 2) throw DomainError("check_e23e: n_max must be >= 2");
  auto seq = CodingSeq::double_gauss(pairs);

  E23eReport rep;
  rep.n_max = n_max;
  auto fail = [&rep](std::string msg) {
    if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
  };

  auto sample = expand_language_sample(seq, e23e_triple(), n_max + 2);
  if (sample.reliable_window() < n_max) {
    throw WindowError("check_e23e: window " + std::to_string(sample.reliable_window()) +
                      " is too small for n_max " + std::to_string(n_max));
  }
  auto full = complexity_profile(sample, n_max);
  rep.profile.assign(full.begin() + 1, full.end());

  Mat3 prod = Mat3::identity();
  for (const auto& s : coding_substitutions(seq, e23e_triple())) {
    prod = prod * abelianize_substitution(s);
  }
  rep.word_len = prod(0, 0) + prod(1, 0) + prod(2, 0);

  rep.bound_ok = true;
  rep.delta_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    long p = rep.profile[static_cast<size_t>(n - 1)];
    if (p > 3 * n) {
      rep.bound_ok = false;
      fail("bound: p(" + std::to_string(n) + ") = " + std::to_string(p) + " exceeds 3n");
    }
    if (n >= 2) {
      long d = p - rep.profile[static_cast<size_t>(n - 2)];
      if (d < 0 || d > 3) {
        rep.delta_ok = false;
        fail("delta: p(" + std::to_string(n) + ") - p(" + std::to_string(n - 1) + ") = " +
             std::to_string(d));
      }
    }
  }
  return rep;
}

}  // namespace trip
