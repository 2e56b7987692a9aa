#include "trip/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace trip {

// ---------------------------------------------------------------------------
// Perm3
// ---------------------------------------------------------------------------

Perm3 Perm3::from_images(int i1, int i2, int i3) {
  std::array<int, 3> img{i1, i2, i3};
  std::array<int, 3> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw DomainError("Perm3::from_images: not a permutation of {1,2,3}");
  }
  Perm3 p;
  p.img_ = img;
  return p;
}

Perm3 Perm3::inverse() const {
  Perm3 r;
  for (int i = 1; i <= 3; ++i) r.img_[static_cast<size_t>((*this)(i)-1)] = i;
  return r;
}

Perm3 compose(const Perm3& p, const Perm3& q) {
  return Perm3::from_images(p(q(1)), p(q(2)), p(q(3)));
}

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> k = {
      Perm3::from_images(1, 2, 3),  // e
      Perm3::from_images(2, 1, 3),  // (12)
      Perm3::from_images(3, 2, 1),  // (13)
      Perm3::from_images(1, 3, 2),  // (23)
      Perm3::from_images(2, 3, 1),  // (123): 1->2, 2->3, 3->1
      Perm3::from_images(3, 1, 2),  // (132): 1->3, 3->2, 2->1
  };
  return k;
}

std::string Perm3::name() const {
  static const std::array<std::string, 6> names = {"e",    "(12)",  "(13)",
                                                   "(23)", "(123)", "(132)"};
  const auto& ps = all();
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] == *this) return names[i];
  }
  return "?";  // unreachable: all() enumerates S3
}

std::optional<Perm3> Perm3::parse(std::string_view s) {
  std::string body{s};
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body == "e" || body.empty()) return Perm3{};
  if (body == "12") return Perm3::from_images(2, 1, 3);
  if (body == "13") return Perm3::from_images(3, 2, 1);
  if (body == "23") return Perm3::from_images(1, 3, 2);
  if (body == "123") return Perm3::from_images(2, 3, 1);
  if (body == "132") return Perm3::from_images(3, 1, 2);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Perm2
// ---------------------------------------------------------------------------

const std::array<Perm2, 2>& Perm2::all() {
  static const std::array<Perm2, 2> k = {Perm2{false}, Perm2{true}};
  return k;
}

std::optional<Perm2> Perm2::parse(std::string_view s) {
  std::string body{s};
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body == "e" || body.empty()) return Perm2{false};
  if (body == "12") return Perm2{true};
  return std::nullopt;
}

Perm2 compose(const Perm2& p, const Perm2& q) {
  return Perm2{p.is_swap() != q.is_swap()};
}

// ---------------------------------------------------------------------------
// Mat3 / Mat2
// ---------------------------------------------------------------------------

Mat3 Mat3::identity() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

std::array<Int, 3> operator*(const Mat3& m, const std::array<Int, 3>& v) {
  std::array<Int, 3> r{};
  for (int i = 0; i < 3; ++i) {
    Int s = 0;
    for (int k = 0; k < 3; ++k) s += m(i, k) * v[static_cast<size_t>(k)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

Int determinant(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool strictly_positive(const Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (m(i, j) <= 0) return false;
    }
  }
  return true;
}

Mat3 unimodular_inverse(const Mat3& m) {
  const Int det = determinant(m);
  if (det != 1 && det != -1) {
    throw DomainError("unimodular_inverse: determinant is not +/-1");
  }
  // Adjugate divided by the determinant; with det = +/-1 this stays integral.
  Mat3 adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = -(m(0, 1) * m(2, 2) - m(0, 2) * m(2, 1));
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = -(m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0));
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = -(m(0, 0) * m(1, 2) - m(0, 2) * m(1, 0));
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = -(m(0, 0) * m(2, 1) - m(0, 1) * m(2, 0));
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Mat3 inv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) inv(i, j) = adj(i, j) * det;  // det = 1/det here
  }
  return inv;
}

Mat2 Mat2::identity() {
  Mat2 m;
  m(0, 0) = 1;
  m(1, 1) = 1;
  return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    }
  }
  return r;
}

Int determinant(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Mat2 unimodular_inverse(const Mat2& m) {
  const Int det = determinant(m);
  if (det != 1 && det != -1) {
    throw DomainError("unimodular_inverse: determinant is not +/-1");
  }
  Mat2 inv;
  inv(0, 0) = m(1, 1) * det;
  inv(0, 1) = -m(0, 1) * det;
  inv(1, 0) = -m(1, 0) * det;
  inv(1, 1) = m(0, 0) * det;
  return inv;
}

Mat3 perm_to_matrix(const Perm3& p) {
  Mat3 m;
  for (int i = 1; i <= 3; ++i) m(p(i) - 1, i - 1) = 1;
  return m;
}

Mat2 perm_to_matrix(const Perm2& p) {
  Mat2 m;
  for (int i = 1; i <= 2; ++i) m(p(i) - 1, i - 1) = 1;
  return m;
}

// ---------------------------------------------------------------------------
// TripTriple
// ---------------------------------------------------------------------------

std::string TripTriple::name() const {
  auto short_name = [](const Perm3& p) {
    std::string n = p.name();
    if (n.size() >= 2 && n.front() == '(' && n.back() == ')') {
      return n.substr(1, n.size() - 2);
    }
    return n;
  };
  return "(" + short_name(sigma) + "," + short_name(tau0) + "," + short_name(tau1) + ")";
}

std::optional<TripTriple> TripTriple::parse(std::string_view s) {
  std::string body{s};
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::array<std::string, 3> parts;
  size_t idx = 0, start = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      if (idx >= 3) return std::nullopt;
      parts[idx++] = body.substr(start, i - start);
      start = i + 1;
    }
  }
  if (idx != 3) return std::nullopt;
  auto a = Perm3::parse(parts[0]);
  auto b = Perm3::parse(parts[1]);
  auto c = Perm3::parse(parts[2]);
  if (!a || !b || !c) return std::nullopt;
  return TripTriple{*a, *b, *c};
}

std::vector<TripTriple> TripTriple::all() {
  std::vector<TripTriple> out;
  out.reserve(216);
  for (const auto& s : Perm3::all()) {
    for (const auto& t0 : Perm3::all()) {
      for (const auto& t1 : Perm3::all()) out.push_back(TripTriple{s, t0, t1});
    }
  }
  return out;
}

Mat3 farey_matrix(int branch, const TripTriple& t) {
  static const Mat3 f0 = [] {
    Mat3 m;
    m(0, 2) = 1;
    m(1, 0) = 1;
    m(2, 1) = 1;
    m(2, 2) = 1;
    return m;
  }();
  static const Mat3 f1 = [] {
    Mat3 m;
    m(0, 0) = 1;
    m(0, 2) = 1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    return m;
  }();
  if (branch != 0 && branch != 1) throw DomainError("farey_matrix: branch must be 0 or 1");
  const Mat3& base = branch == 0 ? f0 : f1;
  const Perm3& tau = branch == 0 ? t.tau0 : t.tau1;
  return perm_to_matrix(t.sigma) * base * perm_to_matrix(tau);
}

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d;          // truncates toward zero
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

std::optional<Rat> parse_rational(std::string_view s) {
  auto parse_int = [](std::string_view v, Int& out) -> bool {
    if (v.empty()) return false;
    size_t i = 0;
    bool neg = false;
    if (v[0] == '-' || v[0] == '+') {
      neg = v[0] == '-';
      i = 1;
      if (i == v.size()) return false;
    }
    Int acc = 0;
    for (; i < v.size(); ++i) {
      if (v[i] < '0' || v[i] > '9') return false;
      acc = acc * 10 + (v[i] - '0');
    }
    out = neg ? -acc : acc;
    return true;
  };
  const size_t slash = s.find('/');
  Int num, den = 1;
  if (!parse_int(slash == std::string_view::npos ? s : s.substr(0, slash), num)) {
    return std::nullopt;
  }
  if (slash != std::string_view::npos) {
    if (!parse_int(s.substr(slash + 1), den) || den == 0) return std::nullopt;
  }
  return Rat(num, den);
}

std::string rational_to_string(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

}  // namespace trip
