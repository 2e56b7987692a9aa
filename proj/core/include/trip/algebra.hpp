// Permutations of {1,2,3} and {1,2}, exact integer matrices, and
// arbitrary-precision rationals.  These are the algebraic primitives the
// triangle-partition maps are built from: every permutation doubles as a 0/1
// matrix, the two Farey matrices F0/F1 generate all branch matrices, and all
// point arithmetic is exact.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trip {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an argument is outside an operation's documented domain
/// (point outside the triangle, non-unimodular matrix, malformed input...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A permutation of {1,2,3}.  image()[i-1] is the image of i.
/// Composition convention throughout the library: compose(p, q) applies q
/// first, then p -- matching how sigma . S . tau expressions are read.
class Perm3 {
 public:
  constexpr Perm3() : img_{1, 2, 3} {}
  static Perm3 from_images(int i1, int i2, int i3);

  int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
  const std::array<int, 3>& image() const { return img_; }

  Perm3 inverse() const;
  bool is_identity() const { return img_ == std::array<int, 3>{1, 2, 3}; }

  friend bool operator==(const Perm3&, const Perm3&) = default;
  friend bool operator<(const Perm3& a, const Perm3& b) { return a.img_ < b.img_; }

  /// All six elements, in the fixed order e,(12),(13),(23),(123),(132).
  static const std::array<Perm3, 6>& all();

  /// Cycle-notation name: "e", "(12)", "(13)", "(23)", "(123)", "(132)".
  std::string name() const;
  /// Parse cycle notation; also accepts the bare forms "12", "123", ...
  static std::optional<Perm3> parse(std::string_view s);

 private:
  constexpr Perm3(int a, int b, int c) : img_{a, b, c} {}
  std::array<int, 3> img_;
};

/// compose(p, q): apply q first, then p.
Perm3 compose(const Perm3& p, const Perm3& q);

/// A permutation of {1,2}; the two-dimensional maps use triples of these.
class Perm2 {
 public:
  constexpr Perm2() : swap_(false) {}
  explicit constexpr Perm2(bool swap) : swap_(swap) {}

  int operator()(int i) const { return swap_ ? 3 - i : i; }
  bool is_swap() const { return swap_; }

  friend bool operator==(const Perm2&, const Perm2&) = default;

  static const std::array<Perm2, 2>& all();
  std::string name() const { return swap_ ? "(12)" : "e"; }
  static std::optional<Perm2> parse(std::string_view s);

 private:
  bool swap_;
};

Perm2 compose(const Perm2& p, const Perm2& q);

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

/// 3x3 matrix with arbitrary-precision integer entries.  Entries are (row,
/// col) indexed from 0.  Products of branch matrices along long codings grow
/// exponentially, hence the big-integer entries.
struct Mat3 {
  std::array<std::array<Int, 3>, 3> a{};

  static Mat3 identity();
  static Mat3 zero() { return Mat3{}; }

  Int& operator()(int r, int c) { return a[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  const Int& operator()(int r, int c) const {
    return a[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 operator*(const Mat3& x, const Mat3& y);
std::array<Int, 3> operator*(const Mat3& m, const std::array<Int, 3>& v);
Int determinant(const Mat3& m);
bool strictly_positive(const Mat3& m);

/// Exact inverse of a matrix with determinant +/-1.
/// Throws DomainError if the matrix is not unimodular.
Mat3 unimodular_inverse(const Mat3& m);

/// 2x2 integer matrix for the two-dimensional map family.
struct Mat2 {
  std::array<std::array<Int, 2>, 2> a{};

  static Mat2 identity();
  Int& operator()(int r, int c) { return a[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  const Int& operator()(int r, int c) const {
    return a[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Int determinant(const Mat2& m);
Mat2 unimodular_inverse(const Mat2& m);

/// 0/1 matrix of a permutation: column i has its 1 in row p(i), so that the
/// matrix sends e_i to e_{p(i)} and perm_to_matrix(compose(p,q)) equals
/// perm_to_matrix(p) * perm_to_matrix(q).
Mat3 perm_to_matrix(const Perm3& p);
Mat2 perm_to_matrix(const Perm2& p);

// ---------------------------------------------------------------------------
// The map family index
// ---------------------------------------------------------------------------

/// One of the 216 maps T(sigma, tau0, tau1).
struct TripTriple {
  Perm3 sigma, tau0, tau1;

  friend bool operator==(const TripTriple&, const TripTriple&) = default;
  friend bool operator<(const TripTriple& a, const TripTriple& b) {
    if (!(a.sigma == b.sigma)) return a.sigma < b.sigma;
    if (!(a.tau0 == b.tau0)) return a.tau0 < b.tau0;
    return a.tau1 < b.tau1;
  }

  std::string name() const;  // "(e,13,e)"
  static std::optional<TripTriple> parse(std::string_view s);
  static std::vector<TripTriple> all();  // all 216, in Perm3::all() order
};

/// The defining branch matrix F_i(sigma,tau0,tau1) = sigma * F_i * tau_i,
/// where F_0 = [[0,0,1],[1,0,0],[0,1,1]] and F_1 = [[1,0,1],[0,1,0],[0,0,1]].
/// (tau_0 pairs with F_0 and tau_1 with F_1; this is the convention under
/// which the substitution abelianizations reproduce these matrices.)
Mat3 farey_matrix(int branch, const TripTriple& t);

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

/// Floor of a rational number as a big integer.
Int rat_floor(const Rat& q);
/// Ceiling of a rational number as a big integer.
Int rat_ceil(const Rat& q);

/// Parse "3/7" or "2" into an exact rational; nullopt on malformed input.
std::optional<Rat> parse_rational(std::string_view s);
/// Render as "num/den" ("num" when the denominator is 1).
std::string rational_to_string(const Rat& q);

}  // namespace trip
