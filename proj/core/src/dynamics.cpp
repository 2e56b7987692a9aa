#include "trip/dynamics.hpp"

#include <array>
#include <limits>
#include <sstream>

namespace trip {

namespace {

std::array<Rat, 3> mat_inv_apply(const Mat3& m, const Point3& p) {
  // Solve m * q = p exactly: q = m^{-1} p with the integer inverse.
  const Mat3 inv = unimodular_inverse(m);
  std::array<Rat, 3> q;
  const std::array<Rat, 3> v{p.x, p.y, p.z};
  for (int i = 0; i < 3; ++i) {
    Rat s = 0;
    for (int k = 0; k < 3; ++k) s += Rat(inv(i, k)) * v[static_cast<size_t>(k)];
    q[static_cast<size_t>(i)] = s;
  }
  return q;
}

bool all_nonneg(const std::array<Rat, 3>& v) {
  return v[0] >= 0 && v[1] >= 0 && v[2] >= 0;
}

Point3 normalize(const std::array<Rat, 3>& v) {
  const Rat s = v[0] + v[1] + v[2];
  if (s == 0) throw DomainError("trip_step: zero renormalization denominator");
  return Point3{v[0] / s, v[1] / s, v[2] / s};
}

}  // namespace

// ---------------------------------------------------------------------------
// Point3
// ---------------------------------------------------------------------------

Point3 make_point(Rat x, Rat y, Rat z) {
  if (x < 0 || y < 0 || z < 0 || x + y + z != 1) {
    throw DomainError("make_point: not a point of the unit triangle");
  }
  return Point3{std::move(x), std::move(y), std::move(z)};
}

std::string Point3::to_string() const {
  return rational_to_string(x) + "," + rational_to_string(y) + "," + rational_to_string(z);
}

std::optional<Point3> Point3::parse(std::string_view s) {
  std::array<std::string_view, 3> parts;
  size_t idx = 0, start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (idx >= 3) return std::nullopt;
      parts[idx++] = s.substr(start, i - start);
      start = i + 1;
    }
  }
  if (idx != 3) return std::nullopt;
  auto x = parse_rational(parts[0]);
  auto y = parse_rational(parts[1]);
  auto z = parse_rational(parts[2]);
  if (!x || !y || !z) return std::nullopt;
  if (*x < 0 || *y < 0 || *z < 0 || *x + *y + *z != 1) return std::nullopt;
  return Point3{*x, *y, *z};
}

// ---------------------------------------------------------------------------
// Branch classification and stepping
// ---------------------------------------------------------------------------

int classify_branch(const Point3& p, const TripTriple& t) {
  if (p.x < 0 || p.y < 0 || p.z < 0 || p.x + p.y + p.z != 1) {
    throw DomainError("classify_branch: point outside the triangle");
  }
  // Try branch 1 first so that shared-boundary points resolve to 1.
  if (all_nonneg(mat_inv_apply(farey_matrix(1, t), p))) return 1;
  if (all_nonneg(mat_inv_apply(farey_matrix(0, t), p))) return 0;
  throw DomainError("classify_branch: point in neither branch domain");
}

Point3 trip_step(const Point3& p, const TripTriple& t) {
  const int i = classify_branch(p, t);
  return normalize(mat_inv_apply(farey_matrix(i, t), p));
}

GaussCode parse_gauss(const std::vector<int>& bits) {
  GaussCode g;
  long run = 0;
  for (int b : bits) {
    if (b == 1) {
      ++run;
    } else {
      g.ks.push_back(run);
      run = 0;
    }
  }
  g.truncated = !bits.empty() && bits.back() == 1;
  return g;
}

std::pair<FareyCode, GaussCode> code_point(const Point3& p, const TripTriple& t, int n) {
  FareyCode f;
  f.bits.reserve(static_cast<size_t>(n));
  Point3 q = p;
  for (int s = 0; s < n; ++s) {
    const int i = classify_branch(q, t);
    f.bits.push_back(i);
    q = normalize(mat_inv_apply(farey_matrix(i, t), q));
  }
  return {f, parse_gauss(f.bits)};
}

// ---------------------------------------------------------------------------
// Closed-form Gauss steps
// ---------------------------------------------------------------------------

namespace {

long floor_quotient(const Rat& x, const Rat& z) {
  const Int k = rat_floor(x / z);
  if (k > std::numeric_limits<long>::max()) {
    throw DomainError("gauss step: quotient exceeds representable range");
  }
  return k.convert_to<long>();
}

}  // namespace

std::pair<long, Point3> gauss_step_eee(const Point3& p) {
  if (p.z == 0) throw DomainError("gauss_step_eee: z = 0 (Gauss-undefined)");
  const long k = floor_quotient(p.x, p.z);
  const Rat d = p.y + p.z;
  return {k, Point3{p.y / d, ((k + 1) * p.z - p.x) / d, (p.x - k * p.z) / d}};
}

std::pair<long, Point3> gauss_step_e13e(const Point3& p) {
  if (p.z == 0) throw DomainError("gauss_step_e13e: z = 0 (Gauss-undefined)");
  const long k = floor_quotient(p.x, p.z);
  const Rat d = p.y + p.z;
  return {k, Point3{(p.x - k * p.z) / d, ((k + 1) * p.z - p.x) / d, p.y / d}};
}

// ---------------------------------------------------------------------------
// Regions / projections
// ---------------------------------------------------------------------------

Region region_of(const Point3& p) {
  if (p.z >= p.x + p.y) return Region::A;
  if (p.y >= p.z) return Region::B;
  return Region::C;
}

Rat e13e_projection(const Point3& p, Region which) {
  if (which == Region::A) {
    if (p.x + p.y == 0) throw DomainError("pi_A undefined at (0,0,1)");
    return p.y / (p.x + p.y);
  }
  if (which == Region::B) {
    if (p.x + p.z == 0) throw DomainError("pi_B undefined at (0,1,0)");
    return p.z / (p.x + p.z);
  }
  throw DomainError("e13e_projection: region C has no projection");
}

Rat interval_map(const Rat& gamma) {
  if (gamma <= 0 || gamma >= 1) throw DomainError("interval_map: gamma outside (0,1)");
  const Rat inv = 1 / gamma;
  return Rat(rat_ceil(inv)) - inv;
}

// ---------------------------------------------------------------------------
// Two-dimensional maps
// ---------------------------------------------------------------------------

namespace {

const Mat2& v_matrix() {
  static const Mat2 v = [] {
    Mat2 m;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    return m;
  }();
  return v;
}

Mat2 f2_matrix(int branch, const Triple2& t2) {
  static const Mat2 f0 = [] {
    Mat2 m;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    return m;
  }();
  static const Mat2 f1 = [] {
    Mat2 m;
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 1) = 1;
    return m;
  }();
  const Mat2& base = branch == 0 ? f0 : f1;
  const Perm2& tau = branch == 0 ? t2.tau0 : t2.tau1;
  return perm_to_matrix(t2.sigma) * base * perm_to_matrix(tau);
}

std::array<Rat, 2> mat2_apply(const Mat2& m, const std::array<Rat, 2>& v) {
  return {Rat(m(0, 0)) * v[0] + Rat(m(0, 1)) * v[1],
          Rat(m(1, 0)) * v[0] + Rat(m(1, 1)) * v[1]};
}

}  // namespace

int r2_classify(const Point2& p, const Triple2& t2) {
  const std::array<Rat, 2> v{p.x, p.z};
  for (int i : {1, 0}) {  // branch 1 first: boundary tie-break
    const Mat2 cone = v_matrix() * f2_matrix(i, t2);
    const auto c = mat2_apply(unimodular_inverse(cone), v);
    if (c[0] >= 0 && c[1] >= 0) return i;
  }
  throw DomainError("r2_classify: point outside the cone");
}

std::pair<int, Point2> r2_step(const Point2& p, const Triple2& t2) {
  const int i = r2_classify(p, t2);
  const Mat2 m = v_matrix() * unimodular_inverse(f2_matrix(i, t2)) * unimodular_inverse(v_matrix());
  const auto q = mat2_apply(m, {p.x, p.z});
  const Rat s = q[0] + q[1];
  if (s == 0) throw DomainError("r2_step: zero renormalization denominator");
  return {i, Point2{q[0] / s, q[1] / s}};
}

// ---------------------------------------------------------------------------
// Hidden-plane integer orbit
// ---------------------------------------------------------------------------

HiddenOutcome hidden_r2_orbit(IntOrbitState s, long max_steps) {
  if (s.x < 0 || s.y < 0 || s.z < 0) {
    throw DomainError("hidden_r2_orbit: coordinates must be nonnegative");
  }
  for (long n = 0; n <= max_steps; ++n) {
    if (s.y > s.z) return {HiddenOutcome::Kind::ReachedYgtZ, n};
    if (s.x == 0 || s.y == 0 || s.z == 0) return {HiddenOutcome::Kind::HitZero, n};
    const Int k = s.x / s.z;
    Int nx = s.x - k * s.z;
    Int ny = (k + 1) * s.z - s.x;
    s = IntOrbitState{std::move(nx), std::move(ny), std::move(s.y)};
  }
  return {HiddenOutcome::Kind::Exhausted, max_steps};
}

}  // namespace trip
