// Exact orbits of the triangle-partition maps on the projective triangle:
// branch classification, Farey/Gauss coding of points, closed-form Gauss
// steps for the (e,e,e) and (e,13,e) maps, the eight two-dimensional maps,
// and the unnormalized integer orbit used by the hidden-plane experiment.
//
// All arithmetic is exact rational; codes are bit-reproducible.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trip/algebra.hpp"

namespace trip {

/// A point of the triangle Delta = {x,y,z >= 0, x+y+z = 1}.
struct Point3 {
  Rat x, y, z;

  friend bool operator==(const Point3&, const Point3&) = default;
  std::string to_string() const;  // "num/den,num/den,num/den"
  static std::optional<Point3> parse(std::string_view s);
};

/// Validate membership in Delta; throws DomainError otherwise.
Point3 make_point(Rat x, Rat y, Rat z);

/// Binary itinerary of a point under a map, with a truncation marker for
/// orbits cut short (the marker is always false for full-length codes).
struct FareyCode {
  std::vector<int> bits;
  bool truncated = false;
};

/// Run-length form of a Farey code: bits 1^{k0} 0 1^{k1} 0 ... parse to
/// ks = k0,k1,...  A trailing run of 1s without its terminating 0 does not
/// determine its k and is dropped, setting `truncated`.
struct GaussCode {
  std::vector<long> ks;
  bool truncated = false;
};

GaussCode parse_gauss(const std::vector<int>& bits);

/// Which branch domain the point lies in: solves for the barycentric
/// coordinates of p in the columns of F_i(t) and picks the branch with all
/// coordinates >= 0.  Boundary points satisfy both and resolve to branch 1
/// (the deterministic tie-break used everywhere in this library).
int classify_branch(const Point3& p, const TripTriple& t);

/// One projectively-renormalized step of T(t).  Throws DomainError when the
/// renormalization denominator vanishes (the measure-zero undefined set).
Point3 trip_step(const Point3& p, const TripTriple& t);

/// First n itinerary symbols of p under T(t), plus the Gauss reparse.
std::pair<FareyCode, GaussCode> code_point(const Point3& p, const TripTriple& t, int n);

/// Closed-form Gauss step of the (e,e,e) map:
///   k = floor(x/z),  (x,y,z) -> (y, (k+1)z - x, x - kz) / (y+z).
/// Equals k+1 composed trip_steps (k ones then one zero).  Throws on z = 0.
std::pair<long, Point3> gauss_step_eee(const Point3& p);

/// Closed-form Gauss step of the (e,13,e) map:
///   k = floor(x/z),  (x,y,z) -> (x - kz, (k+1)z - x, y) / (y+z).
std::pair<long, Point3> gauss_step_e13e(const Point3& p);

// ---------------------------------------------------------------------------
// Regions and the interval reduction of the (e,13,e) map
// ---------------------------------------------------------------------------

enum class Region { A, B, C };

/// A = {z >= x+y}, B = {y >= z} minus A, C = the rest.
Region region_of(const Point3& p);

/// pi_A(x,y,z) = y/(x+y) on A (undefined at (0,0,1));
/// pi_B(x,y,z) = z/(x+z) on B (undefined at (0,1,0)).
Rat e13e_projection(const Point3& p, Region which);

/// The interval map F(gamma) = ceil(1/gamma) - 1/gamma on (0,1).
Rat interval_map(const Rat& gamma);

// ---------------------------------------------------------------------------
// Two-dimensional maps (8 of them, indexed by S2 x S2 x S2)
// ---------------------------------------------------------------------------

/// A point of the planar cone spanned by v0 = (0,1), v1 = (1,1), in (x,z)
/// coordinates.  gamma = x/z parametrizes the cone section.
struct Point2 {
  Rat x, z;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Triple2 {
  Perm2 sigma, tau0, tau1;
};

/// The branch containing p: membership in the subcone spanned by the columns
/// of V*F_i(t2) where V = [[0,1],[1,1]]; the shared boundary resolves to
/// branch 1, matching the 3-dimensional tie-break.
int r2_classify(const Point2& p, const Triple2& t2);

/// One renormalized step: branch i applies V * F_i(t2)^{-1} * V^{-1},
/// then scales so x+z = 1 (input (0,0) rejected).
std::pair<int, Point2> r2_step(const Point2& p, const Triple2& t2);

// ---------------------------------------------------------------------------
// Hidden-plane integer orbit
// ---------------------------------------------------------------------------

struct IntOrbitState {
  Int x, y, z;
};

struct HiddenOutcome {
  enum class Kind { ReachedYgtZ, HitZero, Exhausted };
  Kind kind;
  long steps;

  friend bool operator==(const HiddenOutcome&, const HiddenOutcome&) = default;
};

/// Iterates the unnormalized map (x,y,z) -> (x - kz, (k+1)z - x, y) with
/// k = floor(x/z), stopping as soon as y > z (ReachedYgtZ), any coordinate
/// is zero (HitZero), or max_steps is exceeded (Exhausted).  The y > z test
/// precedes the zero test at every step, including step 0.
HiddenOutcome hidden_r2_orbit(IntOrbitState s, long max_steps);

}  // namespace trip
