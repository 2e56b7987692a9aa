#include "trip/render.hpp"

#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

namespace trip {

std::string render_mode_name(RenderMode m) {
  switch (m) {
    case RenderMode::kFarey: return "farey";
    case RenderMode::kGaussFan: return "gauss-fan";
    case RenderMode::kRegions: return "regions";
  }
  throw DomainError("render_mode_name: unknown mode");
}

std::optional<RenderMode> parse_render_mode(std::string_view s) {
  if (s == "farey") return RenderMode::kFarey;
  if (s == "gauss-fan") return RenderMode::kGaussFan;
  if (s == "regions") return RenderMode::kRegions;
  return std::nullopt;
}

namespace {

using RatPoint = std::array<Rat, 3>;  // barycentric, sums to 1

/// Normalized column j of m (the image of the j-th simplex vertex).
RatPoint column_vertex(const Mat3& m, int j) {
  Int s = m(0, j) + m(1, j) + m(2, j);
  if (s == 0) throw DomainError("render: degenerate matrix column");
  return {Rat(m(0, j), s), Rat(m(1, j), s), Rat(m(2, j), s)};
}

std::string point_label(const RatPoint& p) {
  return "(" + rational_to_string(p[0]) + ", " + rational_to_string(p[1]) + ", " +
         rational_to_string(p[2]) + ")";
}

struct Layout {
  // Screen positions of the simplex corners e1, e2, e3.
  std::array<std::array<double, 2>, 3> corner = {{{50.0, 650.0}, {750.0, 650.0}, {400.0, 43.8}}};

  std::array<double, 2> project(const RatPoint& p) const {
    std::array<double, 2> out{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      double w = p[static_cast<size_t>(i)].convert_to<double>();
      out[0] += w * corner[static_cast<size_t>(i)][0];
      out[1] += w * corner[static_cast<size_t>(i)][1];
    }
    return out;
  }
};

void append_fmt(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out += buf;
}

void append_polygon(std::string& out, const Layout& lay, const std::array<RatPoint, 3>& v,
                    const char* stroke, double width, const char* fill) {
  out += "  <polygon points=\"";
  for (const auto& p : v) {
    auto xy = lay.project(p);
    append_fmt(out, "%.2f,%.2f ", xy[0], xy[1]);
  }
  append_fmt(out, "\" fill=\"%s\" stroke=\"%s\" stroke-width=\"%.2f\"/>\n", fill, stroke, width);
}

void append_line(std::string& out, const Layout& lay, const RatPoint& a, const RatPoint& b,
                 const char* stroke, double width) {
  auto pa = lay.project(a);
  auto pb = lay.project(b);
  append_fmt(out, "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                  "stroke-width=\"%.2f\"/>\n",
             pa[0], pa[1], pb[0], pb[1], stroke, width);
}

void append_label(std::string& out, const Layout& lay, const RatPoint& p, const std::string& text,
                  double dx, double dy, int size) {
  auto xy = lay.project(p);
  append_fmt(out, "  <text x=\"%.2f\" y=\"%.2f\" font-size=\"%d\" font-family=\"monospace\">",
             xy[0] + dx, xy[1] + dy, size);
  out += text;
  out += "</text>\n";
}

std::array<RatPoint, 3> matrix_triangle(const Mat3& m) {
  return {column_vertex(m, 0), column_vertex(m, 1), column_vertex(m, 2)};
}

RatPoint centroid(const std::array<RatPoint, 3>& v) {
  RatPoint c;
  for (int i = 0; i < 3; ++i) {
    c[static_cast<size_t>(i)] =
        (v[0][static_cast<size_t>(i)] + v[1][static_cast<size_t>(i)] + v[2][static_cast<size_t>(i)]) / 3;
  }
  return c;
}

const std::array<RatPoint, 3> kSimplex = {RatPoint{1, 0, 0}, RatPoint{0, 1, 0}, RatPoint{0, 0, 1}};

void render_farey(std::string& out, const Layout& lay, const TripTriple& t, int depth) {
  // All branch products of each length; stroke thins with depth.
  std::vector<Mat3> level{farey_matrix(0, t), farey_matrix(1, t)};
  for (int m = 1; m <= depth; ++m) {
    double width = std::max(0.25, 2.2 / m);
    for (const auto& mat : level) {
      append_polygon(out, lay, matrix_triangle(mat), "#1f4e79", width, "none");
    }
    if (m == 1) {
      // Exact labels on the two depth-1 triangles' vertices.
      for (const auto& mat : level) {
        for (int j = 0; j < 3; ++j) {
          auto v = column_vertex(mat, j);
          append_label(out, lay, v, point_label(v), 4, -4, 12);
        }
      }
    }
    if (m == depth) break;
    std::vector<Mat3> next;
    next.reserve(level.size() * 2);
    for (const auto& mat : level) {
      next.push_back(mat * farey_matrix(0, t));
      next.push_back(mat * farey_matrix(1, t));
    }
    level = std::move(next);
  }
}

void render_gauss_fan(std::string& out, const Layout& lay, const TripTriple& t, int depth) {
  Mat3 f0 = farey_matrix(0, t);
  Mat3 f1 = farey_matrix(1, t);
  Mat3 prefix = Mat3::identity();  // F1^k
  for (int k = 0; k <= depth; ++k) {
    auto tri = matrix_triangle(prefix * f0);
    append_polygon(out, lay, tri, "#7a1f1f", std::max(0.4, 1.8 - 0.12 * k), "none");
    if (k <= 4) {
      for (int j = 0; j < 3; ++j) {
        append_label(out, lay, tri[static_cast<size_t>(j)],
                     point_label(tri[static_cast<size_t>(j)]), 4, -4, 11);
      }
    }
    prefix = prefix * f1;
  }
}

void render_regions(std::string& out, const Layout& lay) {
  const RatPoint half_xz{Rat(1, 2), 0, Rat(1, 2)};
  const RatPoint half_yz{0, Rat(1, 2), Rat(1, 2)};
  // z = x + y boundary and y = z boundary.
  append_line(out, lay, half_xz, half_yz, "#7a1f1f", 1.6);
  append_line(out, lay, kSimplex[0], half_yz, "#1f6e1f", 1.6);
  append_label(out, lay, half_xz, point_label(half_xz), 6, 14, 12);
  append_label(out, lay, half_yz, point_label(half_yz), 6, -6, 12);
  append_label(out, lay, centroid({half_xz, half_yz, kSimplex[2]}), "A", -4, 4, 20);
  append_label(out, lay, centroid({kSimplex[0], kSimplex[1], half_yz}), "B", -4, 4, 20);
  append_label(out, lay, centroid({kSimplex[0], half_xz, half_yz}), "C", -4, 4, 20);
}

}  // namespace

std::string render_partition_svg(const TripTriple& t, int depth, RenderMode mode) {
  if (depth < 1 || depth > 12) throw DomainError("render_partition_svg: depth must be in [1, 12]");
  Layout lay;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"700\" "
         "viewBox=\"0 0 800 700\">\n";
  out += "  <title>" + t.name() + " " + render_mode_name(mode) + " depth " +
         std::to_string(depth) + "</title>\n";
  out += "  <rect width=\"800\" height=\"700\" fill=\"white\"/>\n";
  append_polygon(out, lay, kSimplex, "#000000", 2.0, "none");
  for (int j = 0; j < 3; ++j) {
    append_label(out, lay, kSimplex[static_cast<size_t>(j)],
                 point_label(kSimplex[static_cast<size_t>(j)]), j == 1 ? -90 : 6,
                 j == 2 ? -8 : 16, 12);
  }
  switch (mode) {
    case RenderMode::kFarey: render_farey(out, lay, t, depth); break;
    case RenderMode::kGaussFan: render_gauss_fan(out, lay, t, depth); break;
    case RenderMode::kRegions: render_regions(out, lay); break;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace trip
