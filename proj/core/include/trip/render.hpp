// SVG rendering of the triangle partition: nested branch subdivision, the
// fan of Gauss-step subtriangles, and the A/B/C region overlay.  All vertex
// coordinates are computed in exact rational arithmetic (columns of branch
// matrix products, normalized); floating point appears only in the final
// layout projection.
#pragma once

#include <optional>
#include <string>

#include "trip/algebra.hpp"

namespace trip {

enum class RenderMode {
  kFarey,     // all subdivision triangles of depth 1..depth
  kGaussFan,  // the subtriangles selected by Gauss digit k = 0..depth
  kRegions,   // the A / B / C region chords with exact endpoint labels
};

std::string render_mode_name(RenderMode m);
std::optional<RenderMode> parse_render_mode(std::string_view s);

/// Render the partition of the standard simplex under the branch matrices of
/// t as a standalone SVG document.  depth must be in [1, 12].
std::string render_partition_svg(const TripTriple& t, int depth,
                                 RenderMode mode = RenderMode::kFarey);

}  // namespace trip
