#pragma once

#include <optional>
#include <string>

#include "sparserips/diagram.hpp"
#include "sparserips/persistence.hpp"
#include "sparserips/scale_map.hpp"
#include "sparserips/sparsify.hpp"

namespace sparse_rips {

struct PlotOptions {
  bool log_axes = false;
  double clip = 1e-3;  ///< lower bound of both log axes; smaller values are raised to it
  std::optional<ScaleMap> overlay;
  int width = 640;
  int height = 640;
};

/// Persistence diagram as SVG: diagonal in black, psi in red, overlay in
/// green, error rectangles (blue definite, orange possible) and a dot per
/// entry. Without a profile only the dots and the diagonal are drawn.
/// Infinite deaths sit on a dashed line above the finite range.
std::string render_svg(const PersistenceDiagram& diagram,
                       const std::optional<PrecisionProfile>& profile, const PlotOptions& options);

}  // namespace sparse_rips
