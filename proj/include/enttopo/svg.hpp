#pragma once

#include <string>

#include "enttopo/homology.hpp"

namespace enttopo {

/// Render a barcode as a static SVG figure: one horizontal bar per interval,
/// grouped by dimension, with a labeled epsilon axis. Essential bars run to
/// the right edge and end in an arrowhead. Output is byte-deterministic for
/// identical input.
std::string barcode_svg(const Barcode& barcode);

void render_svg(const Barcode& barcode, const std::string& out_path);

} // namespace enttopo
