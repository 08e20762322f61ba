#pragma once

#include <string>

#include "td13/drawing.hpp"

namespace td13 {

/// Edges as segments coloured by length class, vertices as dots, and a
/// legend of the class lengths. Byte-stable for equal drawings.
std::string render_svg(const Drawing& d);

}  // namespace td13
