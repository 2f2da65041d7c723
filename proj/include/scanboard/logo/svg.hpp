#pragma once

#include <string>
#include <vector>

#include "scanboard/logo/interpreter.hpp"

namespace scanboard::logo {

/// Renders turtle segments as an SVG 1.1 document: white background, one
/// black 1px `<line>` per segment, turtle origin at the canvas centre and
/// the y axis pointing up. Throws std::invalid_argument for a non-positive
/// canvas.
std::string segments_to_svg(const std::vector<Segment>& segments, double width, double height);

}  // namespace scanboard::logo
