#include "scanboard/logo/svg.hpp"

#include <cmath>
#include <stdexcept>

namespace scanboard::logo {

namespace {

std::string coord(double v) {
  // Collapse -0 and float dust so output is stable.
  if (std::fabs(v) < 1e-9) v = 0.0;
  return format_number(std::round(v * 1e6) / 1e6);
}

}  // namespace

std::string segments_to_svg(const std::vector<Segment>& segments, double width, double height) {
  if (!(width > 0) || !(height > 0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw std::invalid_argument("canvas dimensions must be positive");
  }
  const double cx = width / 2.0;
  const double cy = height / 2.0;
  const std::string w = coord(width);
  const std::string h = coord(height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
  for (const auto& s : segments) {
    out += "  <line x1=\"" + coord(cx + s.x0) + "\" y1=\"" + coord(cy - s.y0) + "\" x2=\"" +
           coord(cx + s.x1) + "\" y2=\"" + coord(cy - s.y1) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace scanboard::logo
