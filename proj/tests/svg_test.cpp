#include <gtest/gtest.h>

#include "scanboard/logo/svg.hpp"

using namespace scanboard::logo;

namespace {

std::size_t count_lines(const std::string& svg) {
  std::size_t n = 0;
  for (auto pos = svg.find("<line "); pos != std::string::npos; pos = svg.find("<line ", pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Svg, EmptyDrawing) {
  std::string svg = segments_to_svg({}, 400, 400);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(count_lines(svg), 0u);
}

TEST(Svg, OneLinePerSegment) {
  std::vector<Segment> square{{0, 0, 0, 30}, {0, 30, 30, 30}, {30, 30, 30, 0}, {30, 0, 0, 0}};
  EXPECT_EQ(count_lines(segments_to_svg(square, 400, 400)), 4u);
}

TEST(Svg, OriginAtCentreYUp) {
  std::string svg = segments_to_svg({{0, 0, 0, 30}}, 200, 200);
  EXPECT_NE(svg.find(R"(x1="100" y1="100" x2="100" y2="70")"), std::string::npos) << svg;
  EXPECT_NE(svg.find(R"(viewBox="0 0 200 200")"), std::string::npos);
}

TEST(Svg, RejectsEmptyCanvas) {
  EXPECT_THROW(segments_to_svg({}, 0, 100), std::invalid_argument);
  EXPECT_THROW(segments_to_svg({}, 100, -1), std::invalid_argument);
}
