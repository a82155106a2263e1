#include "monopath/cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "monopath/errors.hpp"

namespace monopath::cli {

namespace {

const double kU1[3] = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
const double kU2[3] = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::vector<SliceSegment> slice_segments(const Composition& lambda, double half_width) {
  if (lambda.d() != 3) {
    throw UnsupportedDimension("slice plots need d = 3, got d = " + std::to_string(lambda.d()));
  }
  if (!(half_width > 0)) throw InvalidInput("window must be positive");
  std::vector<SliceSegment> out;
  for (const auto& h : build_arrangement(lambda).hyperplanes) {
    // a * alpha + b * beta = s in plane coordinates.
    const double a = kU1[h.i - 1] - kU1[h.j - 1];
    const double b = kU2[h.i - 1] - kU2[h.j - 1];
    const double norm2 = a * a + b * b;
    const double px = h.s * a / norm2, py = h.s * b / norm2;
    const double dx = -b, dy = a;
    // Liang-Barsky against the square.
    double t0 = -1e300, t1 = 1e300;
    bool empty = false;
    auto clip = [&](double p, double q) {
      if (std::abs(p) < 1e-15) {
        if (q < 0) empty = true;
        return;
      }
      const double t = q / p;
      if (p < 0) t0 = std::max(t0, t);
      else t1 = std::min(t1, t);
    };
    clip(-dx, px + half_width);
    clip(dx, half_width - px);
    clip(-dy, py + half_width);
    clip(dy, half_width - py);
    if (empty || t0 >= t1) continue;
    out.push_back({h, px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy});
  }
  return out;
}

std::string slice_svg(const Composition& lambda, double half_width) {
  const auto segments = slice_segments(lambda, half_width);
  const std::string w = fixed6(half_width);
  const std::string w2 = fixed6(2 * half_width);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"-" << w
     << " -" << w << " " << w2 << " " << w2 << "\">\n"
     << "  <title>arrangement (" << lambda.to_string() << ") on x1+x2+x3=0</title>\n"
     << "  <rect x=\"-" << w << "\" y=\"-" << w << "\" width=\"" << w2 << "\" height=\"" << w2
     << "\" fill=\"white\" stroke=\"none\"/>\n"
     << "  <g stroke=\"black\" stroke-width=\"" << fixed6(half_width / 200) << "\">\n";
  for (const auto& s : segments) {
    // SVG y grows downward.
    os << "    <line x1=\"" << fixed6(s.x1) << "\" y1=\"" << fixed6(-s.y1) << "\" x2=\""
       << fixed6(s.x2) << "\" y2=\"" << fixed6(-s.y2) << "\" data-hyperplane=\"x" << s.hyperplane.i
       << "-x" << s.hyperplane.j << "=" << s.hyperplane.s << "\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace monopath::cli
