#include "fareyprim/farey_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "fareyprim/farey.hpp"

namespace fareyprim {

namespace {

constexpr double kPixelWidth = 1000.0;
constexpr double kTop = 1.5;  // world height; finite arcs reach at most 1/2
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

double value(Rational x) { return static_cast<double>(x.num()) / static_cast<double>(x.den()); }

struct Frame {
  double half_width;  // world x range is [-half_width, half_width]
  double scale;       // pixels per world unit

  double px(double x) const { return (x + half_width) * scale; }
  double py(double y) const { return (kTop - y) * scale; }
  double height() const { return kTop * scale + kMargin; }
};

}  // namespace

std::string render_farey_svg(Rational target, std::int64_t depth) {
  if (target.is_infinite()) throw InvalidRational("cannot draw a geodesic to 1/0");
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");

  std::vector<Rational> finite{Rational::zero()};
  const auto levels = rationals_by_level(depth, SignFilter::Both);
  finite.insert(finite.end(), levels.begin(), levels.end());
  std::sort(finite.begin(), finite.end(), [](Rational l, Rational r) { return compare(l, r) < 0; });

  const double reach = std::max<double>(static_cast<double>(depth), std::ceil(std::fabs(value(target))));
  Frame f{reach + 0.5, 0.0};
  f.scale = kPixelWidth / (2.0 * f.half_width);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kPixelWidth) + "\" height=\"" +
         num(f.height()) + "\" viewBox=\"0 0 " + num(kPixelWidth) + " " + num(f.height()) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += "<g id=\"tessellation\" fill=\"none\" stroke=\"#555\" stroke-width=\"1\">\n";
  auto arc_tag = [&](Rational l, Rational r) {
    return "<path class=\"farey-arc\" data-left=\"" + to_string(l) + "\" data-right=\"" +
           to_string(r) + "\" d=\"";
  };
  for (Rational x : finite) {
    if (x.den() == 1) {
      out += arc_tag(x, Rational::infinity()) + "M " + num(f.px(value(x))) + " " + num(f.py(0)) +
             " L " + num(f.px(value(x))) + " " + num(f.py(kTop)) + "\"/>\n";
    }
  }
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      if (!is_neighbor(finite[i], finite[j])) continue;
      const double x0 = value(finite[i]);
      const double x1 = value(finite[j]);
      const double r = (x1 - x0) / 2.0;
      out += arc_tag(finite[i], finite[j]) + "M " + num(f.px(x0)) + " " + num(f.py(0)) + " A " +
             num(r * f.scale) + " " + num(r * f.scale) + " 0 0 1 " + num(f.px(x1)) + " " +
             num(f.py(0)) + "\"/>\n";
    }
  }
  out += "</g>\n";

  out += "<g id=\"axis\" stroke=\"black\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<line x1=\"0.000\" y1=\"" + num(f.py(0)) + "\" x2=\"" + num(kPixelWidth) + "\" y2=\"" +
         num(f.py(0)) + "\"/>\n";
  for (Rational x : finite) {
    const double X = f.px(value(x));
    const double len = farey_level(x) <= 1 ? 8.0 : 4.0;
    out += "<line class=\"tick\" data-value=\"" + to_string(x) + "\" x1=\"" + num(X) + "\" y1=\"" +
           num(f.py(0)) + "\" x2=\"" + num(X) + "\" y2=\"" + num(f.py(0) + len) + "\"/>\n";
    if (farey_level(x) <= 2 || x == target) {
      out += "<text class=\"tick-label\" stroke=\"none\" text-anchor=\"middle\" x=\"" + num(X) +
             "\" y=\"" + num(f.py(0) + 22) + "\">" + to_string(x) + "</text>\n";
    }
  }
  out += "</g>\n";

  // Geodesic from i to x: the circle through i centred on the real axis, or
  // the imaginary axis itself when x = 0.
  const double x = value(target);
  std::string d = "M " + num(f.px(0)) + " " + num(f.py(1)) + " ";
  if (target.is_zero()) {
    d += "L " + num(f.px(0)) + " " + num(f.py(0));
  } else {
    const double c = (x * x - 1.0) / (2.0 * x);
    const double radius = std::fabs(x - c);
    d += "A " + num(radius * f.scale) + " " + num(radius * f.scale) + " 0 0 " + (x > 0 ? "1" : "0") +
         " " + num(f.px(x)) + " " + num(f.py(0));
  }
  out += "<path id=\"gamma\" data-target=\"" + to_string(target) +
         "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" d=\"" + d + "\"/>\n";
  out += "<circle id=\"basepoint\" cx=\"" + num(f.px(0)) + "\" cy=\"" + num(f.py(1)) +
         "\" r=\"4\" fill=\"crimson\"/>\n";

  std::string caption = to_string(target);
  if (!target.is_zero()) caption += "  " + to_string(left_right_sequence(target));
  out += "<text id=\"left-right\" x=\"10.000\" y=\"20.000\" font-family=\"sans-serif\" "
         "font-size=\"14\">" + caption + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace fareyprim
