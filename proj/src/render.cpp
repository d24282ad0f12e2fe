#include "cy2/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cy2 {

namespace {

struct Canvas {
  int ngon;
  RenderStyle style;
  std::ostringstream out;

  double radius() const { return style.size * 0.4; }
  double centre() const { return style.size * 0.5; }

  // Vertex 1 at 90 degrees, then clockwise.
  std::pair<double, double> at(int v, double scale = 1.0) const {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * (v - 1) / ngon;
    return {centre() + scale * radius() * std::cos(angle),
            centre() - scale * radius() * std::sin(angle)};
  }

  void open() {
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.size << "\" height=\""
        << style.size << "\" viewBox=\"0 0 " << style.size << ' ' << style.size << "\">\n";
    out << "  <polygon fill=\"none\" stroke=\"" << style.ink << "\" stroke-width=\"1.5\" points=\"";
    for (int v = 1; v <= ngon; ++v) {
      auto [x, y] = at(v);
      out << (v > 1 ? " " : "") << x << ',' << y;
    }
    out << "\"/>\n";
    const int font = ngon > 24 ? 9 : 12;
    for (int v = 1; v <= ngon; ++v) {
      auto [x, y] = at(v, 1.12);
      out << "  <text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << font
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v << "</text>\n";
    }
  }

  void chord(int a, int b, const std::string& colour, bool dashed) {
    auto [x1, y1] = at(a);
    auto [x2, y2] = at(b);
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"" << colour << "\" stroke-width=\"2\"";
    if (dashed) out << " stroke-dasharray=\"6,4\"";
    out << "/>\n";
  }

  std::string close() {
    out << "</svg>\n";
    return out.str();
  }
};

}  // namespace

std::string render_svg(const DiagonalSet& u, const RenderStyle& style) {
  Canvas c{u.ngon(), style, {}};
  c.open();
  for (const Diagonal& d : u) c.chord(d.first(), d.second(), style.ink, false);
  return c.close();
}

std::string render_svg(const ArcSetD& u, const RenderStyle& style) {
  Canvas c{2 * u.half(), style, {}};
  c.open();
  for (const ArcD& a : u) {
    for (const Chord& ch : chords(a)) {
      if (!ch.diameter) {
        c.chord(ch.a, ch.b, style.ink, false);
      } else if (ch.color == Color::green) {
        c.chord(ch.a, ch.b, style.green, false);
      } else {
        c.chord(ch.a, ch.b, style.red, true);
      }
    }
  }
  return c.close();
}

}  // namespace cy2
