#include "bgmu/polygon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bgmu/datum.hpp"
#include "bgmu/rootsys.hpp"

namespace bgmu {

namespace {

// Value of the polygon at an integer abscissa.
const Rat& height_at(const NewtonPolygon& p, int x) { return p.heights.at(static_cast<std::size_t>(x)); }

// Nearest integer, half rounded up. Used only to pick pixel positions.
Int rat_round(const Rat& q) { return rat_floor(Rat(q + Rat(1, 2))); }

// Fixed-point pixel coordinate with three decimals, e.g. "-12.500".
std::string px_str(const Rat& units) {
  Int milli = rat_round(Rat(units * 40000)); // 40 px per unit, times 1000
  bool neg = milli < 0;
  Int a = neg ? Int(-milli) : milli;
  Int whole = a / 1000;
  Int frac = a % 1000;
  std::ostringstream os;
  if (neg) os << '-';
  os << whole.get_str() << '.';
  std::string f = frac.get_str();
  os << std::string(3 - f.size(), '0') << f;
  return os.str();
}

}  // namespace

NewtonPolygon make_polygon(const std::vector<Rat>& slopes) {
  if (slopes.empty()) throw std::invalid_argument("polygon needs at least one slope");
  NewtonPolygon p;
  p.n = static_cast<int>(slopes.size());
  p.slopes = slopes;
  p.heights.assign(slopes.size() + 1, Rat(0));
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    if (k + 1 < slopes.size() && slopes[k] < slopes[k + 1])
      throw std::invalid_argument("polygon slopes must be weakly decreasing");
    p.heights[k + 1] = Rat(p.heights[k] + slopes[k]);
  }
  p.vertices.emplace_back(0, Rat(0));
  for (std::size_t k = 1; k < slopes.size(); ++k)
    if (slopes[k] != slopes[k - 1]) p.vertices.emplace_back(static_cast<int>(k), p.heights[k]);
  p.vertices.emplace_back(p.n, p.heights.back());
  return p;
}

bool lattice_breakpoints(const NewtonPolygon& p) {
  for (const auto& [x, y] : p.vertices)
    if (!is_integer(y)) return false;
  return true;
}

PickCounts pick_counts(const NewtonPolygon& lower, const NewtonPolygon& upper) {
  if (lower.n != upper.n) throw std::invalid_argument("polygons have different widths");
  if (lower.heights.back() != upper.heights.back())
    throw std::invalid_argument("polygons have different endpoints");
  // Both graphs are linear on each unit interval, so comparing them at the
  // integer abscissae decides containment everywhere.
  for (int x = 0; x <= lower.n; ++x)
    if (height_at(lower, x) > height_at(upper, x))
      throw std::invalid_argument("polygons cross: lower exceeds upper");

  PickCounts out;
  out.A = 0;
  out.i = 0;
  out.b1 = 0;
  out.b2 = 0;
  out.common = 0;
  for (int x = 0; x < lower.n; ++x)
    out.A += Rat((height_at(upper, x) + height_at(upper, x + 1)) - (height_at(lower, x) + height_at(lower, x + 1))) / 2;
  for (int x = 0; x <= lower.n; ++x) {
    const Rat& ylow = height_at(lower, x);
    const Rat& yhigh = height_at(upper, x);
    for (Int y = rat_ceil(ylow); y <= rat_floor(yhigh); ++y) {
      bool on_low = Rat(y) == ylow;
      bool on_high = Rat(y) == yhigh;
      if (on_low && on_high)
        ++out.common;
      else if (on_low)
        ++out.b1;
      else if (on_high)
        ++out.b2;
      else
        ++out.i;
    }
  }
  if (Rat(2 * out.A) != Rat(2 * out.i + out.b1 + out.b2))
    throw std::logic_error("area count and lattice point count disagree");
  return out;
}

NewtonPolygon shifted_polygon(const CoxeterDatum& d, const SigmaClass& c) {
  if (!d.rd.gl_mode) throw std::invalid_argument("shifted polygon needs a GL datum");
  Vec raw = Vec(c.nu + d.nu_tau);
  std::vector<Rat> slopes(static_cast<std::size_t>(raw.size()));
  for (Eigen::Index k = 0; k < raw.size(); ++k) slopes[static_cast<std::size_t>(k)] = raw(k);
  NewtonPolygon p = make_polygon(slopes);
  p.shift = d.nu_tau(0);
  return p;
}

std::string render(const std::vector<NewtonPolygon>& polygons, const std::string& format) {
  if (polygons.empty() || polygons.size() > 2) throw std::invalid_argument("render takes one or two polygons");
  int n = polygons[0].n;
  for (const auto& p : polygons)
    if (p.n != n) throw std::invalid_argument("polygons have different widths");

  Rat ymin = 0, ymax = 0;
  for (const auto& p : polygons)
    for (const auto& h : p.heights) {
      ymin = std::min(ymin, h);
      ymax = std::max(ymax, h);
    }
  Int ylo = rat_floor(ymin);
  Int yhi = rat_ceil(ymax);

  if (format == "svg") {
    // Fixed 40 px per unit with a one-unit margin on every side. The y axis
    // points up, so pixel y runs from the top of the value range.
    auto X = [&](const Rat& x) { return px_str(Rat(x + 1)); };
    auto Y = [&](const Rat& y) { return px_str(Rat(Rat(yhi) - y + 1)); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_str(Rat(n + 2)) << "\" height=\""
       << px_str(Rat(Rat(yhi - ylo) + 2)) << "\">\n";
    for (int x = 0; x <= n; ++x)
      os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(Rat(ylo)) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(Rat(yhi))
         << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (Int y = ylo; y <= yhi; ++y)
      os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(Rat(y)) << "\" x2=\"" << X(n) << "\" y2=\"" << Y(Rat(y))
         << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int x = 0; x <= n; ++x)
      for (Int y = ylo; y <= yhi; ++y)
        os << "<rect x=\"" << px_str(Rat(Rat(x + 1) - Rat(1, 20))) << "\" y=\""
           << px_str(Rat(Rat(yhi - y) + 1 - Rat(1, 20))) << "\" width=\"4.000\" height=\"4.000\" fill=\"#999999\"/>\n";
    const char* colors[2] = {"#000000", "#cc3300"};
    for (std::size_t pi = 0; pi < polygons.size(); ++pi) {
      const auto& p = polygons[pi];
      os << "<path d=\"M " << X(0) << " " << Y(p.heights[0]);
      for (int x = 1; x <= n; ++x) os << " L " << X(x) << " " << Y(height_at(p, x));
      os << "\" fill=\"none\" stroke=\"" << colors[pi] << "\" stroke-width=\"2\"/>\n";
      for (const auto& [vx, vy] : p.vertices)
        os << "<rect x=\"" << px_str(Rat(Rat(vx + 1) - Rat(1, 10))) << "\" y=\"" << px_str(Rat(Rat(yhi) - vy + 1 - Rat(1, 10)))
           << "\" width=\"8.000\" height=\"8.000\" fill=\"" << colors[pi] << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
  }

  if (format == "ascii") {
    // Four columns per unit step, two rows per unit height. A value y is
    // drawn on the row nearest 2y, so integral heights land on even rows
    // where the lattice dots sit.
    int width = 4 * n + 1;
    Int rlo = 2 * ylo;
    Int rhi = 2 * yhi;
    long rows = Int(rhi - rlo).get_si() + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(width), ' '));
    auto put = [&](const Int& row, int col, char ch) {
      long rr = Int(rhi - row).get_si();
      if (rr < 0 || rr >= rows || col < 0 || col >= width) return;
      canvas[static_cast<std::size_t>(rr)][static_cast<std::size_t>(col)] = ch;
    };
    for (int x = 0; x <= n; ++x)
      for (Int y = ylo; y <= yhi; ++y) put(2 * y, 4 * x, '.');
    for (std::size_t rev = polygons.size(); rev > 0; --rev) {
      const auto& p = polygons[rev - 1];
      char mark = rev == 1 ? '*' : 'o';
      for (int c = 0; c <= 4 * n; ++c) {
        Rat x = Rat(c, 4);
        int seg = std::min(c / 4, n - 1);
        Rat y = Rat(height_at(p, seg) + Rat(p.slopes[static_cast<std::size_t>(seg)] * Rat(Rat(x) - seg)));
        const Rat& s = p.slopes[static_cast<std::size_t>(seg)];
        char ch = s > 0 ? '/' : (s < 0 ? '\\' : '_');
        put(rat_round(Rat(2 * y)), c, ch);
      }
      for (const auto& [vx, vy] : p.vertices) put(rat_round(Rat(2 * vy)), 4 * vx, mark);
    }
    std::ostringstream os;
    for (auto& line : canvas) {
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
    }
    return os.str();
  }

  throw std::invalid_argument("unknown render format: " + format);
}

}  // namespace bgmu
