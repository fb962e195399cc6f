#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "bgmu/polygon.hpp"
#include "test_util.hpp"

using namespace bgmu;

namespace {

CoxeterDatum gl_datum(int n, std::initializer_list<long> mu) {
  RootDatum rd = make_gl_datum(n);
  return make_coxeter_datum(rd, identity_perm(rd), TauSpec::identity(), tveci(mu));
}

NewtonPolygon class_polygon(const SigmaClass& c) {
  std::vector<Rat> slopes;
  for (Eigen::Index k = 0; k < c.nu.size(); ++k) slopes.push_back(c.nu(k));
  return make_polygon(slopes);
}

// Independent per-abscissa recount of the lattice points between two
// polygons, plus the trapezoid area.
PickCounts slow_counts(const NewtonPolygon& lower, const NewtonPolygon& upper) {
  PickCounts out;
  out.A = 0;
  out.i = 0;
  out.b1 = 0;
  out.b2 = 0;
  out.common = 0;
  for (int x = 0; x <= lower.n; ++x) {
    Rat lo = lower.heights[static_cast<std::size_t>(x)];
    Rat hi = upper.heights[static_cast<std::size_t>(x)];
    Int y = rat_floor(hi);
    for (; Rat(y) > lo; y -= 1)
      if (Rat(y) < hi) out.i += 1;
    if (lo == hi) {
      if (is_integer(lo)) out.common += 1;
    } else {
      if (is_integer(lo)) out.b1 += 1;
      if (is_integer(hi)) out.b2 += 1;
    }
    if (x < lower.n) {
      Rat nlo = lower.heights[static_cast<std::size_t>(x + 1)];
      Rat nhi = upper.heights[static_cast<std::size_t>(x + 1)];
      Rat add = (hi + nhi - lo - nlo) / 2;
      Rat sum = out.A + add;
      out.A = sum;
    }
  }
  return out;
}

// All concave polygons from (0,0) to (n, total) with integer vertices that
// stay below the given upper polygon. Returned as slope strings.
void dfs_polygons(const NewtonPolygon& upper, int x, const Rat& y, const Rat& prev,
                  std::vector<Rat>& slopes, std::set<std::string>& out) {
  int n = upper.n;
  Rat total = upper.heights[static_cast<std::size_t>(n)];
  if (x == n) {
    if (y == total) {
      std::string key;
      for (const Rat& s : slopes) key += rat_str(s) + "|";
      out.insert(key);
    }
    return;
  }
  for (int nx = x + 1; nx <= n; ++nx) {
    // Integer landing heights not above the upper polygon.
    Int top = rat_floor(upper.heights[static_cast<std::size_t>(nx)]);
    for (Int ny = top; ; ny -= 1) {
      Rat s = Rat(Rat(ny) - y) / (nx - x);
      if (s >= prev) continue;
      // Future slopes are all strictly smaller; landing at the endpoint
      // needs the remaining average below s.
      if (nx < n && Rat(total - Rat(ny)) >= Rat(s * (n - nx))) break;
      if (nx == n && Rat(ny) != total) {
        if (Rat(ny) < total) break;
        continue;
      }
      // Intermediate integer abscissae stay below the upper polygon because
      // both graphs are concave and agree at integer points by construction.
      bool inside = true;
      for (int t = x + 1; t < nx && inside; ++t) {
        Rat h = y + s * (t - x);
        if (h > upper.heights[static_cast<std::size_t>(t)]) inside = false;
      }
      if (!inside) continue;
      std::size_t before = slopes.size();
      for (int t = x; t < nx; ++t) slopes.push_back(s);
      dfs_polygons(upper, nx, Rat(ny), s, slopes, out);
      slopes.resize(before);
    }
  }
}

std::set<std::string> concave_polygons_below(const NewtonPolygon& upper) {
  std::set<std::string> out;
  std::vector<Rat> slopes;
  Rat inf = Rat(1000000);
  dfs_polygons(upper, 0, Rat(0), inf, slopes, out);
  return out;
}

std::string slope_key(const SigmaClass& c) {
  std::string key;
  for (Eigen::Index k = 0; k < c.nu.size(); ++k) key += rat_str(c.nu(k)) + "|";
  return key;
}

}  // namespace

TEST_CASE("polygon construction and derived fields") {
  NewtonPolygon p = make_polygon({2, 1, 1, 0});
  CHECK(p.n == 4);
  REQUIRE(p.heights.size() == 5);
  CHECK(p.heights[0] == 0);
  CHECK(p.heights[1] == 2);
  CHECK(p.heights[2] == 3);
  CHECK(p.heights[3] == 4);
  CHECK(p.heights[4] == 4);
  REQUIRE(p.vertices.size() == 4);
  CHECK(p.vertices[0] == std::pair<int, Rat>(0, 0));
  CHECK(p.vertices[1] == std::pair<int, Rat>(1, 2));
  CHECK(p.vertices[2] == std::pair<int, Rat>(3, 4));
  CHECK(p.vertices[3] == std::pair<int, Rat>(4, 4));
  CHECK(p.shift == 0);

  CHECK_THROWS_WITH_AS(make_polygon({}), "polygon needs at least one slope",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_polygon({1, 2}), "polygon slopes must be weakly decreasing",
                       std::invalid_argument);
}

TEST_CASE("breakpoint integrality") {
  CHECK(lattice_breakpoints(make_polygon({Rat(3, 2), Rat(3, 2), Rat(-2, 3), Rat(-2, 3),
                                          Rat(-2, 3)})));
  CHECK(lattice_breakpoints(make_polygon({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)})));
  CHECK_FALSE(lattice_breakpoints(make_polygon({Rat(1, 2), Rat(1, 2), Rat(1, 2)})));
  CHECK_FALSE(lattice_breakpoints(make_polygon({1, Rat(1, 2), 0})));
}

TEST_CASE("frozen lattice point counts") {
  PickCounts g2 = pick_counts(make_polygon({Rat(1, 2), Rat(1, 2)}), make_polygon({1, 0}));
  CHECK(g2.A == Rat(1, 2));
  CHECK(g2.i == 0);
  CHECK(g2.b1 == 0);
  CHECK(g2.b2 == 1);
  CHECK(g2.common == 2);

  std::vector<Rat> lo(8, Rat(1, 4));
  for (int k = 0; k < 4; ++k) lo[static_cast<std::size_t>(k)] = Rat(5, 4);
  std::vector<Rat> hi = {3, 1, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), 0, 0};
  PickCounts g8 = pick_counts(make_polygon(lo), make_polygon(hi));
  CHECK(g8.A == 5);
  CHECK(g8.i == 3);
  CHECK(g8.b1 == 0);
  CHECK(g8.b2 == 4);
  CHECK(g8.common == 3);

  PickCounts g4 = pick_counts(make_polygon({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
                              make_polygon({1, 1, 0, 0}));
  CHECK(g4.A == 2);
  CHECK(g4.i == 0);
  CHECK(g4.b1 == 1);
  CHECK(g4.b2 == 3);

  CHECK_THROWS_WITH_AS(pick_counts(make_polygon({1, 0}), make_polygon({1, 1})),
                       "polygons have different endpoints", std::invalid_argument);
  CHECK_THROWS_WITH_AS(pick_counts(make_polygon({2, 0}), make_polygon({1, 1})),
                       "polygons cross: lower exceeds upper", std::invalid_argument);
}

TEST_CASE("counts agree with a per abscissa recount") {
  CoxeterDatum d = gl_datum(5, {2, 1, 0, -1, -1});
  BGMuPoset p = enumerate_bg_mu(d);
  int pairs = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      const SigmaClass& lo = p.elements[static_cast<std::size_t>(i)];
      const SigmaClass& hi = p.elements[static_cast<std::size_t>(j)];
      if (!leq(d, lo, hi)) continue;
      ++pairs;
      NewtonPolygon pl = class_polygon(lo);
      NewtonPolygon ph = class_polygon(hi);
      PickCounts fast = pick_counts(pl, ph);
      PickCounts slow = slow_counts(pl, ph);
      CHECK(fast.A == slow.A);
      CHECK(fast.i == slow.i);
      CHECK(fast.b1 == slow.b1);
      CHECK(fast.b2 == slow.b2);
      CHECK(fast.common == slow.common);
    }
  CHECK(pairs > 26);
}

TEST_CASE("shifted polygons of a rotated datum") {
  RootDatum gl6 = make_gl_datum(6);
  CoxeterDatum d = make_coxeter_datum(gl6, identity_perm(gl6), TauSpec::rotate(2),
                                      tveci({1, 0, 0, 0, 0, 0}));
  BGMuPoset p = enumerate_bg_mu(d);
  for (const SigmaClass& c : p.elements) {
    NewtonPolygon sp = shifted_polygon(d, c);
    CHECK(sp.shift == Rat(1, 3));
    CHECK(lattice_breakpoints(sp));
    CHECK(sp.heights[6] == 3);
  }
  NewtonPolygon basic = shifted_polygon(d, p.basic());
  for (const Rat& s : basic.slopes) CHECK(s == Rat(1, 2));
  NewtonPolygon top = shifted_polygon(d, p.max());
  REQUIRE(top.vertices.size() == 4);
  CHECK(top.vertices[1] == std::pair<int, Rat>(1, 1));
  CHECK(top.vertices[2] == std::pair<int, Rat>(3, 2));
  CHECK(top.vertices[3] == std::pair<int, Rat>(6, 3));

  RootDatum a3 = make_root_datum({{'A', 3}});
  CoxeterDatum ad = make_coxeter_datum(a3, flip_perm(a3), TauSpec::identity(),
                                       Vec(a3.lattice.col(1)));
  CHECK_THROWS_WITH_AS(shifted_polygon(ad, enumerate_bg_mu(ad).basic()),
                       "shifted polygon needs a GL datum", std::invalid_argument);
}

TEST_CASE("classes of split GL are exactly the concave integral polygons below mu") {
  struct Case {
    int n;
    std::initializer_list<long> mu;
  };
  for (const Case& cs : {Case{3, {2, 0, 0}}, Case{4, {1, 1, 0, 0}}, Case{5, {2, 1, 0, -1, -1}},
                         Case{6, {1, 1, 1, 0, 0, 0}}}) {
    CoxeterDatum d = gl_datum(cs.n, cs.mu);
    BGMuPoset p = enumerate_bg_mu(d);
    std::vector<Rat> mu_slopes;
    for (Eigen::Index k = 0; k < d.mu.size(); ++k) mu_slopes.push_back(d.mu(k));
    std::set<std::string> expected = concave_polygons_below(make_polygon(mu_slopes));
    std::set<std::string> got;
    for (const SigmaClass& c : p.elements) got.insert(slope_key(c));
    CHECK(got.size() == static_cast<std::size_t>(p.size()));
    CHECK(got == expected);
  }
}

TEST_CASE("rendering is deterministic and validated") {
  NewtonPolygon a = make_polygon({Rat(3, 2), Rat(3, 2), 0, 0});
  NewtonPolygon b = make_polygon({2, 1, 0, 0});
  std::string svg = render({a, b}, "svg");
  CHECK(svg == render({a, b}, "svg"));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::string ascii = render({a, b}, "ascii");
  CHECK(ascii == render({a, b}, "ascii"));
  CHECK(ascii.find('*') != std::string::npos);
  CHECK(render({a}, "ascii") != ascii);

  CHECK_THROWS_WITH_AS(render({}, "svg"), "render takes one or two polygons",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(render({a, make_polygon({1})}, "svg"),
                       "polygons have different widths", std::invalid_argument);
  CHECK_THROWS_WITH_AS(render({a}, "png"), "unknown render format: png",
                       std::invalid_argument);
}
