#pragma once

// Newton polygons for the GL_n realization: piecewise-linear graphs over
// [0,n] built from weakly decreasing slope sequences, exact lattice-point
// counts between two comparable polygons, the twist shift that makes
// breakpoints integral, and deterministic SVG/ASCII rendering.

#include <string>
#include <utility>
#include <vector>

#include "bgmu/bg.hpp"

namespace bgmu {

struct NewtonPolygon {
  int n = 0;
  std::vector<Rat> slopes;   // weakly decreasing, one per unit interval
  std::vector<Rat> heights;  // heights[k] = slopes[0] + ... + slopes[k-1]
  // Vertices of the graph: (0,0), every abscissa where the slope changes,
  // and (n, heights[n]).
  std::vector<std::pair<int, Rat>> vertices;
  Rat shift = 0;  // per-slope shift already folded into the slopes
};

struct PickCounts {
  Rat A;       // area between the polygons
  Int i;       // lattice points strictly between them
  Int b1;      // lattice points on the lower polygon only
  Int b2;      // lattice points on the upper polygon only
  Int common;  // lattice points on both polygons
};

// Validates weak decrease and fills in the derived fields.
NewtonPolygon make_polygon(const std::vector<Rat>& slopes);

// True if every vertex (slope-change abscissa and both endpoints) has an
// integral height.
bool lattice_breakpoints(const NewtonPolygon& p);

// Exact counts for the closed region between two polygons with the same n
// and the same endpoints, lower below upper throughout. Pick's identity
// 2A = 2i + b1 + b2 is asserted before returning.
PickCounts pick_counts(const NewtonPolygon& lower, const NewtonPolygon& upper);

// Polygon of the class with the identity drift added back, so achievable
// classes get lattice breakpoints. GL_n data only.
NewtonPolygon shifted_polygon(const CoxeterDatum& d, const SigmaClass& c);

// Deterministic rendering of one or two polygons sharing the same n.
// Formats: "svg" (40px unit grid) or "ascii" (dot grid with starred
// vertices).
std::string render(const std::vector<NewtonPolygon>& polygons, const std::string& format);

}  // namespace bgmu
