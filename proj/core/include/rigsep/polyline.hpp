#pragma once

#include <gmpxx.h>

#include <vector>

#include "rigsep/graph.hpp"
#include "rigsep/rig.hpp"

namespace rigsep {

using Rational = mpq_class;

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

Point make_point(long xn, long xd, long yn, long yd);

// Consecutive points are joined by straight segments.  A single point is a
// degenerate string.
using Polyline = std::vector<Point>;

struct PolylineArrangement {
  std::vector<Polyline> strings;
};

struct StringGraph {
  Graph rig;
  RegionAssignment assign;  // assign.base is the planar base graph
  std::vector<Point> base_points;
};

// Base vertices are the distinct points among string anchors (first points)
// and all intersection points; consecutive points along a string are joined.
// Throws InputError on a collinear overlap of positive length.
StringGraph string_graph_from_polylines(const PolylineArrangement& arr);

}  // namespace rigsep
