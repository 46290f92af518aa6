#include "rigsep/polyline.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "rigsep/errors.hpp"

namespace rigsep {

Point make_point(long xn, long xd, long yn, long yd) {
  if (xd == 0 || yd == 0) throw InputError("point: zero denominator");
  Point p{Rational(xn, xd), Rational(yn, yd)};
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

struct Segment {
  const Point* p;
  const Point* q;
  int string;
  int index;
  bool degenerate() const { return *p == *q; }
};

struct Hit {
  Point at;
  Rational t;  // parameter along the first segment
  Rational u;  // parameter along the second segment
};

Rational param_on(const Segment& s, const Point& pt) {
  if (s.degenerate()) return Rational(0);
  const Rational rx = s.q->x - s.p->x, ry = s.q->y - s.p->y;
  return ((pt.x - s.p->x) * rx + (pt.y - s.p->y) * ry) / (rx * rx + ry * ry);
}

bool on_segment(const Segment& s, const Point& pt) {
  const Rational rx = s.q->x - s.p->x, ry = s.q->y - s.p->y;
  if (cross(rx, ry, pt.x - s.p->x, pt.y - s.p->y) != 0) return false;
  const Rational dot = (pt.x - s.p->x) * rx + (pt.y - s.p->y) * ry;
  return dot >= 0 && dot <= rx * rx + ry * ry;
}

[[noreturn]] void overlap_error(const Segment& a, const Segment& b) {
  throw InputError("polylines: collinear overlap between string " + std::to_string(a.string) + " segment " +
                   std::to_string(a.index) + " and string " + std::to_string(b.string) + " segment " +
                   std::to_string(b.index));
}

bool boxes_disjoint(const Segment& a, const Segment& b) {
  auto lo = [](const Rational& u, const Rational& v) { return u < v ? u : v; };
  auto hi = [](const Rational& u, const Rational& v) { return u < v ? v : u; };
  return hi(a.p->x, a.q->x) < lo(b.p->x, b.q->x) || hi(b.p->x, b.q->x) < lo(a.p->x, a.q->x) ||
         hi(a.p->y, a.q->y) < lo(b.p->y, b.q->y) || hi(b.p->y, b.q->y) < lo(a.p->y, a.q->y);
}

std::optional<Hit> intersect(const Segment& a, const Segment& b) {
  if (boxes_disjoint(a, b)) return std::nullopt;
  if (a.degenerate() || b.degenerate()) {
    if (a.degenerate() && b.degenerate()) {
      if (*a.p == *b.p) return Hit{*a.p, 0, 0};
      return std::nullopt;
    }
    if (a.degenerate()) {
      if (!on_segment(b, *a.p)) return std::nullopt;
      return Hit{*a.p, 0, param_on(b, *a.p)};
    }
    if (!on_segment(a, *b.p)) return std::nullopt;
    return Hit{*b.p, param_on(a, *b.p), 0};
  }
  const Rational rx = a.q->x - a.p->x, ry = a.q->y - a.p->y;
  const Rational sx = b.q->x - b.p->x, sy = b.q->y - b.p->y;
  const Rational wx = b.p->x - a.p->x, wy = b.p->y - a.p->y;
  const Rational denom = cross(rx, ry, sx, sy);
  if (denom != 0) {
    const Rational t = cross(wx, wy, sx, sy) / denom;
    const Rational u = cross(wx, wy, rx, ry) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    Point at{a.p->x + t * rx, a.p->y + t * ry};
    return Hit{std::move(at), t, u};
  }
  if (cross(wx, wy, rx, ry) != 0) return std::nullopt;
  // Collinear: intersect the parameter intervals along a.
  const Rational rr = rx * rx + ry * ry;
  Rational t0 = (wx * rx + wy * ry) / rr;
  Rational t1 = ((b.q->x - a.p->x) * rx + (b.q->y - a.p->y) * ry) / rr;
  if (t1 < t0) std::swap(t0, t1);
  const Rational lo = t0 > 0 ? t0 : Rational(0);
  const Rational hi = t1 < 1 ? t1 : Rational(1);
  if (lo > hi) return std::nullopt;
  if (lo < hi) overlap_error(a, b);
  Point at{a.p->x + lo * rx, a.p->y + lo * ry};
  Rational u = param_on(b, at);
  return Hit{std::move(at), lo, std::move(u)};
}

struct Event {
  int segment;
  Rational t;
  Vertex point;
};

}  // namespace

StringGraph string_graph_from_polylines(const PolylineArrangement& arr) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < arr.strings.size(); ++i) {
    const auto& s = arr.strings[i];
    if (s.empty()) throw InputError("polylines: string " + std::to_string(i) + " has no points");
    if (s.size() == 1) {
      segs.push_back({&s[0], &s[0], static_cast<int>(i), 0});
      continue;
    }
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
      segs.push_back({&s[k], &s[k + 1], static_cast<int>(i), static_cast<int>(k)});
  }

  std::map<Point, Vertex> ids;
  std::vector<Point> points;
  auto point_id = [&](const Point& p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<Vertex>(points.size()));
    if (inserted) points.push_back(p);
    return it->second;
  };

  std::vector<std::vector<Event>> events(arr.strings.size());
  for (std::size_t i = 0; i < arr.strings.size(); ++i) events[i].push_back({0, Rational(0), point_id(arr.strings[i][0])});

  for (std::size_t a = 0; a < segs.size(); ++a) {
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      const Segment& sa = segs[a];
      const Segment& sb = segs[b];
      const bool same = sa.string == sb.string;
      if (same && sb.index == sa.index + 1) {
        // Adjacent pieces share q_a = p_b; only a backtracking overlap matters.
        if (!sa.degenerate() && !sb.degenerate()) {
          const Rational rx = sa.q->x - sa.p->x, ry = sa.q->y - sa.p->y;
          const Rational sx = sb.q->x - sb.p->x, sy = sb.q->y - sb.p->y;
          if (cross(rx, ry, sx, sy) == 0 && rx * sx + ry * sy < 0) overlap_error(sa, sb);
        }
        continue;
      }
      auto hit = intersect(sa, sb);
      if (!hit) continue;
      const Vertex id = point_id(hit->at);
      events[sa.string].push_back({sa.index, hit->t, id});
      events[sb.string].push_back({sb.index, hit->u, id});
    }
  }

  StringGraph out;
  std::vector<Edge> edges;
  out.assign.regions.resize(arr.strings.size());
  for (std::size_t i = 0; i < arr.strings.size(); ++i) {
    auto& ev = events[i];
    std::stable_sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) {
      return x.segment < y.segment || (x.segment == y.segment && x.t < y.t);
    });
    std::vector<Vertex> region;
    Vertex prev = -1;
    for (const auto& e : ev) {
      if (e.point == prev) continue;
      if (prev >= 0) edges.emplace_back(prev, e.point);
      region.push_back(e.point);
      prev = e.point;
    }
    out.assign.regions[i] = make_set(std::move(region));
  }
  out.assign.base = Graph::from_edges(static_cast<int>(points.size()), edges);
  out.base_points = std::move(points);
  out.rig = build_rig(out.assign);
  return out;
}

}  // namespace rigsep
