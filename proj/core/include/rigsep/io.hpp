#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rigsep/flow/multiflow.hpp"
#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/graph.hpp"
#include "rigsep/polyline.hpp"
#include "rigsep/rig.hpp"
#include "rigsep/spectral.hpp"

namespace rigsep {

// Graph: {"n": int, "edges": [[u,v],...]} with an optional parallel
// "weights" array.
std::string graph_to_json(const Graph& g, const std::vector<double>* weights = nullptr);
Graph graph_from_json(const std::string& text, std::vector<double>* weights = nullptr);

// Polylines: a list of strings, each a list of points [x_num, x_den, y_num,
// y_den] or [x, y].  Decimal coordinates are read exactly from their text.
// An object {"strings": [...]} is accepted as well.  Integers too large for
// 64 bits may be written as JSON strings.
PolylineArrangement polylines_from_json(const std::string& text);
std::string polylines_to_json(const PolylineArrangement& arr);

// Exact rational value of a JSON number literal such as "-1.25e-3".
Rational parse_decimal(const std::string& literal);

// {"base": graph, "regions": [[ids],...]}
std::string regions_to_json(const RegionAssignment& assign);
RegionAssignment regions_from_json(const std::string& text);

struct SeparatorRecord {
  VertexSet S;
  std::vector<VertexSet> components;
  std::map<std::string, double> params;
  std::map<std::string, std::string> labels;  // written into params as strings
  std::uint64_t seed = 0;
};

// {"S": [...], "components": [[...]], "params": {...}, "seed": int}
std::string separator_to_json(const SeparatorRecord& rec);
SeparatorRecord separator_from_json(const std::string& text);

std::string spread_to_json(const SpreadLPResult& r, int p);
std::string flow_to_json(const MultiFlow& flow);
std::string duality_to_json(const DualityReport& r);
std::string spectrum_to_json(const LaplacianSpectrum& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rigsep
