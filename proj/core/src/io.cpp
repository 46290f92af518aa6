#include "rigsep/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "rigsep/errors.hpp"

namespace rigsep {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_of(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError(std::string(what) + ": expected {\"n\": ..., \"edges\": [...]}");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw InputError(std::string(what) + ": n must be a nonnegative integer");
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError(std::string(what) + ": every edge must be a pair of integers");
    const long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError(std::string(what) + ": edge endpoint out of range");
    if (u == v) throw InputError(std::string(what) + ": self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

VertexSet set_of(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of vertex ids");
  std::vector<Vertex> vs;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + ": vertex ids must be integers");
    vs.push_back(x.get<Vertex>());
  }
  return make_set(std::move(vs));
}

// Parse tree that keeps number literals verbatim.
struct Node {
  enum Kind { Array, Object, Number, String, Other } kind = Other;
  std::string text;
  std::vector<std::pair<std::string, Node>> children;  // keys used for objects only
};

class LiteralSax {
 public:
  Node root;

  bool null() { return leaf(Node::Other, ""); }
  bool boolean(bool) { return leaf(Node::Other, ""); }
  bool number_integer(json::number_integer_t v) { return leaf(Node::Number, std::to_string(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return leaf(Node::Number, std::to_string(v)); }
  bool number_float(json::number_float_t, const std::string& s) { return leaf(Node::Number, s); }
  bool string(std::string& s) { return leaf(Node::String, s); }
  bool binary(json::binary_t&) { return leaf(Node::Other, ""); }
  bool start_object(std::size_t) { return open(Node::Object); }
  bool key(std::string& k) {
    key_ = k;
    return true;
  }
  bool end_object() { return close(); }
  bool start_array(std::size_t) { return open(Node::Array); }
  bool end_array() { return close(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) {
    throw InputError("polylines: JSON parse error at byte " + std::to_string(pos) + ": " + e.what());
  }

 private:
  bool leaf(Node::Kind kind, const std::string& text) {
    Node n;
    n.kind = kind;
    n.text = text;
    attach(std::move(n));
    return true;
  }
  bool open(Node::Kind kind) {
    Node n;
    n.kind = kind;
    stack_.push_back({key_, std::move(n)});
    return true;
  }
  bool close() {
    auto [k, n] = std::move(stack_.back());
    stack_.pop_back();
    key_ = k;
    attach(std::move(n));
    return true;
  }
  void attach(Node n) {
    if (stack_.empty())
      root = std::move(n);
    else
      stack_.back().second.children.emplace_back(key_, std::move(n));
  }
  std::vector<std::pair<std::string, Node>> stack_;
  std::string key_;
};

mpz_class integer_of(const Node& n) {
  if (n.kind != Node::Number && n.kind != Node::String) throw InputError("polylines: expected an integer");
  const Rational q = parse_decimal(n.text);
  if (q.get_den() != 1) throw InputError("polylines: rational form needs integer entries, got " + n.text);
  return q.get_num();
}

Point point_of(const Node& n) {
  if (n.kind != Node::Array) throw InputError("polylines: every point must be an array");
  if (n.children.size() == 4) {
    const mpz_class xd = integer_of(n.children[1].second), yd = integer_of(n.children[3].second);
    if (xd == 0 || yd == 0) throw InputError("polylines: zero denominator");
    Point p{Rational(integer_of(n.children[0].second), xd), Rational(integer_of(n.children[2].second), yd)};
    p.x.canonicalize();
    p.y.canonicalize();
    return p;
  }
  if (n.children.size() == 2) {
    for (const auto& c : n.children)
      if (c.second.kind != Node::Number) throw InputError("polylines: decimal coordinates must be numbers");
    return Point{parse_decimal(n.children[0].second.text), parse_decimal(n.children[1].second.text)};
  }
  throw InputError("polylines: a point has 2 (decimal) or 4 (rational) entries");
}

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json weight_array(const std::vector<double>& w) {
  json a = json::array();
  for (double x : w) a.push_back(x);
  return a;
}

}  // namespace

Rational parse_decimal(const std::string& literal) {
  std::size_t i = 0;
  const std::string& s = literal;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::string digits;
  long frac = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac;
      any = true;
    }
  }
  long exp = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) eneg = s[i++] == '-';
    std::string e;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
    if (e.empty() || e.size() > 6) throw InputError("bad exponent in number '" + literal + "'");
    exp = std::stol(e) * (eneg ? -1 : 1);
  }
  if (!any || i != s.size()) throw InputError("not a decimal number: '" + literal + "'");
  mpz_class num(digits.empty() ? "0" : digits, 10);
  if (negative) num = -num;
  const long shift = exp - frac;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  Rational q = shift >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  q.canonicalize();
  return q;
}

std::string graph_to_json(const Graph& g, const std::vector<double>* weights) {
  json j = graph_json(g);
  if (weights) {
    if (static_cast<int>(weights->size()) != g.n()) throw InputError("graph_to_json: weights have wrong length");
    j["weights"] = weight_array(*weights);
  }
  return j.dump();
}

Graph graph_from_json(const std::string& text, std::vector<double>* weights) {
  const json j = parse(text, "graph");
  Graph g = graph_of(j, "graph");
  std::vector<double> w;
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw InputError("graph: weights must be an array");
    for (const auto& x : j["weights"]) {
      if (!x.is_number()) throw InputError("graph: weights must be numbers");
      w.push_back(x.get<double>());
    }
    if (static_cast<int>(w.size()) != g.n()) throw InputError("graph: weights must parallel the vertices");
  }
  if (weights) *weights = std::move(w);
  return g;
}

PolylineArrangement polylines_from_json(const std::string& text) {
  LiteralSax sax;
  json::sax_parse(text, &sax);
  const Node* list = &sax.root;
  if (list->kind == Node::Object) {
    const Node* found = nullptr;
    for (const auto& [k, c] : list->children)
      if (k == "strings" || k == "polylines") found = &c;
    if (!found) throw InputError("polylines: object needs a \"strings\" array");
    list = found;
  }
  if (list->kind != Node::Array) throw InputError("polylines: expected a list of strings");
  PolylineArrangement arr;
  for (const auto& [k, s] : list->children) {
    if (s.kind != Node::Array || s.children.empty()) throw InputError("polylines: every string needs at least one point");
    Polyline line;
    for (const auto& [k2, p] : s.children) line.push_back(point_of(p));
    arr.strings.push_back(std::move(line));
  }
  return arr;
}

std::string polylines_to_json(const PolylineArrangement& arr) {
  json out = json::array();
  for (const auto& line : arr.strings) {
    json s = json::array();
    for (const auto& p : line)
      s.push_back({integer_json(p.x.get_num()), integer_json(p.x.get_den()), integer_json(p.y.get_num()),
                   integer_json(p.y.get_den())});
    out.push_back(s);
  }
  return out.dump();
}

std::string regions_to_json(const RegionAssignment& assign) {
  json regions = json::array();
  for (const auto& r : assign.regions) regions.push_back(r);
  return json{{"base", graph_json(assign.base)}, {"regions", regions}}.dump();
}

RegionAssignment regions_from_json(const std::string& text) {
  const json j = parse(text, "regions");
  if (!j.is_object() || !j.contains("base") || !j.contains("regions"))
    throw InputError("regions: expected {\"base\": graph, \"regions\": [...]}");
  RegionAssignment a;
  a.base = graph_of(j["base"], "regions.base");
  for (const auto& r : j["regions"]) a.regions.push_back(set_of(r, "regions"));
  validate_regions(a);
  return a;
}

std::string separator_to_json(const SeparatorRecord& rec) {
  json params = json::object();
  for (const auto& [k, v] : rec.params) params[k] = v;
  for (const auto& [k, v] : rec.labels) params[k] = v;
  json comps = json::array();
  for (const auto& c : rec.components) comps.push_back(c);
  return json{{"S", rec.S}, {"components", comps}, {"params", params}, {"seed", rec.seed}}.dump();
}

SeparatorRecord separator_from_json(const std::string& text) {
  const json j = parse(text, "separator");
  if (!j.is_object() || !j.contains("S") || !j.contains("components"))
    throw InputError("separator: expected {\"S\": [...], \"components\": [...]}");
  SeparatorRecord rec;
  rec.S = set_of(j["S"], "separator.S");
  for (const auto& c : j["components"]) rec.components.push_back(set_of(c, "separator.components"));
  if (j.contains("params"))
    for (const auto& [k, v] : j["params"].items()) {
      if (v.is_number())
        rec.params[k] = v.get<double>();
      else if (v.is_string())
        rec.labels[k] = v.get<std::string>();
    }
  if (j.contains("seed")) rec.seed = j["seed"].get<std::uint64_t>();
  return rec;
}

std::string spread_to_json(const SpreadLPResult& r, int p) {
  return json{{"p", p},
              {"omega", weight_array(r.omega.values())},
              {"objective", r.value},
              {"lp_objective", r.lp_value},
              {"upper_bound", r.upper_bound},
              {"gap", r.upper_bound - r.value},
              {"exact", r.exact},
              {"norm", r.norm},
              {"iterations", r.iterations}}
      .dump();
}

namespace {

json flow_json(const MultiFlow& flow) {
  json paths = json::array();
  for (const auto& [p, x] : flow.paths()) paths.push_back({{"path", p}, {"value", x}});
  return paths;
}

json vcong_json(const VcongResult& r) {
  return {{"value", r.value}, {"lower_bound", r.lower_bound}, {"congestion", weight_array(r.congestion)},
          {"flow", flow_json(r.flow)}};
}

std::string norm_name(int p) { return p == kInfNorm ? "inf" : std::to_string(p); }

}  // namespace

std::string flow_to_json(const MultiFlow& flow) { return flow_json(flow).dump(); }

std::string duality_to_json(const DualityReport& r) {
  return json{{"p", norm_name(r.p)},
              {"q", norm_name(r.q)},
              {"cspread", r.cspread},
              {"scale", r.scale},
              {"predicted", r.predicted},
              {"vcong_incidence", r.vcong_incidence},
              {"vcong_visit", r.vcong_visit},
              {"relative_error", r.relative_error},
              {"visit_predicted", r.visit_predicted},
              {"visit_relative_error", r.visit_relative_error},
              {"holds", r.holds},
              {"omega", weight_array(r.spread.omega.values())},
              {"flow_incidence", vcong_json(r.flow_incidence)},
              {"flow_visit", vcong_json(r.flow_visit)}}
      .dump();
}

std::string spectrum_to_json(const LaplacianSpectrum& s) { return weight_array(s.eigenvalues).dump(); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace rigsep
