#include "topocut/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "topocut/error.hpp"

namespace topocut::io {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  fail(Errc::SchemaError, "expected a rational as string or integer");
}

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(Errc::SchemaError, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords) arr.push_back(rational_to_string(c));
  return arr;
}

Point point_from_json(const Json& j, int expected_dim) {
  if (!j.is_array()) fail(Errc::SchemaError, "point must be an array of rationals");
  Point p;
  for (const auto& c : j) p.coords.push_back(rational_from_json(c));
  if (expected_dim >= 0 && p.dim() != expected_dim)
    fail(Errc::SchemaError, "point dimension mismatch");
  return p;
}

Json hyperplane_to_json(const Hyperplane& h) {
  Json j;
  Json normal = Json::array();
  for (const auto& c : h.normal) normal.push_back(rational_to_string(c));
  j["normal"] = std::move(normal);
  j["offset"] = rational_to_string(h.offset);
  return j;
}

Hyperplane hyperplane_from_json(const Json& j) {
  Hyperplane h;
  for (const auto& c : field(j, "normal")) h.normal.push_back(rational_from_json(c));
  h.offset = rational_from_json(field(j, "offset"));
  if (h.normal.empty()) fail(Errc::SchemaError, "hyperplane needs a nonempty normal");
  bool all_zero = true;
  for (const auto& c : h.normal)
    if (c != 0) all_zero = false;
  if (all_zero) fail(Errc::SchemaError, "hyperplane normal must not be zero");
  return h;
}

Json point_set_to_json(const ColoredPointSet& ps) {
  Json j;
  j["dimension"] = ps.dimension;
  Json classes = Json::array();
  for (const auto& cls : ps.classes) {
    Json points = Json::array();
    for (const auto& p : cls) points.push_back(point_to_json(p));
    classes.push_back(std::move(points));
  }
  j["classes"] = std::move(classes);
  return j;
}

ColoredPointSet point_set_from_json(const Json& j) {
  ColoredPointSet ps;
  ps.dimension = field(j, "dimension").get<int>();
  if (ps.dimension < 1) fail(Errc::SchemaError, "dimension must be positive");
  for (const auto& cls : field(j, "classes")) {
    std::vector<Point> points;
    for (const auto& p : cls) points.push_back(point_from_json(p, ps.dimension));
    ps.classes.push_back(std::move(points));
  }
  return ps;
}

Json certificate_to_json(const BisectionCertificate& cert) {
  Json j;
  j["cut"] = hyperplane_to_json(cert.cut);
  Json counts = Json::array();
  for (const auto& c : cert.per_class_counts)
    counts.push_back(Json::array({c[0], c[1], c[2]}));
  j["per_class_counts"] = std::move(counts);
  return j;
}

BisectionCertificate certificate_from_json(const Json& j) {
  BisectionCertificate cert;
  cert.cut = hyperplane_from_json(field(j, "cut"));
  for (const auto& c : field(j, "per_class_counts")) {
    if (!c.is_array() || c.size() != 3)
      fail(Errc::SchemaError, "per-class counts must be triples");
    cert.per_class_counts.push_back(
        SideCounts{c[0].get<int64_t>(), c[1].get<int64_t>(), c[2].get<int64_t>()});
  }
  return cert;
}

namespace {

Json cut_tree_to_json(const CutTreeNode* node) {
  if (node == nullptr) return Json(nullptr);
  Json j;
  j["cut"] = hyperplane_to_json(node->cut);
  if (!node->on_cut_tuple.empty()) {
    Json tuple = Json::array();
    for (const auto& p : node->on_cut_tuple) tuple.push_back(point_to_json(p));
    j["on_cut_tuple"] = std::move(tuple);
  }
  j["left"] = cut_tree_to_json(node->left.get());
  j["right"] = cut_tree_to_json(node->right.get());
  return j;
}

std::unique_ptr<CutTreeNode> cut_tree_from_json(const Json& j) {
  if (j.is_null()) return nullptr;
  auto node = std::make_unique<CutTreeNode>();
  node->cut = hyperplane_from_json(field(j, "cut"));
  if (j.contains("on_cut_tuple"))
    for (const auto& p : j["on_cut_tuple"]) node->on_cut_tuple.push_back(point_from_json(p));
  node->left = cut_tree_from_json(field(j, "left"));
  node->right = cut_tree_from_json(field(j, "right"));
  return node;
}

}  // namespace

Json rainbow_to_json(const RainbowPartition& rp) {
  Json j;
  Json tuples = Json::array();
  for (const auto& tuple : rp.tuples) {
    Json t = Json::array();
    for (const auto& p : tuple) t.push_back(point_to_json(p));
    tuples.push_back(std::move(t));
  }
  j["tuples"] = std::move(tuples);
  j["cut_tree"] = cut_tree_to_json(rp.cut_tree.get());
  return j;
}

RainbowPartition rainbow_from_json(const Json& j) {
  RainbowPartition rp;
  for (const auto& t : field(j, "tuples")) {
    std::vector<Point> tuple;
    for (const auto& p : t) tuple.push_back(point_from_json(p));
    rp.tuples.push_back(std::move(tuple));
  }
  rp.cut_tree = cut_tree_from_json(field(j, "cut_tree"));
  return rp;
}

Json necklace_to_json(const Necklace& nk) {
  Json j;
  j["d"] = nk.d;
  j["stones"] = nk.stones;
  return j;
}

Necklace necklace_from_json(const Json& j) {
  Necklace nk;
  nk.d = field(j, "d").get<int>();
  for (const auto& s : field(j, "stones")) nk.stones.push_back(s.get<int>());
  nk.validate();
  return nk;
}

Json split_to_json(const NecklaceSplit& sp) {
  Json j;
  j["cuts"] = sp.cuts;
  j["assignment"] = sp.assignment;
  return j;
}

NecklaceSplit split_from_json(const Json& j) {
  NecklaceSplit sp;
  for (const auto& c : field(j, "cuts")) sp.cuts.push_back(c.get<int>());
  for (const auto& a : field(j, "assignment")) sp.assignment.push_back(a.get<int>());
  return sp;
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json j;
  j["ground"] = h.ground_size;
  j["edges"] = h.edges;
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  const int ground = field(j, "ground").get<int>();
  std::vector<std::vector<int>> edges;
  for (const auto& e : field(j, "edges")) {
    std::vector<int> edge;
    for (const auto& x : e) edge.push_back(x.get<int>());
    edges.push_back(std::move(edge));
  }
  return Hypergraph(ground, std::move(edges));
}

Json coloring_to_json(const VertexColoring& c) {
  Json j;
  j["palette_size"] = c.palette_size;
  j["colors"] = c.colors;
  return j;
}

VertexColoring coloring_from_json(const Json& j) {
  VertexColoring c;
  c.palette_size = field(j, "palette_size").get<int>();
  for (const auto& x : field(j, "colors")) c.colors.push_back(x.get<int>());
  return c;
}

Json triangulation_to_json(const SymmetricTriangulation& t) {
  Json j;
  j["n"] = t.n;
  Json vertices = Json::array();
  for (const auto& v : t.vertices) vertices.push_back(point_to_json(v));
  j["vertices"] = std::move(vertices);
  j["simplices"] = t.simplices;
  Json antipode = Json::array();
  for (const auto& [v, w] : t.boundary_antipode) antipode.push_back(Json::array({v, w}));
  j["boundary_antipode"] = std::move(antipode);
  return j;
}

SymmetricTriangulation triangulation_from_json(const Json& j) {
  SymmetricTriangulation t;
  t.n = field(j, "n").get<int>();
  for (const auto& v : field(j, "vertices")) t.vertices.push_back(point_from_json(v, t.n));
  for (const auto& s : field(j, "simplices")) {
    std::vector<int> simplex;
    for (const auto& v : s) simplex.push_back(v.get<int>());
    t.simplices.push_back(std::move(simplex));
  }
  for (const auto& pair : field(j, "boundary_antipode")) {
    if (!pair.is_array() || pair.size() != 2)
      fail(Errc::SchemaError, "boundary_antipode entries must be pairs");
    t.boundary_antipode[pair[0].get<int>()] = pair[1].get<int>();
  }
  return t;
}

Json labeling_to_json(const TuckerLabeling& lab) {
  Json arr = Json::array();
  for (const auto& [v, l] : lab.labels) arr.push_back(Json::array({v, l}));
  return Json{{"labels", arr}};
}

TuckerLabeling labeling_from_json(const Json& j) {
  TuckerLabeling lab;
  for (const auto& pair : field(j, "labels")) {
    if (!pair.is_array() || pair.size() != 2)
      fail(Errc::SchemaError, "label entries must be [vertex, label] pairs");
    lab.labels[pair[0].get<int>()] = pair[1].get<int>();
  }
  return lab;
}

std::string content_hash(const Json& payload) {
  const std::string text = payload.dump();
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(Errc::IoError, "failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::SchemaError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace topocut::io
