#pragma once

#include <json.hpp>

#include <string>

#include "topocut/colored_point_set.hpp"
#include "topocut/dolnikov.hpp"
#include "topocut/ham_sandwich.hpp"
#include "topocut/kneser.hpp"
#include "topocut/necklace.hpp"
#include "topocut/rainbow.hpp"
#include "topocut/tucker.hpp"

namespace topocut::io {

using Json = nlohmann::json;

// Rationals travel as strings ("5", "-7/3"); all serializers emit canonical
// key-sorted objects so equal values always produce identical bytes.

Json point_to_json(const Point& p);
Point point_from_json(const Json& j, int expected_dim = -1);

Json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);

Json point_set_to_json(const ColoredPointSet& ps);
ColoredPointSet point_set_from_json(const Json& j);

Json certificate_to_json(const BisectionCertificate& cert);
BisectionCertificate certificate_from_json(const Json& j);

Json rainbow_to_json(const RainbowPartition& rp);
RainbowPartition rainbow_from_json(const Json& j);

Json necklace_to_json(const Necklace& nk);
Necklace necklace_from_json(const Json& j);

Json split_to_json(const NecklaceSplit& sp);
NecklaceSplit split_from_json(const Json& j);

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json coloring_to_json(const VertexColoring& c);
VertexColoring coloring_from_json(const Json& j);

Json triangulation_to_json(const SymmetricTriangulation& t);
SymmetricTriangulation triangulation_from_json(const Json& j);

Json labeling_to_json(const TuckerLabeling& lab);
TuckerLabeling labeling_from_json(const Json& j);

// FNV-1a 64-bit digest of the canonical serialization, as 16 hex chars.
// Stable content fingerprint binding certificates to their instances (not
// a cryptographic hash).
std::string content_hash(const Json& payload);

// Canonical dump: sorted keys (nlohmann default), two-space indent, and a
// trailing newline, so identical values are byte-identical on disk.
std::string canonical_dump(const Json& j);

// File helpers; "-" means stdout/stdin. Throw Error(IoError).
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);
Json parse_json(const std::string& text);

}  // namespace topocut::io
