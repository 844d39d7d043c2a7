#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "opetope/error.hpp"
#include "opetope/natural_order.hpp"

namespace opetope {

using NodeId = std::string;
using IdSet = std::set<NodeId, NaturalLess>;
using IdMap = std::map<NodeId, NodeId, NaturalLess>;

/// Edges and vertices with partial source/target maps. Input edges have no
/// source, output edges have no target.
struct NetworkData {
  IdSet edges;
  IdSet vertices;
  IdSet inputs;
  IdSet outputs;
  IdMap source;  // defined exactly on edges \ inputs
  IdMap target;  // defined exactly on edges \ outputs
  IdSet thin_edges;
  IdSet thin_vertices;

  friend bool operator==(const NetworkData&, const NetworkData&) = default;
};

class Network {
 public:
  Network() = default;
  // Throws ReferenceError when the incidence data is inconsistent.
  explicit Network(NetworkData data);

  const NetworkData& data() const { return d_; }
  const IdSet& edges() const { return d_.edges; }
  const IdSet& vertices() const { return d_.vertices; }
  const IdSet& inputs() const { return d_.inputs; }
  const IdSet& outputs() const { return d_.outputs; }
  const IdSet& thin_edges() const { return d_.thin_edges; }
  const IdSet& thin_vertices() const { return d_.thin_vertices; }

  std::optional<NodeId> source(const NodeId& edge) const;
  std::optional<NodeId> target(const NodeId& edge) const;

  // Edges whose target (source) is the vertex.
  const IdSet& edges_into(const NodeId& vertex) const;
  const IdSet& edges_out_of(const NodeId& vertex) const;

  bool is_thin_edge(const NodeId& e) const { return d_.thin_edges.count(e) != 0; }
  bool is_thin_vertex(const NodeId& v) const { return d_.thin_vertices.count(v) != 0; }

  // A network consisting of one edge that is both input and output.
  static Network single_edge(const NodeId& edge, bool thin = false);

  friend bool operator==(const Network& a, const Network& b) { return a.d_ == b.d_; }

 private:
  NetworkData d_;
  std::map<NodeId, IdSet, NaturalLess> into_;
  std::map<NodeId, IdSet, NaturalLess> out_of_;
};

/// Vertex of one network -> input edge of the next.
using Constellation = IdMap;

struct OpetopicSequence {
  std::vector<Network> networks;
  std::vector<Constellation> constellations;  // constellations[q]: N_q -> N_{q+1}

  int dim() const { return static_cast<int>(networks.size()) - 1; }
  friend bool operator==(const OpetopicSequence&, const OpetopicSequence&) = default;
};

bool has_path(const Network& n, const NodeId& from, const NodeId& to);

// Input edges with a path to `edge`.
IdSet upstream_inputs(const Network& n, const NodeId& edge);

struct NetworkFlags {
  bool acyclic = false;
  bool linear = false;
  bool confluent = false;
  bool opetopic = false;
  bool reduced = false;
};

NetworkFlags classify_network(const Network& n);

bool is_constellation(const Network& n, const Network& p, const Constellation& c);

struct SequenceReport {
  std::vector<std::string> violations;
  // Failures of the confluence property, which should follow from the rest.
  std::vector<std::string> internal;
  bool ok() const { return violations.empty() && internal.empty(); }
};

SequenceReport validate_sequence(const OpetopicSequence& seq, bool require_reduced);

}  // namespace opetope
