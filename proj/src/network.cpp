#include "opetope/network.hpp"

#include <deque>

namespace opetope {

namespace {

const IdSet kEmpty;

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorCode::reference_error, msg);
}

void require_subset(const IdSet& part, const IdSet& whole, const std::string& what) {
  for (const auto& id : part) require(whole.count(id) != 0, what + " '" + id + "' is unknown");
}

// The partial map must be defined exactly on `domain` and land in `codomain`.
void require_partial_map(const IdMap& map, const IdSet& edges, const IdSet& excluded,
                         const IdSet& codomain, const char* name) {
  for (const auto& [e, v] : map) {
    require(edges.count(e) != 0, std::string(name) + " of unknown edge '" + e + "'");
    require(excluded.count(e) == 0,
            std::string(name) + " given for edge '" + e + "', which must not have one");
    require(codomain.count(v) != 0, std::string(name) + " of '" + e + "' is unknown vertex '" +
                                        v + "'");
  }
  for (const auto& e : edges) {
    if (excluded.count(e) == 0) {
      require(map.count(e) != 0, std::string(name) + " missing for edge '" + e + "'");
    }
  }
}

}  // namespace

Network::Network(NetworkData data) : d_(std::move(data)) {
  for (const auto* ids : {&d_.edges, &d_.vertices}) {
    for (const auto& id : *ids) {
      if (!is_valid_identifier(id)) {
        throw Error(ErrorCode::invalid_argument, "invalid network identifier '" + id + "'");
      }
    }
  }
  require_subset(d_.inputs, d_.edges, "input edge");
  require_subset(d_.outputs, d_.edges, "output edge");
  require_subset(d_.thin_edges, d_.edges, "thin edge");
  require_subset(d_.thin_vertices, d_.vertices, "thin vertex");
  require_partial_map(d_.source, d_.edges, d_.inputs, d_.vertices, "source");
  require_partial_map(d_.target, d_.edges, d_.outputs, d_.vertices, "target");
  for (const auto& [e, v] : d_.source) out_of_[v].insert(e);
  for (const auto& [e, v] : d_.target) into_[v].insert(e);
}

std::optional<NodeId> Network::source(const NodeId& edge) const {
  auto it = d_.source.find(edge);
  if (it == d_.source.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> Network::target(const NodeId& edge) const {
  auto it = d_.target.find(edge);
  if (it == d_.target.end()) return std::nullopt;
  return it->second;
}

const IdSet& Network::edges_into(const NodeId& vertex) const {
  auto it = into_.find(vertex);
  return it == into_.end() ? kEmpty : it->second;
}

const IdSet& Network::edges_out_of(const NodeId& vertex) const {
  auto it = out_of_.find(vertex);
  return it == out_of_.end() ? kEmpty : it->second;
}

Network Network::single_edge(const NodeId& edge, bool thin) {
  NetworkData d;
  d.edges = {edge};
  d.inputs = {edge};
  d.outputs = {edge};
  if (thin) d.thin_edges = {edge};
  return Network(std::move(d));
}

bool has_path(const Network& n, const NodeId& from, const NodeId& to) {
  for (const auto* e : {&from, &to}) {
    if (n.edges().count(*e) == 0) throw Error(ErrorCode::unknown_edge, "unknown edge " + *e);
  }
  IdSet seen{from};
  std::deque<NodeId> queue{from};
  while (!queue.empty()) {
    NodeId e = queue.front();
    queue.pop_front();
    if (e == to) return true;
    auto v = n.target(e);
    if (!v) continue;
    for (const auto& next : n.edges_out_of(*v)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

IdSet upstream_inputs(const Network& n, const NodeId& edge) {
  if (n.edges().count(edge) == 0) throw Error(ErrorCode::unknown_edge, "unknown edge " + edge);
  IdSet seen{edge};
  IdSet result;
  std::deque<NodeId> queue{edge};
  while (!queue.empty()) {
    NodeId e = queue.front();
    queue.pop_front();
    auto v = n.source(e);
    if (!v) {
      if (n.inputs().count(e)) result.insert(e);
      continue;
    }
    for (const auto& prev : n.edges_into(*v)) {
      if (seen.insert(prev).second) queue.push_back(prev);
    }
  }
  return result;
}

namespace {

bool is_acyclic(const Network& n) {
  // Kahn's algorithm on the edge graph e -> e' when t(e) = s(e').
  std::map<NodeId, int, NaturalLess> indegree;
  for (const auto& e : n.edges()) {
    auto v = n.source(e);
    indegree[e] = v ? static_cast<int>(n.edges_into(*v).size()) : 0;
  }
  std::deque<NodeId> ready;
  for (const auto& [e, d] : indegree) {
    if (d == 0) ready.push_back(e);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    NodeId e = ready.front();
    ready.pop_front();
    ++done;
    auto v = n.target(e);
    if (!v) continue;
    for (const auto& next : n.edges_out_of(*v)) {
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  return done == n.edges().size();
}

bool is_single_path(const Network& n) {
  if (n.inputs().size() != 1 || n.outputs().size() != 1) return false;
  if (n.edges().size() != n.vertices().size() + 1) return false;
  NodeId e = *n.inputs().begin();
  IdSet seen_vertices;
  std::size_t edges_seen = 1;
  while (auto v = n.target(e)) {
    if (!seen_vertices.insert(*v).second) return false;
    if (n.edges_into(*v).size() != 1 || n.edges_out_of(*v).size() != 1) return false;
    e = *n.edges_out_of(*v).begin();
    ++edges_seen;
  }
  return edges_seen == n.edges().size() && seen_vertices.size() == n.vertices().size();
}

}  // namespace

NetworkFlags classify_network(const Network& n) {
  NetworkFlags f;
  f.acyclic = is_acyclic(n);
  if (!f.acyclic) return f;
  f.linear = is_single_path(n);
  const bool single_output = n.outputs().size() == 1;

  f.confluent = single_output;
  for (const auto& v : n.vertices()) {
    if (n.edges_out_of(v).size() != 1 || n.edges_into(v).empty()) f.confluent = false;
  }

  f.opetopic = single_output;
  for (const auto& e : n.thin_edges()) {
    if (n.inputs().count(e) == 0) f.opetopic = false;
  }
  for (const auto& v : n.thin_vertices()) {
    const auto& in = n.edges_into(v);
    if (in.size() != 1 || n.is_thin_edge(*in.begin())) f.opetopic = false;
  }

  f.reduced = f.opetopic;
  for (const auto& e : n.thin_edges()) {
    auto v = n.target(e);
    if (!v || n.edges_into(*v).size() != 1) f.reduced = false;
  }
  return f;
}

bool is_constellation(const Network& n, const Network& p, const Constellation& c) {
  for (const auto& v : n.vertices()) {
    if (c.count(v) == 0) throw Error(ErrorCode::not_total, "constellation misses vertex " + v);
  }
  if (c.size() != n.vertices().size()) return false;  // keys outside V(N)
  IdSet image;
  for (const auto& [v, e] : c) {
    if (p.inputs().count(e) == 0 || !image.insert(e).second) return false;
    if (n.is_thin_vertex(v) != p.is_thin_edge(e)) return false;
  }
  if (image.size() != p.inputs().size()) return false;

  std::map<NodeId, NodeId, NaturalLess> preimage;
  for (const auto& [v, e] : c) preimage[e] = v;
  for (const auto& e : p.edges()) {
    IdSet region;
    for (const auto& in : upstream_inputs(p, e)) region.insert(preimage.at(in));
    int leaving = 0;
    for (const auto& f : n.edges()) {
      auto s = n.source(f);
      if (!s || region.count(*s) == 0) continue;
      auto t = n.target(f);
      if (!t || region.count(*t) == 0) ++leaving;
    }
    if (leaving != 1) return false;
  }
  return true;
}

SequenceReport validate_sequence(const OpetopicSequence& seq, bool require_reduced) {
  SequenceReport report;
  auto& out = report.violations;
  if (seq.networks.empty()) {
    out.push_back("sequence has no networks");
    return report;
  }
  const int n = seq.dim();
  if (static_cast<int>(seq.constellations.size()) != n) {
    out.push_back("expected " + std::to_string(n) + " constellations, found " +
                  std::to_string(seq.constellations.size()));
  }
  const Network& first = seq.networks.front();
  if (!classify_network(first).linear) out.push_back("N_0 is not linear");
  if (!first.thin_edges().empty()) out.push_back("N_0 has thin edges");
  const Network& last = seq.networks.back();
  if (last.edges().size() != 1 || !last.vertices().empty()) {
    out.push_back("N_" + std::to_string(n) + " is not a single edge");
  }
  for (int q = 0; q <= n; ++q) {
    const std::string name = "N_" + std::to_string(q);
    const NetworkFlags f = classify_network(seq.networks[q]);
    if (!f.opetopic) out.push_back(name + " is not an opetopic network");
    if (require_reduced && !f.reduced) out.push_back(name + " is not reduced");
  }
  for (int q = 0; q < n && q < static_cast<int>(seq.constellations.size()); ++q) {
    const std::string name = "c_" + std::to_string(q);
    try {
      if (!is_constellation(seq.networks[q], seq.networks[q + 1], seq.constellations[q])) {
        out.push_back(name + " is not a constellation");
      }
    } catch (const Error& e) {
      out.push_back(name + ": " + e.what());
    }
  }
  if (out.empty()) {
    for (int q = 0; q <= n; ++q) {
      if (!classify_network(seq.networks[q]).confluent) {
        report.internal.push_back("N_" + std::to_string(q) + " is not confluent");
      }
    }
  }
  return report;
}

}  // namespace opetope
