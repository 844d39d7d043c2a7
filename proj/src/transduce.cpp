#include "opetope/transduce.hpp"

#include <sstream>

#include "labeled_iso.hpp"
#include "opetope/predicates.hpp"

namespace opetope {

Network build_network(const Complex& k, const NuElement& x, int q, Sign sign) {
  if (!is_member(k, x)) throw Error(ErrorCode::invalid_argument, "not a member of nu K");
  const auto problems = distinctness_check(k, x);
  if (!problems.empty()) throw Error(ErrorCode::multiplicity_violation, problems.front());

  const Chain edges = g_chain(k, x, q, sign);
  const auto level = x.at(q);
  const auto above = x.at(q + 1);
  const Chain& cells = sign == Sign::minus ? above.minus : above.plus;

  NetworkData d;
  for (const auto& [id, c] : edges.terms()) {
    d.edges.insert(id);
    if (k.cell(id).thin) d.thin_edges.insert(id);
  }
  for (const auto& [a, c] : cells.terms()) {
    d.vertices.insert(a);
    if (k.cell(a).thin) d.thin_vertices.insert(a);
    for (const auto& [e, ce] : k.cell(a).d_minus.terms()) d.target[e] = a;
    for (const auto& [e, ce] : k.cell(a).d_plus.terms()) d.source[e] = a;
  }
  for (const auto& [id, c] : level.minus.terms()) d.inputs.insert(id);
  for (const auto& [id, c] : level.plus.terms()) d.outputs.insert(id);
  return Network(std::move(d));
}

OpetopicSequence networks_of(const Complex& k) {
  if (!classify(k).opetopic) throw Error(ErrorCode::not_opetopic, "complex is not opetopic");
  const NuElement atom = canonical_atom(k);
  const int n = k.max_dim();
  OpetopicSequence seq;
  for (int q = 0; q <= n; ++q) seq.networks.push_back(build_network(k, atom, q, Sign::minus));
  for (int q = 0; q < n; ++q) {
    Constellation c;
    for (const auto& v : seq.networks[q].vertices()) c[v] = v;
    seq.constellations.push_back(std::move(c));
  }
  return seq;
}

namespace {

std::string level_name(int q, const NodeId& edge) { return std::to_string(q) + "_" + edge; }

}  // namespace

Complex complex_of(const OpetopicSequence& seq) {
  const SequenceReport report = validate_sequence(seq, false);
  if (!report.ok()) {
    std::string msg = "invalid opetopic sequence:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    for (const auto& v : report.internal) msg += " " + v + ";";
    throw Error(ErrorCode::invalid_sequence, msg);
  }
  std::vector<Cell> cells;
  const int n = seq.dim();
  for (int q = 0; q <= n; ++q) {
    const Network& net = seq.networks[q];
    std::map<NodeId, NodeId, NaturalLess> preimage;
    if (q > 0) {
      for (const auto& [v, e] : seq.constellations[q - 1]) preimage[e] = v;
    }
    for (const auto& e : net.edges()) {
      Cell cell;
      cell.id = level_name(q, e);
      cell.dim = q;
      cell.thin = net.is_thin_edge(e);
      if (q > 0) {
        const Network& below = seq.networks[q - 1];
        IdSet region;
        for (const auto& in : upstream_inputs(net, e)) region.insert(preimage.at(in));
        cell.d_minus = Chain(q - 1);
        cell.d_plus = Chain(q - 1);
        for (const auto& f : below.edges()) {
          auto s = below.source(f);
          auto t = below.target(f);
          const bool from_inside = s && region.count(*s);
          const bool to_inside = t && region.count(*t);
          if (from_inside && !to_inside) cell.d_plus.add(level_name(q - 1, f), 1);
          if (to_inside && !from_inside) cell.d_minus.add(level_name(q - 1, f), 1);
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return Complex(std::move(cells));
}

namespace {

detail::LabeledDigraph encode(const Complex& k, std::vector<BasisId>& ids) {
  detail::LabeledDigraph g;
  std::map<BasisId, int, NaturalLess> index;
  for (const Cell* cell : k.cells()) {
    std::ostringstream label;
    label << "d" << cell->dim << (cell->thin ? "t" : "n");
    if (cell->dim == 0) label << "e" << cell->epsilon;
    index[cell->id] = g.add_node(label.str());
    ids.push_back(cell->id);
  }
  for (const Cell* cell : k.cells()) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      for (const auto& [id, coeff] : k.face_of(cell->id, s).terms()) {
        g.add_arc(index.at(cell->id), index.at(id), to_string(s) + coeff.str());
      }
    }
  }
  return g;
}

struct SequenceEncoding {
  detail::LabeledDigraph graph;
  std::vector<std::pair<int, NodeId>> edge_of;    // node -> (level, edge), or level -1
  std::vector<std::pair<int, NodeId>> vertex_of;  // node -> (level, vertex), or level -1
};

SequenceEncoding encode(const OpetopicSequence& seq) {
  SequenceEncoding enc;
  auto& g = enc.graph;
  std::vector<std::map<NodeId, int, NaturalLess>> edge_index(seq.networks.size());
  std::vector<std::map<NodeId, int, NaturalLess>> vertex_index(seq.networks.size());
  auto push = [&](std::string label, int q, const NodeId& id, bool is_edge) {
    const int node = g.add_node(std::move(label));
    enc.edge_of.emplace_back(is_edge ? q : -1, is_edge ? id : NodeId());
    enc.vertex_of.emplace_back(is_edge ? -1 : q, is_edge ? NodeId() : id);
    return node;
  };
  for (std::size_t q = 0; q < seq.networks.size(); ++q) {
    const Network& net = seq.networks[q];
    const std::string level = std::to_string(q);
    for (const auto& e : net.edges()) {
      std::string label = "E" + level + (net.is_thin_edge(e) ? "t" : "n") +
                          (net.inputs().count(e) ? "i" : "-") + (net.outputs().count(e) ? "o" : "-");
      edge_index[q][e] = push(std::move(label), static_cast<int>(q), e, true);
    }
    for (const auto& v : net.vertices()) {
      vertex_index[q][v] = push("V" + level + (net.is_thin_vertex(v) ? "t" : "n"),
                                static_cast<int>(q), v, false);
    }
    for (const auto& [e, v] : net.data().source) g.add_arc(vertex_index[q].at(v), edge_index[q].at(e), "s");
    for (const auto& [e, v] : net.data().target) g.add_arc(edge_index[q].at(e), vertex_index[q].at(v), "t");
  }
  for (std::size_t q = 0; q < seq.constellations.size() && q + 1 < seq.networks.size(); ++q) {
    for (const auto& [v, e] : seq.constellations[q]) {
      auto vi = vertex_index[q].find(v);
      auto ei = edge_index[q + 1].find(e);
      if (vi == vertex_index[q].end() || ei == edge_index[q + 1].end()) {
        throw Error(ErrorCode::reference_error, "constellation entry " + v + " -> " + e +
                                                    " names unknown elements");
      }
      g.add_arc(vi->second, ei->second, "c");
    }
  }
  return enc;
}

}  // namespace

std::optional<BasisMap> iso_complexes(const Complex& a, const Complex& b) {
  std::vector<BasisId> ids_a;
  std::vector<BasisId> ids_b;
  const auto ga = encode(a, ids_a);
  const auto gb = encode(b, ids_b);
  auto mapping = detail::find_isomorphism(ga, gb);
  if (!mapping) return std::nullopt;
  BasisMap out;
  for (std::size_t i = 0; i < ids_a.size(); ++i) out[ids_a[i]] = ids_b[(*mapping)[i]];
  return out;
}

std::optional<SequenceIsomorphism> iso_sequences(const OpetopicSequence& a,
                                                 const OpetopicSequence& b) {
  if (a.networks.size() != b.networks.size() ||
      a.constellations.size() != b.constellations.size()) {
    return std::nullopt;
  }
  const SequenceEncoding ea = encode(a);
  const SequenceEncoding eb = encode(b);
  auto mapping = detail::find_isomorphism(ea.graph, eb.graph);
  if (!mapping) return std::nullopt;
  SequenceIsomorphism out;
  out.edges.resize(a.networks.size());
  out.vertices.resize(a.networks.size());
  for (std::size_t i = 0; i < mapping->size(); ++i) {
    const int j = (*mapping)[i];
    if (ea.edge_of[i].first >= 0) {
      out.edges[ea.edge_of[i].first][ea.edge_of[i].second] = eb.edge_of[j].second;
    } else {
      out.vertices[ea.vertex_of[i].first][ea.vertex_of[i].second] = eb.vertex_of[j].second;
    }
  }
  return out;
}

}  // namespace opetope
