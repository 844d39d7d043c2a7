#include "opetope/generator.hpp"

#include <limits>
#include <random>

namespace opetope {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, n) by rejection, independent of the standard library's
  // distribution implementations.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x <= limit) return x % n;
    }
  }

  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

 private:
  std::mt19937_64 engine_;
};

// Growth knobs, in percent.
constexpr int kCut = 45;       // cut a tree edge when partitioning a region
constexpr int kLeaf = 70;      // a singleton region becomes a bare input edge
constexpr int kWrapThin = 12;  // put a thin unary vertex after a non-thin edge
constexpr int kThinBottom = 20;
constexpr int kGrow = 85;
constexpr int kAttempts = 12;

struct Level {
  Network net;
  Constellation from_below;  // vertices of the previous level -> inputs here
};

struct Cost {
  int edges;
  int dims;
};

// Edges and extra levels needed by the cheapest completion of `n`.
Cost finish_cost(const Network& n) {
  const int v = static_cast<int>(n.vertices().size());
  const int t = static_cast<int>(n.thin_vertices().size());
  if (v == 0) return {0, 0};
  if (t == 0) return v == 1 ? Cost{1, 1} : Cost{v + 2, 2};
  if (v == 1) return {3, 2};
  return {v + 2 * t + 4, 3};
}

// Builds the next network over the vertices of `below`. Each new edge covers a
// connected region of the vertex tree of `below` that contains its own top.
class NextLevel {
 public:
  NextLevel(const Network& below, Rng* rng, bool forced) : below_(below), rng_(rng), forced_(forced) {
    for (const auto& v : below.vertices()) {
      const NodeId& out = *below.edges_out_of(v).begin();
      if (auto t = below.target(out)) {
        parent_[v] = *t;
        children_[*t].insert(v);
      } else {
        root_ = v;
      }
    }
  }

  Level build() {
    IdSet all = below_.vertices();
    const NodeId out = make_edge(all, root_);
    d_.outputs.insert(out);
    Level level{Network(std::move(d_)), std::move(c_)};
    return level;
  }

 private:
  NodeId new_edge() {
    NodeId e = "e" + std::to_string(edge_count_++);
    d_.edges.insert(e);
    return e;
  }

  NodeId new_vertex(bool thin) {
    NodeId v = "v" + std::to_string(vertex_count_++);
    d_.vertices.insert(v);
    if (thin) d_.thin_vertices.insert(v);
    return v;
  }

  NodeId leaf(const NodeId& v) {
    NodeId e = new_edge();
    d_.inputs.insert(e);
    if (below_.is_thin_vertex(v)) d_.thin_edges.insert(e);
    c_[v] = e;
    return e;
  }

  // A vertex fed by `inputs`, returning its outgoing edge.
  NodeId vertex_over(const std::vector<NodeId>& inputs, bool thin) {
    const NodeId w = new_vertex(thin);
    for (const auto& e : inputs) d_.target[e] = w;
    const NodeId out = new_edge();
    d_.source[out] = w;
    return out;
  }

  NodeId maybe_wrap(const NodeId& e) {
    if (forced_ || d_.thin_edges.count(e) || !rng_->chance(kWrapThin)) return e;
    return vertex_over({e}, true);
  }

  NodeId make_edge(const IdSet& region, const NodeId& top) {
    if (region.size() == 1) {
      const NodeId in = leaf(top);
      // A thin input must be the only edge into its vertex.
      if (below_.is_thin_vertex(top)) return maybe_wrap(vertex_over({in}, false));
      if (forced_ || rng_->chance(kLeaf)) return maybe_wrap(in);
      return maybe_wrap(vertex_over({in}, false));
    }
    std::vector<std::pair<NodeId, IdSet>> parts = partition(region, top);
    std::vector<NodeId> inputs;
    for (const auto& [part_top, part] : parts) inputs.push_back(make_edge(part, part_top));
    return maybe_wrap(vertex_over(inputs, false));
  }

  // Splits a connected region into connected pieces by cutting random tree
  // edges; thin vertices always become singletons. If nothing is cut the
  // region is split into singletons so that recursion makes progress.
  std::vector<std::pair<NodeId, IdSet>> partition(const IdSet& region, const NodeId& top) {
    std::map<NodeId, NodeId, NaturalLess> piece_of;
    std::vector<NodeId> order{top};
    piece_of[top] = top;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const NodeId v = order[i];
      auto it = children_.find(v);
      if (it == children_.end()) continue;
      for (const auto& child : it->second) {
        if (!region.count(child)) continue;
        const bool cut = forced_ || below_.is_thin_vertex(child) || below_.is_thin_vertex(v) ||
                         rng_->chance(kCut);
        piece_of[child] = cut ? child : piece_of[v];
        order.push_back(child);
      }
    }
    std::map<NodeId, IdSet, NaturalLess> pieces;
    for (const auto& [v, piece] : piece_of) pieces[piece].insert(v);
    if (pieces.size() == 1) {
      pieces.clear();
      for (const auto& v : region) pieces[v].insert(v);
    }
    return {pieces.begin(), pieces.end()};
  }

  const Network& below_;
  Rng* rng_;
  bool forced_;
  std::map<NodeId, NodeId, NaturalLess> parent_;
  std::map<NodeId, IdSet, NaturalLess> children_;
  NodeId root_;
  NetworkData d_;
  Constellation c_;
  int edge_count_ = 0;
  int vertex_count_ = 0;
};

Network linear_network(int vertices, Rng& rng) {
  NetworkData d;
  for (int i = 0; i <= vertices; ++i) d.edges.insert("e" + std::to_string(i));
  d.inputs.insert("e0");
  d.outputs.insert("e" + std::to_string(vertices));
  for (int i = 0; i < vertices; ++i) {
    const NodeId v = "v" + std::to_string(i);
    d.vertices.insert(v);
    d.target["e" + std::to_string(i)] = v;
    d.source["e" + std::to_string(i + 1)] = v;
    if (rng.chance(kThinBottom)) d.thin_vertices.insert(v);
  }
  return Network(std::move(d));
}

}  // namespace

OpetopicSequence random_opetope(std::uint64_t seed, int max_dim, int size_budget) {
  if (max_dim < 0) throw Error(ErrorCode::invalid_argument, "max_dim must be nonnegative");
  if (size_budget < 1) throw Error(ErrorCode::invalid_argument, "size_budget must be positive");
  Rng rng(seed);
  OpetopicSequence seq;

  // An arrow needs three edges over two levels; anything less is a point.
  if (max_dim == 0 || size_budget < 3) {
    seq.networks.push_back(Network::single_edge("e0"));
    return seq;
  }

  auto fits = [&](const Network& n, int used, int dim) {
    const Cost c = finish_cost(n);
    return used + static_cast<int>(n.edges().size()) + c.edges <= size_budget &&
           dim + c.dims <= max_dim;
  };

  std::optional<Network> bottom;
  for (int attempt = 0; attempt < kAttempts && !bottom; ++attempt) {
    Network candidate = linear_network(1 + static_cast<int>(rng.below(4)), rng);
    if (fits(candidate, 0, 0)) bottom = std::move(candidate);
  }
  if (!bottom) {
    NetworkData arrow;
    arrow.edges = {"e0", "e1"};
    arrow.vertices = {"v0"};
    arrow.inputs = {"e0"};
    arrow.outputs = {"e1"};
    arrow.target = {{"e0", "v0"}};
    arrow.source = {{"e1", "v0"}};
    bottom = Network(std::move(arrow));
  }
  int used = static_cast<int>(bottom->edges().size());
  seq.networks.push_back(std::move(*bottom));

  while (!seq.networks.back().vertices().empty()) {
    const Network& current = seq.networks.back();
    const int next_dim = seq.dim() + 1;
    std::optional<Level> next;
    if (rng.chance(kGrow)) {
      for (int attempt = 0; attempt < kAttempts && !next; ++attempt) {
        Level candidate = NextLevel(current, &rng, false).build();
        if (fits(candidate.net, used, next_dim)) next = std::move(candidate);
      }
    }
    if (!next) next = NextLevel(current, &rng, true).build();
    used += static_cast<int>(next->net.edges().size());
    seq.constellations.push_back(std::move(next->from_below));
    seq.networks.push_back(std::move(next->net));
  }
  return seq;
}

}  // namespace opetope
