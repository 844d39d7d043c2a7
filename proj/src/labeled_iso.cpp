#include "labeled_iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace opetope::detail {

namespace {

struct Incidence {
  int label;
  int dir;  // 0 outgoing, 1 incoming
  int other;
};

class Matcher {
 public:
  Matcher(const LabeledDigraph& g, const LabeledDigraph& h)
      : n_(static_cast<int>(g.node_labels.size())), adj_(2 * n_) {
    std::map<std::string, int> arc_ids;
    auto intern = [&](const std::string& s) {
      return arc_ids.emplace(s, static_cast<int>(arc_ids.size())).first->second;
    };
    for (int side = 0; side < 2; ++side) {
      const LabeledDigraph& src = side == 0 ? g : h;
      const int offset = side * n_;
      for (const auto& arc : src.arcs) {
        const int l = intern(arc.label);
        adj_[arc.from + offset].push_back({l, 0, arc.to + offset});
        adj_[arc.to + offset].push_back({l, 1, arc.from + offset});
      }
    }
    std::map<std::string, int> node_ids;
    colors_.resize(2 * n_);
    for (int i = 0; i < 2 * n_; ++i) {
      const auto& label = i < n_ ? g.node_labels[i] : h.node_labels[i - n_];
      colors_[i] = node_ids.emplace(label, static_cast<int>(node_ids.size())).first->second;
    }
    refine(static_cast<int>(node_ids.size()));
  }

  std::optional<std::vector<int>> run() {
    std::map<int, int> histogram;
    for (int i = 0; i < n_; ++i) ++histogram[colors_[i]];
    for (int i = n_; i < 2 * n_; ++i) {
      if (--histogram[colors_[i]] < 0) return std::nullopt;
    }
    for (int i = 0; i < n_; ++i) class_size_[colors_[i]]++;
    build_order();
    image_.assign(n_, -1);
    preimage_.assign(n_, -1);
    if (!search(0)) return std::nullopt;
    return image_;
  }

 private:
  void refine(int count) {
    for (;;) {
      using Signature = std::pair<int, std::vector<std::tuple<int, int, int>>>;
      std::map<Signature, int> ids;
      std::vector<int> next(colors_.size());
      for (std::size_t i = 0; i < colors_.size(); ++i) {
        Signature sig{colors_[i], {}};
        for (const auto& inc : adj_[i]) sig.second.emplace_back(inc.label, inc.dir, colors_[inc.other]);
        std::sort(sig.second.begin(), sig.second.end());
        next[i] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
      }
      colors_ = std::move(next);
      if (static_cast<int>(ids.size()) == count) return;
      count = static_cast<int>(ids.size());
    }
  }

  // Smallest colour class first, then stay adjacent to what is placed.
  void build_order() {
    std::vector<bool> placed(n_, false);
    std::vector<bool> touched(n_, false);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int pass = 0; pass < 2 && best < 0; ++pass) {
        for (int i = 0; i < n_; ++i) {
          if (placed[i] || (pass == 0 && !touched[i])) continue;
          if (best < 0 || class_size_[colors_[i]] < class_size_[colors_[best]]) best = i;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (const auto& inc : adj_[best]) touched[inc.other] = true;
    }
  }

  bool consistent(int u, int v) const {
    std::vector<std::tuple<int, int, int>> from_g;
    std::vector<std::tuple<int, int, int>> from_h;
    for (const auto& inc : adj_[u]) {
      if (image_[inc.other] >= 0) from_g.emplace_back(inc.label, inc.dir, image_[inc.other]);
    }
    for (const auto& inc : adj_[v + n_]) {
      const int y = inc.other - n_;
      if (preimage_[y] >= 0) from_h.emplace_back(inc.label, inc.dir, y);
    }
    if (from_g.size() != from_h.size()) return false;
    std::sort(from_g.begin(), from_g.end());
    std::sort(from_h.begin(), from_h.end());
    return from_g == from_h;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int v = 0; v < n_; ++v) {
      if (preimage_[v] >= 0 || colors_[v + n_] != colors_[u]) continue;
      image_[u] = v;
      preimage_[v] = u;
      if (consistent(u, v) && search(depth + 1)) return true;
      image_[u] = -1;
      preimage_[v] = -1;
    }
    return false;
  }

  int n_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<int> colors_;
  std::map<int, int> class_size_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<int> preimage_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LabeledDigraph& g, const LabeledDigraph& h) {
  if (g.node_labels.size() != h.node_labels.size() || g.arcs.size() != h.arcs.size()) {
    return std::nullopt;
  }
  return Matcher(g, h).run();
}

}  // namespace opetope::detail
