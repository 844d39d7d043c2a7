#pragma once

// Isomorphism of finite node- and arc-labelled digraphs. Both complexes and
// network sequences are encoded this way so they share one search.

#include <optional>
#include <string>
#include <vector>

namespace opetope::detail {

struct LabeledDigraph {
  struct Arc {
    int from;
    int to;
    std::string label;
  };
  std::vector<std::string> node_labels;
  std::vector<Arc> arcs;

  int add_node(std::string label) {
    node_labels.push_back(std::move(label));
    return static_cast<int>(node_labels.size()) - 1;
  }
  void add_arc(int from, int to, std::string label) {
    arcs.push_back({from, to, std::move(label)});
  }
};

// Returns mapping[i] = image of node i of `g` in `h`, or nothing.
std::optional<std::vector<int>> find_isomorphism(const LabeledDigraph& g, const LabeledDigraph& h);

}  // namespace opetope::detail
