#include "opetope/predicates.hpp"

#include <map>
#include <set>

namespace opetope {

namespace {

void require_fast_path(const Complex& k) {
  for (const Cell* cell : k.cells()) {
    if (cell->dim > 0 && !cell->d_plus.single_basis()) {
      throw Error(ErrorCode::fast_path_inapplicable,
                  "d+ of " + cell->id + " is not a single basis element");
    }
  }
}

using Digraph = std::map<BasisId, std::set<BasisId, NaturalLess>, NaturalLess>;

void add_arcs(Digraph& g, const Chain& from, const Chain& to) {
  for (const auto& [u, cu] : from.terms()) {
    for (const auto& [v, cv] : to.terms()) g[u].insert(v);
  }
}

// Kahn's algorithm, smallest available id first. Returns false on a cycle
// (a self-arc counts as one).
bool topological_order(const Complex& k, const Digraph& g, std::vector<BasisId>* order) {
  std::map<BasisId, int, NaturalLess> indegree;
  for (const Cell* cell : k.cells()) indegree[cell->id] = 0;
  for (const auto& [u, outs] : g) {
    for (const auto& v : outs) ++indegree[v];
  }
  std::set<BasisId, NaturalLess> ready;
  for (const auto& [id, d] : indegree) {
    if (d == 0) ready.insert(id);
  }
  std::vector<BasisId> result;
  while (!ready.empty()) {
    BasisId u = *ready.begin();
    ready.erase(ready.begin());
    result.push_back(u);
    auto it = g.find(u);
    if (it == g.end()) continue;
    for (const auto& v : it->second) {
      if (--indegree[v] == 0) ready.insert(v);
    }
  }
  if (result.size() != indegree.size()) return false;
  if (order) *order = std::move(result);
  return true;
}

}  // namespace

AtomicResult is_atomic(const Complex& k) {
  if (k.empty()) throw Error(ErrorCode::empty_basis, "complex has no basis elements");
  const int n = k.max_dim();
  if (k.ids_of_dim(n).size() != 1) return {};
  std::set<BasisId, NaturalLess> covered;
  for (const Cell* cell : k.cells()) {
    for (const auto& [id, c] : cell->d_minus.terms()) covered.insert(id);
    for (const auto& [id, c] : cell->d_plus.terms()) covered.insert(id);
  }
  for (const Cell* cell : k.cells()) {
    if (cell->dim < n && covered.count(cell->id) == 0) return {};
  }
  return {true, n};
}

bool is_unital(const Complex& k, Mode mode) {
  if (mode == Mode::fast) {
    require_fast_path(k);
    for (const auto& id : k.ids_of_dim(0)) {
      if (k.cell(id).epsilon != 1) return false;
    }
    return true;
  }
  for (const Cell* cell : k.cells()) {
    const Chain self = Chain::basis(cell->id, cell->dim);
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (augment(k, face_iter(k, self, cell->dim, s)) != 1) return false;
    }
  }
  return true;
}

bool is_loop_free(const Complex& k, Mode mode, std::vector<BasisId>* witness) {
  if (mode == Mode::fast) require_fast_path(k);
  Digraph g;
  for (const Cell* cell : k.cells()) {
    if (cell->dim == 0) continue;
    if (mode == Mode::fast) {
      add_arcs(g, cell->d_minus, cell->d_plus);
      continue;
    }
    const Chain self = Chain::basis(cell->id, cell->dim);
    for (int r = 1; r <= cell->dim; ++r) {
      add_arcs(g, face_iter(k, self, r, Sign::minus), face_iter(k, self, r, Sign::plus));
    }
  }
  return topological_order(k, g, witness);
}

const BasisId& top_element(const Complex& k) {
  if (k.empty()) throw Error(ErrorCode::empty_basis, "complex has no basis elements");
  const auto& top = k.ids_of_dim(k.max_dim());
  if (top.size() != 1) throw Error(ErrorCode::not_atomic, "complex has no unique top element");
  return top.front();
}

Classification classify(const Complex& k) {
  Classification out;
  auto& notes = out.notes;
  auto guarded = [&](const char* what, auto&& fn) {
    try {
      return static_cast<bool>(fn());
    } catch (const Error& e) {
      notes.push_back(std::string(what) + ": " + e.what());
      return false;
    }
  };

  const FadcReport fadc = validate_fadc(k);
  out.fadc = fadc.ok();
  for (const auto& v : fadc.violations) notes.push_back("fadc: " + v);

  guarded("atomic", [&] {
    AtomicResult a = is_atomic(k);
    out.atomic = a.atomic;
    out.dim = a.dim;
    if (!a.atomic) notes.push_back("atomic: no unique top element covering all lower elements");
    return a.atomic;
  });
  out.unital = guarded("unital", [&] { return is_unital(k, Mode::general); });
  if (!out.unital) notes.push_back("unital: iterated faces do not all augment to 1");
  out.loop_free = guarded("loop_free", [&] { return is_loop_free(k, Mode::general); });
  if (!out.loop_free) notes.push_back("loop_free: precedence digraph has a cycle");

  bool thin_ok = true;
  for (const Cell* cell : k.cells()) {
    if (cell->thin && cell->dim == 0) {
      thin_ok = false;
      notes.push_back("opetopic: thin element " + cell->id + " has dimension 0");
    }
    if (cell->dim > 0) {
      auto plus = cell->d_plus.single_basis();
      if (!plus || !k.contains(*plus) || k.cell(*plus).thin) {
        thin_ok = false;
        notes.push_back("opetopic: d+ of " + cell->id + " is not a single non-thin element");
      }
    }
    if (cell->thin) {
      auto minus = cell->d_minus.single_basis();
      if (!minus || !k.contains(*minus) || k.cell(*minus).thin) {
        thin_ok = false;
        notes.push_back("opetopic: d- of thin " + cell->id + " is not a single non-thin element");
      }
    }
  }
  out.opetopic = out.fadc && out.atomic && out.unital && out.loop_free && thin_ok;

  bool reduced_ok = true;
  std::set<BasisId, NaturalLess> thin_sources;
  for (const Cell* cell : k.cells()) {
    if (cell->dim == 0) continue;
    if (auto m = cell->d_minus.single_basis()) {
      if (*m != cell->id) thin_sources.insert(*m);
    }
  }
  for (const Cell* cell : k.cells()) {
    if (cell->thin && thin_sources.count(cell->id) == 0) {
      reduced_ok = false;
      notes.push_back("reduced: thin " + cell->id + " is not d- of any other element");
    }
  }
  out.reduced = out.opetopic && reduced_ok;
  return out;
}

}  // namespace opetope
