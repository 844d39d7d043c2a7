#include "opetope/reduction.hpp"

#include <set>

#include "opetope/predicates.hpp"

namespace opetope {

namespace {

using CellMap = std::map<BasisId, Cell, NaturalLess>;

void require_opetopic(const Complex& k) {
  if (!classify(k).opetopic) throw Error(ErrorCode::not_opetopic, "complex is not opetopic");
}

[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorCode::internal, msg); }

std::vector<BasisId> canonical_ids(const CellMap& cells) {
  std::vector<BasisId> ids;
  for (const auto& [id, c] : cells) ids.push_back(id);
  std::stable_sort(ids.begin(), ids.end(), [&](const BasisId& x, const BasisId& y) {
    return cells.at(x).dim < cells.at(y).dim;
  });
  return ids;
}

BasisId fresh_name(const CellMap& cells, const BasisId& trigger) {
  BasisId name = "thin_" + trigger;
  for (int i = 2; cells.count(name); ++i) name = "thin_" + trigger + "_" + std::to_string(i);
  return name;
}

BasisId single(const Chain& c, const BasisId& owner, const char* what) {
  auto id = c.single_basis();
  if (!id) internal(std::string(what) + " of " + owner + " is not a single basis element");
  return *id;
}

// Orders the thin summands a_1..a_k of d-b so that d+a_i = d-a_{i+1}.
std::vector<BasisId> order_thin_path(const CellMap& cells, const BasisId& b) {
  const Chain& sum = cells.at(b).d_minus;
  std::map<BasisId, BasisId, NaturalLess> by_start;
  std::set<BasisId, NaturalLess> ends;
  for (const auto& [a, coeff] : sum.terms()) {
    const BasisId from = single(cells.at(a).d_minus, a, "d-");
    if (!by_start.emplace(from, a).second) internal("thin summands of d-" + b + " branch");
    ends.insert(single(cells.at(a).d_plus, a, "d+"));
  }
  std::vector<BasisId> starts;
  for (const auto& [from, a] : by_start) {
    if (!ends.count(from)) starts.push_back(a);
  }
  if (starts.size() != 1) internal("thin summands of d-" + b + " do not form a single path");
  std::vector<BasisId> path{starts.front()};
  for (;;) {
    auto next = by_start.find(single(cells.at(path.back()).d_plus, path.back(), "d+"));
    if (next == by_start.end()) break;
    path.push_back(next->second);
    if (path.size() > sum.size()) internal("thin summands of d-" + b + " form a loop");
  }
  if (path.size() != sum.size()) internal("thin summands of d-" + b + " do not form a single path");
  return path;
}

// Terms of (d-)^r g for the top element g: the vertices of the level networks.
std::set<BasisId, NaturalLess> vertex_side(const CellMap& cells) {
  std::vector<Cell> list;
  const Cell* top = nullptr;
  for (const auto& [id, c] : cells) {
    list.push_back(c);
    if (!top || c.dim > top->dim) top = &c;
  }
  std::set<BasisId, NaturalLess> out;
  if (!top) return out;
  const Complex k(std::move(list));
  Chain current = Chain::basis(top->id, top->dim);
  for (int r = top->dim; r > 0; --r) {
    for (const auto& [a, c] : current.terms()) out.insert(a);
    current = face(k, current, Sign::minus);
  }
  return out;
}

// Only vertices are merged. An element on the d+ side can have an all-thin d-
// whose joints are still faces of other elements, and merging there breaks
// the complex; stage 2 deals with those summands instead.
bool merge_thin_chain(CellMap& cells) {
  const auto vertices = vertex_side(cells);
  for (const auto& b : canonical_ids(cells)) {
    const Cell& cell = cells.at(b);
    if (cell.dim == 0 || cell.d_minus.size() < 2 || !vertices.count(b)) continue;
    bool all_thin = cell.d_minus.all_unit();
    for (const auto& [a, coeff] : cell.d_minus.terms()) all_thin = all_thin && cells.at(a).thin;
    if (!all_thin) continue;

    const std::vector<BasisId> path = order_thin_path(cells, b);
    const int dim = cell.dim - 1;
    std::set<BasisId, NaturalLess> removed(path.begin(), path.end());
    std::set<BasisId, NaturalLess> joints;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      joints.insert(single(cells.at(path[i]).d_plus, path[i], "d+"));
    }
    Cell merged;
    merged.id = fresh_name(cells, b);
    merged.dim = dim;
    merged.thin = true;
    merged.d_minus = cells.at(path.front()).d_minus;
    merged.d_plus = cells.at(path.back()).d_plus;

    for (const auto& id : removed) cells.erase(id);
    for (const auto& id : joints) cells.erase(id);
    for (auto& [id, c] : cells) {
      for (Chain* f : {&c.d_minus, &c.d_plus}) {
        for (const auto& j : joints) {
          if (f->contains(j)) internal("intermediate element " + j + " occurs in a face of " + id);
        }
        std::optional<Coefficient> lambda;
        std::size_t hits = 0;
        for (const auto& a : path) {
          if (!f->contains(a)) continue;
          ++hits;
          if (lambda && *lambda != f->coefficient(a)) internal("uneven thin sum in a face of " + id);
          lambda = f->coefficient(a);
        }
        if (hits == 0) continue;
        if (hits != path.size()) internal("partial thin sum in a face of " + id);
        for (const auto& a : path) f->add(a, -*lambda);
        f->add(merged.id, *lambda);
      }
    }
    cells.emplace(merged.id, std::move(merged));
    return true;
  }
  return false;
}

bool delete_orphan_thin(CellMap& cells) {
  std::set<BasisId, NaturalLess> named;
  for (const auto& [id, c] : cells) {
    if (c.dim == 0) continue;
    if (auto m = c.d_minus.single_basis(); m && *m != id) named.insert(*m);
  }
  for (const auto& a : canonical_ids(cells)) {
    const Cell& cell = cells.at(a);
    if (!cell.thin || named.count(a)) continue;
    const BasisId keep = single(cell.d_minus, a, "d-");
    const BasisId drop = single(cell.d_plus, a, "d+");
    cells.erase(a);
    cells.erase(drop);
    for (auto& [id, c] : cells) {
      for (Chain* f : {&c.d_minus, &c.d_plus}) {
        f->add(a, -f->coefficient(a));
        const Coefficient lambda = f->coefficient(drop);
        if (lambda != 0) {
          f->add(drop, -lambda);
          f->add(keep, lambda);
        }
      }
    }
    return true;
  }
  return false;
}

CellMap to_map(const Complex& k) {
  CellMap cells;
  for (const Cell* c : k.cells()) cells.emplace(c->id, *c);
  return cells;
}

Complex from_map(CellMap cells) {
  std::vector<Cell> list;
  list.reserve(cells.size());
  for (auto& [id, c] : cells) list.push_back(std::move(c));
  return Complex(std::move(list));
}

}  // namespace

Complex atomic_subcomplex(const Complex& k, const BasisId& h) {
  const Cell& top = k.cell(h);
  const int m = top.dim;
  std::set<BasisId, NaturalLess> basis{h};
  // faces[r] = (d-)^r h
  Chain current = Chain::basis(h, m);
  for (int r = 1; r <= m; ++r) {
    for (const auto& [a, c] : current.terms()) {
      for (const auto& [b, cb] : k.cell(a).d_plus.terms()) basis.insert(b);
    }
    current = face(k, current, Sign::minus);
    for (const auto& [a, c] : current.terms()) basis.insert(a);
  }
  std::vector<Cell> cells;
  for (const auto& id : basis) {
    const Cell& cell = k.cell(id);
    for (const Chain* f : {&cell.d_minus, &cell.d_plus}) {
      for (const auto& [x, c] : f->terms()) {
        if (!basis.count(x)) internal("subcomplex generated by " + h + " is not closed at " + x);
      }
    }
    cells.push_back(cell);
  }
  return Complex(std::move(cells));
}

Complex reduce(const Complex& k) {
  require_opetopic(k);
  CellMap cells = to_map(k);
  bool changed = true;
  while (changed) {
    changed = false;
    while (merge_thin_chain(cells)) changed = true;
    while (delete_orphan_thin(cells)) changed = true;
  }
  Complex out = from_map(std::move(cells));
  if (!classify(out).reduced) internal("reduction did not produce a reduced complex");
  return out;
}

namespace {

const BasisId& checked_top(const Complex& k) {
  const Classification flags = classify(k);
  if (!flags.reduced) throw Error(ErrorCode::not_reduced, "complex is not reduced");
  if (*flags.dim == 0) throw Error(ErrorCode::dimension_zero, "a point has no sources or target");
  return top_element(k);
}

}  // namespace

std::vector<Complex> sources(const Complex& k) {
  const Cell& g = k.cell(checked_top(k));
  if (auto m = g.d_minus.single_basis(); m && k.cell(*m).thin) return {};
  std::vector<Complex> out;
  for (const auto& [a, c] : g.d_minus.terms()) out.push_back(reduce(atomic_subcomplex(k, a)));
  return out;
}

Complex target(const Complex& k) {
  const Cell& g = k.cell(checked_top(k));
  return reduce(atomic_subcomplex(k, single(g.d_plus, g.id, "d+")));
}

}  // namespace opetope
