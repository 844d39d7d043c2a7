#include "opetope/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace opetope {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::parse_error, where + ": " + msg);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail(where, "unknown field '" + key + "'");
  }
}

const json& field(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Coefficient as_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Coefficient(v.get<std::uint64_t>())
                                  : Coefficient(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) fail(where, "expected an integer");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail(where, "expected an integer");
    }
    return Coefficient(s[0] == '+' ? s.substr(1) : s);
  }
  fail(where, "expected an integer");
}

ordered integer_json(const Coefficient& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

Chain parse_face(const json& v, int dim, const std::string& where) {
  Chain chain(dim);
  const json& items = as_array(v, where);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& term = items[i];
    if (!term.is_array() || term.size() != 2) fail(at, "expected [id, coefficient]");
    const std::string id = as_string(term[0], at + "[0]");
    const Coefficient coeff = as_integer(term[1], at + "[1]");
    if (coeff <= 0) fail(at + "[1]", "face coefficients must be positive");
    if (chain.contains(id)) fail(at, "repeated term " + id);
    chain.add(id, coeff);
  }
  return chain;
}

ordered face_json(const Chain& c) {
  ordered out = ordered::array();
  for (const auto& [id, coeff] : c.terms()) out.push_back(ordered::array({id, integer_json(coeff)}));
  return out;
}

// Rethrows structural failures from the model as parse errors, keeping
// dangling references as ReferenceError.
template <typename Fn>
auto build(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::reference_error) throw;
    fail(where, e.what());
  }
}

std::string join_lines(const std::string& name, const char* list_key,
                       const std::vector<std::string>& lines, const char* extra_key = nullptr,
                       const std::vector<std::string>* extra = nullptr) {
  std::ostringstream out;
  out << "{\n  \"name\": " << ordered(name).dump() << ",\n  \"" << list_key << "\": [";
  auto emit = [&](const std::vector<std::string>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      out << (i ? ",\n    " : "\n    ") << items[i];
    }
    out << (items.empty() ? "]" : "\n  ]");
  };
  emit(lines);
  if (extra_key) {
    out << ",\n  \"" << extra_key << "\": [";
    emit(*extra);
  }
  out << "\n}\n";
  return out.str();
}

}  // namespace

ComplexDocument parse_complex(const std::string& text) {
  const json root = parse_json(text);
  if (!root.is_object()) fail("document", "expected an object");
  allow_keys(root, "document", {"name", "basis"});
  ComplexDocument doc;
  if (root.contains("name")) doc.name = as_string(root["name"], "name");
  const json& basis = as_array(field(root, "document", "basis"), "basis");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string at = "basis[" + std::to_string(i) + "]";
    const json& rec = basis[i];
    if (!rec.is_object()) fail(at, "expected an object");
    allow_keys(rec, at, {"id", "dim", "thin", "d_minus", "d_plus", "epsilon"});
    Cell cell;
    cell.id = as_string(field(rec, at, "id"), at + ".id");
    const json& dim = field(rec, at, "dim");
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0 ||
        dim.get<std::int64_t>() > std::numeric_limits<int>::max()) {
      fail(at + ".dim", "expected a nonnegative integer");
    }
    cell.dim = dim.get<int>();
    if (rec.contains("thin")) {
      if (!rec["thin"].is_boolean()) fail(at + ".thin", "expected a boolean");
      cell.thin = rec["thin"].get<bool>();
    }
    const int face_dim = cell.dim > 0 ? cell.dim - 1 : 0;
    cell.d_minus = rec.contains("d_minus") ? parse_face(rec["d_minus"], face_dim, at + ".d_minus")
                                           : Chain(face_dim);
    cell.d_plus = rec.contains("d_plus") ? parse_face(rec["d_plus"], face_dim, at + ".d_plus")
                                         : Chain(face_dim);
    if (cell.dim == 0 && !(cell.d_minus.is_zero() && cell.d_plus.is_zero())) {
      fail(at, "0-dimensional elements have no faces");
    }
    if (rec.contains("epsilon")) {
      if (cell.dim != 0) fail(at + ".epsilon", "augmentation applies to dimension 0 only");
      cell.epsilon = as_integer(rec["epsilon"], at + ".epsilon");
    }
    cells.push_back(std::move(cell));
  }
  doc.complex = build("basis", [&] { return Complex(std::move(cells)); });
  return doc;
}

std::string serialize_complex(const Complex& k, const std::string& name) {
  std::vector<std::string> lines;
  for (const Cell* cell : k.cells()) {
    ordered rec;
    rec["id"] = cell->id;
    rec["dim"] = cell->dim;
    rec["thin"] = cell->thin;
    if (cell->dim == 0) {
      rec["epsilon"] = integer_json(cell->epsilon);
    } else {
      rec["d_minus"] = face_json(cell->d_minus);
      rec["d_plus"] = face_json(cell->d_plus);
    }
    lines.push_back(rec.dump());
  }
  return join_lines(name, "basis", lines);
}

namespace {

IdSet parse_id_set(const json& net, const std::string& at, const char* key, bool required) {
  IdSet out;
  if (!net.contains(key)) {
    if (required) fail(at, std::string("missing field '") + key + "'");
    return out;
  }
  const std::string where = at + "." + key;
  const json& items = as_array(net[key], where);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string id = as_string(items[i], where + "[" + std::to_string(i) + "]");
    if (!out.insert(id).second) fail(where, "repeated identifier " + id);
  }
  return out;
}

IdMap parse_pairs(const json& v, const std::string& where) {
  IdMap out;
  const json& items = as_array(v, where);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!items[i].is_array() || items[i].size() != 2) fail(at, "expected a pair of identifiers");
    const std::string key = as_string(items[i][0], at + "[0]");
    if (!out.emplace(key, as_string(items[i][1], at + "[1]")).second) {
      fail(at, "repeated entry for " + key);
    }
  }
  return out;
}

ordered id_list(const IdSet& ids) {
  ordered out = ordered::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

ordered pair_list(const IdMap& map) {
  ordered out = ordered::array();
  for (const auto& [a, b] : map) out.push_back(ordered::array({a, b}));
  return out;
}

}  // namespace

SequenceDocument parse_sequence(const std::string& text) {
  const json root = parse_json(text);
  if (!root.is_object()) fail("document", "expected an object");
  allow_keys(root, "document", {"name", "networks", "constellations"});
  SequenceDocument doc;
  if (root.contains("name")) doc.name = as_string(root["name"], "name");
  const json& nets = as_array(field(root, "document", "networks"), "networks");
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const std::string at = "networks[" + std::to_string(i) + "]";
    const json& net = nets[i];
    if (!net.is_object()) fail(at, "expected an object");
    allow_keys(net, at, {"edges", "vertices", "inputs", "outputs", "source", "target",
                         "thin_edges", "thin_vertices"});
    NetworkData d;
    d.edges = parse_id_set(net, at, "edges", true);
    d.vertices = parse_id_set(net, at, "vertices", false);
    d.inputs = parse_id_set(net, at, "inputs", true);
    d.outputs = parse_id_set(net, at, "outputs", true);
    d.thin_edges = parse_id_set(net, at, "thin_edges", false);
    d.thin_vertices = parse_id_set(net, at, "thin_vertices", false);
    if (net.contains("source")) d.source = parse_pairs(net["source"], at + ".source");
    if (net.contains("target")) d.target = parse_pairs(net["target"], at + ".target");
    doc.sequence.networks.push_back(build(at, [&] { return Network(std::move(d)); }));
  }
  const json empty = json::array();
  const json& cons = root.contains("constellations")
                         ? as_array(root["constellations"], "constellations")
                         : empty;
  if (!nets.empty() && cons.size() + 1 != nets.size()) {
    fail("constellations", "expected " + std::to_string(nets.size() - 1) + " constellations");
  }
  for (std::size_t q = 0; q < cons.size(); ++q) {
    const std::string at = "constellations[" + std::to_string(q) + "]";
    Constellation c = parse_pairs(cons[q], at);
    const Network& from = doc.sequence.networks[q];
    const Network& to = doc.sequence.networks[q + 1];
    for (const auto& [v, e] : c) {
      if (!from.vertices().count(v)) {
        throw Error(ErrorCode::reference_error, at + ": '" + v + "' is not a vertex of network " +
                                                    std::to_string(q));
      }
      if (!to.inputs().count(e)) {
        throw Error(ErrorCode::reference_error, at + ": '" + e +
                                                    "' is not an input edge of network " +
                                                    std::to_string(q + 1));
      }
    }
    doc.sequence.constellations.push_back(std::move(c));
  }
  return doc;
}

std::string serialize_sequence(const OpetopicSequence& seq, const std::string& name) {
  std::vector<std::string> nets;
  for (const auto& n : seq.networks) {
    ordered rec;
    rec["edges"] = id_list(n.edges());
    rec["vertices"] = id_list(n.vertices());
    rec["inputs"] = id_list(n.inputs());
    rec["outputs"] = id_list(n.outputs());
    rec["source"] = pair_list(n.data().source);
    rec["target"] = pair_list(n.data().target);
    rec["thin_edges"] = id_list(n.thin_edges());
    rec["thin_vertices"] = id_list(n.thin_vertices());
    nets.push_back(rec.dump());
  }
  std::vector<std::string> cons;
  for (const auto& c : seq.constellations) cons.push_back(pair_list(c).dump());
  return join_lines(name, "networks", nets, "constellations", &cons);
}

DocumentKind detect_document(const std::string& text) {
  const json root = parse_json(text);
  if (root.is_object() && root.contains("basis")) return DocumentKind::complex;
  if (root.is_object() && root.contains("networks")) return DocumentKind::sequence;
  fail("document", "neither a complex (\"basis\") nor a sequence (\"networks\")");
}

namespace {

// Ids are plain identifiers; only document names can carry quotes.
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void network_cluster(std::ostringstream& out, const Network& n, const std::string& prefix,
                     const std::string& label) {
  const std::string ind = "    ";
  out << "  subgraph \"cluster_" << prefix << "\" {\n";
  out << ind << "label=" << quoted(label) << ";\n";
  auto node = [&](const std::string& kind, const std::string& id) {
    return "\"" + prefix + ":" + kind + ":" + id + "\"";
  };
  for (const auto& v : n.vertices()) {
    out << ind << node("v", v) << " [shape=circle, width=0.15, fixedsize=true, label=\"\", xlabel=\""
        << v << "\", "
        << (n.is_thin_vertex(v) ? "style=solid, fillcolor=white" : "style=filled, fillcolor=black")
        << "];\n";
  }
  std::vector<std::string> first;
  std::vector<std::string> last;
  for (const auto& e : n.edges()) {
    if (!n.source(e)) {
      first.push_back(node("in", e));
      out << ind << first.back() << " [shape=point, style=invis];\n";
    }
    if (!n.target(e)) {
      last.push_back(node("out", e));
      out << ind << last.back() << " [shape=point, style=invis];\n";
    }
  }
  for (const auto& e : n.edges()) {
    auto s = n.source(e);
    auto t = n.target(e);
    out << ind << (s ? node("v", *s) : node("in", e)) << " -> " << (t ? node("v", *t) : node("out", e))
        << " [label=\"" << e << "\"" << (n.is_thin_edge(e) ? ", style=dashed" : "") << "];\n";
  }
  auto rank = [&](const char* which, const std::vector<std::string>& nodes) {
    if (nodes.empty()) return;
    out << ind << "{ rank=" << which << ";";
    for (const auto& id : nodes) out << " " << id << ";";
    out << " }\n";
  };
  rank("min", first);
  rank("max", last);
  out << "  }\n";
}

}  // namespace

std::string to_dot(const OpetopicSequence& seq, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=LR;\n  node [fontsize=10];\n"
      << "  edge [fontsize=9, arrowsize=0.6];\n";
  for (std::size_t q = 0; q < seq.networks.size(); ++q) {
    network_cluster(out, seq.networks[q], std::to_string(q), "N_" + std::to_string(q));
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Network& n, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=LR;\n  node [fontsize=10];\n"
      << "  edge [fontsize=9, arrowsize=0.6];\n";
  network_cluster(out, n, "0", name);
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
}

}  // namespace opetope
