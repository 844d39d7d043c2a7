// Command-line front end: validation, conversions between complexes and
// network sequences, reduction, sources/targets, isomorphism, generation and
// DOT export. Exit codes: 0 success/true, 1 false/invalid, 2 usage or parse
// error.

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opetope/generator.hpp"
#include "opetope/io.hpp"
#include "opetope/nu.hpp"
#include "opetope/predicates.hpp"
#include "opetope/reduction.hpp"
#include "opetope/transduce.hpp"

namespace {

using namespace opetope;
using ordered = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

ordered list(const std::vector<std::string>& items) {
  ordered out = ordered::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

int validate(const std::string& path, std::string level) {
  const std::string text = read_file(path);
  const DocumentKind kind = detect_document(text);
  ordered report;
  report["file"] = path;
  bool valid = false;
  if (kind == DocumentKind::complex) {
    if (level.empty()) level = "opetopic";
    if (level != "fadc" && level != "opetopic" && level != "reduced") {
      std::cerr << "level '" << level << "' does not apply to a complex\n";
      return kUsage;
    }
    const ComplexDocument doc = parse_complex(text);
    const Classification c = classify(doc.complex);
    report["kind"] = "complex";
    report["level"] = level;
    valid = level == "fadc" ? c.fadc : level == "opetopic" ? c.opetopic : c.reduced;
    report["valid"] = valid;
    ordered flags;
    flags["fadc"] = c.fadc;
    flags["atomic"] = c.atomic;
    flags["dim"] = c.dim ? ordered(*c.dim) : ordered(nullptr);
    flags["unital"] = c.unital;
    flags["loop_free"] = c.loop_free;
    flags["opetopic"] = c.opetopic;
    flags["reduced"] = c.reduced;
    report["flags"] = flags;
    report["notes"] = list(c.notes);
  } else {
    if (level.empty()) level = "sequence";
    if (level != "sequence" && level != "opetope") {
      std::cerr << "level '" << level << "' does not apply to a sequence\n";
      return kUsage;
    }
    const SequenceDocument doc = parse_sequence(text);
    const SequenceReport r = validate_sequence(doc.sequence, level == "opetope");
    report["kind"] = "sequence";
    report["level"] = level;
    valid = r.ok();
    report["valid"] = valid;
    report["dim"] = doc.sequence.dim();
    report["violations"] = list(r.violations);
    report["internal"] = list(r.internal);
  }
  std::cout << report.dump(2) << "\n";
  return valid ? kOk : kFalse;
}

std::string atom_text(const Complex& k) {
  const NuElement x = canonical_atom(k);
  std::ostringstream out;
  for (int q = x.size() - 1; q >= 0; --q) {
    out << q << ": " << x.levels[q].minus.to_string() << " | " << x.levels[q].plus.to_string()
        << "\n";
  }
  return out.str();
}

int iso(const std::string& a, const std::string& b, const std::string& kind) {
  ordered out;
  bool found = false;
  if (kind == "complex") {
    auto m = iso_complexes(parse_complex(read_file(a)).complex, parse_complex(read_file(b)).complex);
    found = m.has_value();
    out["isomorphic"] = found;
    if (m) {
      ordered map = ordered::object();
      for (const auto& [x, y] : *m) map[x] = y;
      out["bijection"] = map;
    }
  } else {
    auto m = iso_sequences(parse_sequence(read_file(a)).sequence,
                           parse_sequence(read_file(b)).sequence);
    found = m.has_value();
    out["isomorphic"] = found;
    if (m) {
      ordered levels = ordered::array();
      for (std::size_t q = 0; q < m->edges.size(); ++q) {
        ordered level;
        level["edges"] = ordered::object();
        level["vertices"] = ordered::object();
        for (const auto& [x, y] : m->edges[q]) level["edges"][x] = y;
        for (const auto& [x, y] : m->vertices[q]) level["vertices"][x] = y;
        levels.push_back(level);
      }
      out["levels"] = levels;
    }
  }
  std::cout << out.dump(2) << "\n";
  return found ? kOk : kFalse;
}

std::string dot(const std::string& path) {
  const std::string text = read_file(path);
  if (detect_document(text) == DocumentKind::sequence) {
    const SequenceDocument doc = parse_sequence(text);
    return to_dot(doc.sequence, doc.name.empty() ? "opetope" : doc.name);
  }
  const ComplexDocument doc = parse_complex(text);
  return to_dot(networks_of(doc.complex), doc.name.empty() ? "opetope" : doc.name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opetopes as chain complexes and as network sequences"};
  app.require_subcommand(1);

  std::string file;
  std::string other;
  std::string out_path;
  std::string level;
  std::string kind = "complex";
  bool all = false;
  std::optional<int> index;
  std::uint64_t seed = 0;
  int max_dim = 3;
  int budget = 40;

  auto* validate_cmd = app.add_subcommand("validate", "Check a complex or sequence document");
  validate_cmd->add_option("file", file, "Document")->required();
  validate_cmd->add_option("--level", level, "fadc|opetopic|reduced|sequence|opetope")
      ->check(CLI::IsMember({"fadc", "opetopic", "reduced", "sequence", "opetope"}));

  auto* networks_cmd = app.add_subcommand("networks", "Complex to network sequence");
  networks_cmd->add_option("complex", file)->required();
  networks_cmd->add_option("-o,--output", out_path);

  auto* complex_cmd = app.add_subcommand("complex", "Network sequence to complex");
  complex_cmd->add_option("sequence", file)->required();
  complex_cmd->add_option("-o,--output", out_path);

  auto* atom_cmd = app.add_subcommand("atom", "Print the canonical atom");
  atom_cmd->add_option("complex", file)->required();

  auto* source_cmd = app.add_subcommand("source", "Source opetopes of a reduced complex");
  source_cmd->add_option("complex", file)->required();
  auto* all_flag = source_cmd->add_flag("--all", all, "All sources as a JSON array");
  auto* index_opt = source_cmd->add_option("--index", index, "One source, 0-based");
  all_flag->excludes(index_opt);
  source_cmd->add_option("-o,--output", out_path);

  auto* target_cmd = app.add_subcommand("target", "Target opetope of a reduced complex");
  target_cmd->add_option("complex", file)->required();
  target_cmd->add_option("-o,--output", out_path);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an opetopic complex");
  reduce_cmd->add_option("complex", file)->required();
  reduce_cmd->add_option("-o,--output", out_path);

  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two documents");
  iso_cmd->add_option("a", file)->required();
  iso_cmd->add_option("b", other)->required();
  iso_cmd->add_option("--kind", kind)->check(CLI::IsMember({"complex", "sequence"}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random opetope");
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--max-dim", max_dim)->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--budget", budget)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", out_path);

  auto* dot_cmd = app.add_subcommand("dot", "Render a sequence (or opetopic complex) as DOT");
  dot_cmd->add_option("file", file)->required();
  dot_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return validate(file, level);
    if (*networks_cmd) {
      const ComplexDocument doc = parse_complex(read_file(file));
      emit(serialize_sequence(networks_of(doc.complex), doc.name), out_path);
    } else if (*complex_cmd) {
      const SequenceDocument doc = parse_sequence(read_file(file));
      emit(serialize_complex(complex_of(doc.sequence), doc.name), out_path);
    } else if (*atom_cmd) {
      std::cout << atom_text(parse_complex(read_file(file)).complex);
    } else if (*source_cmd) {
      if (!all && !index) {
        std::cerr << "source: pass --all or --index\n";
        return kUsage;
      }
      const ComplexDocument doc = parse_complex(read_file(file));
      const std::vector<Complex> srcs = sources(doc.complex);
      if (all) {
        std::string text = "[";
        for (std::size_t i = 0; i < srcs.size(); ++i) {
          text += (i ? ",\n" : "\n") + serialize_complex(srcs[i], doc.name + ".source" + std::to_string(i));
        }
        emit(text + "]\n", out_path);
      } else {
        if (*index < 0 || *index >= static_cast<int>(srcs.size())) {
          std::cerr << "source index " << *index << " out of range (" << srcs.size() << " sources)\n";
          return kUsage;
        }
        emit(serialize_complex(srcs[*index], doc.name + ".source" + std::to_string(*index)), out_path);
      }
    } else if (*target_cmd) {
      const ComplexDocument doc = parse_complex(read_file(file));
      emit(serialize_complex(target(doc.complex), doc.name + ".target"), out_path);
    } else if (*reduce_cmd) {
      const ComplexDocument doc = parse_complex(read_file(file));
      emit(serialize_complex(reduce(doc.complex), doc.name), out_path);
    } else if (*iso_cmd) {
      return iso(file, other, kind);
    } else if (*gen_cmd) {
      emit(serialize_sequence(random_opetope(seed, max_dim, budget),
                              "random-" + std::to_string(seed)),
           out_path);
    } else if (*dot_cmd) {
      emit(dot(file), out_path);
    }
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::parse_error:
      case ErrorCode::reference_error:
      case ErrorCode::invalid_argument:
        return kUsage;
      default:
        return kFalse;
    }
  }
  return kOk;
}
