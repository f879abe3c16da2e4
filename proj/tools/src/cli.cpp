#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ealab/axioms.hpp"
#include "ealab/completion.hpp"
#include "ealab/dot.hpp"
#include "ealab/enumerate.hpp"
#include "ealab/error.hpp"
#include "ealab/io.hpp"
#include "ealab/isomorphism.hpp"
#include "ealab/lattice.hpp"
#include "ealab/report.hpp"
#include "ealab/states.hpp"
#include "ealab/structure.hpp"
#include "expr.hpp"

namespace ealab::cli {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  std::string read(const std::string& path) const {
    if (path == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    return read_file(path);
  }

  void emit(const std::string& path, const std::string& text) const {
    if (path.empty() || path == "-") {
      out << text;
    } else {
      write_file(path, text);
    }
  }
};

std::string set_of(const EffectAlgebraTable& t, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += t.name(xs[i]);
  }
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Io& io, const std::string& file) {
  const auto t = parse_ea(io.read(file));
  const auto report = validate_axioms(t);
  if (report.passed()) {
    io.out << "ok: effect algebra with " << t.size() << " elements\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    std::vector<Element> w = v.witness;
    io.err << axiom_tag(v.axiom) << " violated, witness " << set_of(t, w)
           << "\n";
  }
  return kExitFalse;
}

void print_summary(const Io& io, const EffectAlgebraTable& t) {
  auto& o = io.out;
  const auto order = derive_order(t);
  o << "elements: " << t.size() << "\n";
  o << "atoms: " << set_of(t, atoms(order)) << "\n";
  const auto lt = lattice_tables(order.poset());
  if (!lt.is_lattice) {
    o << "lattice: no (" << t.name(lt.counterexample->first) << ", "
      << t.name(lt.counterexample->second) << ")\n";
  } else {
    o << "lattice: yes, modular: " << yes_no(is_modular(lt).holds)
      << ", distributive: " << yes_no(is_distributive(lt).holds) << "\n";
    const auto e = LatticeEffectAlgebra::make(t);
    const auto sr = centers(e);
    o << "sharp: " << set_of(t, sr.sharp) << "\n";
    o << "blocks: " << sr.blocks.size() << "\n";
    o << "compatibility center: " << set_of(t, sr.compat_center) << "\n";
    o << "center: " << set_of(t, sr.center) << "\n";
    o << "central atoms: " << set_of(t, sr.central_atoms) << "\n";
    o << "mv: " << yes_no(sr.is_mv)
      << ", irreducible: " << yes_no(sr.is_irreducible)
      << ", sharply dominating: " << yes_no(sr.sharply_dominating) << "\n";
  }
  for (auto mode : {StateMode::kAny, StateMode::kFaithful,
                    StateMode::kSubadditive}) {
    if (is_subadditive(mode) && !lt.is_lattice) continue;
    o << to_string(mode) << " state: "
      << (find_state(t, mode).found() ? "yes" : "no") << "\n";
  }
}

int cmd_analyze(const Io& io, const std::string& file,
                const std::string& json_out, const std::string& verify) {
  const auto t = parse_ea(io.read(file));
  if (!verify.empty()) {
    const auto problems = verify_report(t, io.read(verify));
    for (const auto& p : problems) io.err << "report: " << p << "\n";
    if (!problems.empty()) return kExitFalse;
    io.out << "report verified\n";
    return kExitOk;
  }
  const bool valid = validate_axioms(t).passed();
  if (!json_out.empty()) {
    io.emit(json_out, analysis_report(t));
  } else if (valid) {
    print_summary(io, t);
  }
  if (!valid) {
    io.err << "not an effect algebra\n";
    return kExitFalse;
  }
  return kExitOk;
}

int cmd_blocks(const Io& io, const std::string& file) {
  const auto e = LatticeEffectAlgebra::make(parse_ea(io.read(file)));
  const auto bs = blocks(e);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    io.out << "block " << i + 1 << ": " << set_of(e.table, bs[i]) << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const Io& io, const std::string& file) {
  const auto e = LatticeEffectAlgebra::make(parse_ea(io.read(file)));
  const auto d = decompose(e);
  const auto& t = e.table;
  io.out << "central atoms: " << set_of(t, d.central_atoms) << "\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    io.out << "factor " << i + 1 << ": [0, " << t.name(d.central_atoms[i])
           << "] = " << set_of(t, d.factors[i].members)
           << (d.factor_irreducible[i] ? " (irreducible)" : "") << "\n";
  }
  io.out << "product size: " << d.product_size() << " (|E| = " << t.size()
         << ")\n";
  return d.iso_bijective && d.iso_preserves_sum ? kExitOk : kExitInternal;
}

int cmd_state(const Io& io, const std::string& file, const std::string& mode_s) {
  const auto mode = parse_state_mode(mode_s);
  const auto t = parse_ea(io.read(file));
  const auto q = find_state(t, mode);
  if (const auto* f = std::get_if<StateFound>(&q.result)) {
    io.out << to_string(mode) << " state found\n";
    for (Element x = 0; x < t.size(); ++x) {
      io.out << "  " << t.name(x) << " = " << to_string(f->state.values[x])
             << "\n";
    }
    if (f->t_star) io.out << "  t* = " << to_string(*f->t_star) << "\n";
    return kExitOk;
  }
  const auto& cert = std::get<StateInfeasible>(q.result).certificate;
  const auto sys = state_system(t, mode);
  io.out << "no " << to_string(mode) << " state\n";
  io.out << (cert.kind == Certificate::Kind::kInfeasible
                 ? "certificate (infeasible):\n"
                 : "certificate (t <= " + to_string(cert.bound) + "):\n");
  for (std::size_t i = 0; i < cert.multipliers.size(); ++i) {
    if (sgn(cert.multipliers[i]) != 0) {
      io.out << "  " << sys.constraints[i].label << " * "
             << to_string(cert.multipliers[i]) << "\n";
    }
  }
  return kExitFalse;
}

int cmd_construct(const Io& io, const std::vector<std::string>& words,
                  const std::string& out) {
  const auto t = evaluate_construction(
      words, [&](const std::string& p) { return io.read(p); });
  io.emit(out, serialize_ea(t));
  return kExitOk;
}

int cmd_complete(const Io& io, const std::string& file, const std::string& out) {
  const auto p = parse_poset(io.read(file));
  const auto r = dedekind_macneille(p);
  io.emit(out, "# added_count: " + std::to_string(r.added_count) + "\n" +
                   serialize_poset(r.completed));
  return kExitOk;
}

int cmd_iso(const Io& io, const std::string& f1, const std::string& f2) {
  const auto a = parse_ea(io.read(f1));
  const auto b = parse_ea(io.read(f2));
  const auto m = are_isomorphic(a, b);
  if (!m) {
    io.out << "not isomorphic\n";
    return kExitFalse;
  }
  io.out << "isomorphic\n";
  for (Element x = 0; x < a.size(); ++x) {
    io.out << "  " << a.name(x) << " -> " << b.name(m->mapping[x]) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const Io& io, std::size_t size, const std::string& filter_s,
                  const std::string& dir, std::size_t bound) {
  const auto filter = parse_filter(filter_s);
  const auto all = enumerate_all(size, Filter::kAll, bound);
  std::vector<EffectAlgebraTable> kept;
  for (const auto& t : all) {
    if (passes_filter(t, filter)) kept.push_back(t);
  }
  const auto row = census(size, all);
  std::ostringstream census_text;
  census_text << "size\ttotal\tlattice\tmv\tmodular\tirreducible\tfaithful\n"
              << row.size << '\t' << row.count_total << '\t'
              << row.count_lattice << '\t' << row.count_mv << '\t'
              << row.count_modular << '\t' << row.count_irreducible << '\t'
              << row.count_with_faithful_state << '\n';
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::ostringstream name;
      name << "n" << size << "-" << std::setw(3) << std::setfill('0') << i + 1
           << ".ea";
      write_file((std::filesystem::path(dir) / name.str()).string(),
                 serialize_ea(kept[i]));
    }
    write_file((std::filesystem::path(dir) / "census.tsv").string(),
               census_text.str());
  }
  io.out << census_text.str();
  io.out << kept.size() << " algebra(s) passing filter '" << filter_s
         << "'\n";
  return kExitOk;
}

int cmd_export_dot(const Io& io, const std::string& file,
                   const std::string& graph, const std::string& out) {
  const auto g = parse_graph(graph);
  io.emit(out, to_dot(parse_ea(io.read(file)), g));
  return kExitOk;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return kExitUsage;
  switch (e.kind()) {
    case ErrorKind::kParseError:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kBoundExceeded:
    case ErrorKind::kContradictorySum:
    case ErrorKind::kUnknownName:
    case ErrorKind::kInvalidTable:
      return kExitUsage;
    case ErrorKind::kInternalInconsistency:
      return kExitInternal;
    default:
      return kExitFalse;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  const Io io{in, out, err};
  CLI::App app{"Finite effect algebra workbench", "ealab"};
  app.require_subcommand(1);

  std::string file = "-", file2, out_path, json_out, verify, mode = "any";
  std::string filter = "all", graph = "hasse";
  std::size_t size = 0, bound = kDefaultEnumerationBound;
  std::vector<std::string> words;
  int code = kExitOk;

  auto* check = app.add_subcommand("check", "Validate the axioms");
  check->add_option("file", file, "Algebra file ('-' for stdin)");

  auto* analyze = app.add_subcommand("analyze", "Full structural analysis");
  analyze->add_option("file", file, "Algebra file ('-' for stdin)");
  analyze->add_option("--json", json_out, "Write the JSON report here ('-' for stdout)");
  analyze->add_option("--verify-report", verify,
                      "Replay an existing JSON report against the algebra");

  auto* blocks_cmd = app.add_subcommand("blocks", "List the blocks");
  blocks_cmd->add_option("file", file, "Algebra file ('-' for stdin)");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Factor over the central atoms");
  decompose_cmd->add_option("file", file, "Algebra file ('-' for stdin)");

  auto* state = app.add_subcommand("state", "Search for a state");
  state->add_option("file", file, "Algebra file ('-' for stdin)");
  state->add_option("--mode", mode,
                    "any, faithful, subadditive or faithful_subadditive");

  auto* construct = app.add_subcommand(
      "construct", "Build an algebra: chain K | product ... | hsum ... | from-oml FILE");
  construct->add_option("expr", words, "Construction expression")->required();
  construct->add_option("--out", out_path, "Output file (default stdout)");

  auto* complete = app.add_subcommand("complete", "Dedekind-MacNeille completion of a poset");
  complete->add_option("file", file, "Poset file ('-' for stdin)");
  complete->add_option("--out", out_path, "Output file (default stdout)");

  auto* iso = app.add_subcommand("iso", "Test two algebras for isomorphism");
  iso->add_option("file1", file, "First algebra")->required();
  iso->add_option("file2", file2, "Second algebra")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate algebras up to isomorphism");
  enumerate->add_option("--size", size, "Number of elements")->required();
  enumerate->add_option("--filter", filter, "all, lattice, mv or modular");
  enumerate->add_option("--out", out_path, "Directory for .ea files and census.tsv");
  enumerate->add_option("--bound", bound, "Largest size accepted");

  auto* dot = app.add_subcommand("export-dot", "Graphviz output");
  dot->add_option("file", file, "Algebra file ('-' for stdin)");
  dot->add_option("--graph", graph, "hasse or compat");
  dot->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ealab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) code = cmd_check(io, file);
    else if (analyze->parsed()) code = cmd_analyze(io, file, json_out, verify);
    else if (blocks_cmd->parsed()) code = cmd_blocks(io, file);
    else if (decompose_cmd->parsed()) code = cmd_decompose(io, file);
    else if (state->parsed()) code = cmd_state(io, file, mode);
    else if (construct->parsed()) code = cmd_construct(io, words, out_path);
    else if (complete->parsed()) code = cmd_complete(io, file, out_path);
    else if (iso->parsed()) code = cmd_iso(io, file, file2);
    else if (enumerate->parsed())
      code = cmd_enumerate(io, size, filter, out_path, bound);
    else if (dot->parsed()) code = cmd_export_dot(io, file, graph, out_path);
  } catch (const Error& e) {
    err << "ealab: " << e.what() << "\n";
    if (!e.witness().empty()) {
      err << "witness:";
      for (auto w : e.witness()) err << ' ' << w;
      err << "\n";
    }
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "ealab: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace ealab::cli
