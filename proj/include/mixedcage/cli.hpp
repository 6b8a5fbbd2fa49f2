#ifndef MIXEDCAGE_CLI_HPP
#define MIXEDCAGE_CLI_HPP

// Command-line driver. Exit codes: 0 success / verification passed,
// 1 verification failed, 2 invalid input or usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mixedcage/analysis.hpp"
#include "mixedcage/bounds.hpp"
#include "mixedcage/generators.hpp"
#include "mixedcage/io.hpp"

namespace mixedcage {

namespace cli_detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file),
          std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

template <typename T>
T require(const std::optional<T>& value, const char* flag,
          const std::string& kind) {
  if (!value) throw UsageError(kind + " requires " + flag);
  return *value;
}

inline std::string witness_line(const GirthReport& report) {
  std::string s = "witness";
  for (const auto& v : report.witness) s += " " + to_string(v);
  return s;
}

struct GenerateArgs {
  std::string kind;
  std::optional<std::uint32_t> q, z, r, g, index;
  std::vector<std::uint64_t> jumps;
  std::optional<std::vector<std::uint32_t>> to_copy, to_orig;
  std::string side = "line";
  std::string format = "json";
  std::string out = "-";
};

inline MixedGraph run_generate(const GenerateArgs& a) {
  auto explicit_jumps = [&]() -> std::optional<JumpSets> {
    if (!a.to_copy && !a.to_orig) return std::nullopt;
    if (!a.to_copy || !a.to_orig)
      throw UsageError("--to-copy and --to-orig must be given together");
    return JumpSets{*a.to_copy, *a.to_orig};
  };
  const std::string& k = a.kind;
  if (k == "pg") return gen_projective_incidence(require(a.q, "--q", k));
  if (k == "biaffine") return gen_biaffine(require(a.q, "--q", k));
  if (k == "circulant") {
    if (a.jumps.empty()) throw UsageError("circulant requires --jumps");
    return gen_circulant(require(a.q, "--q", k), a.jumps);
  }
  if (k == "bicirculant") {
    const auto q = require(a.q, "--q", k);
    const auto side =
        a.side == "point" ? CirculantSide::Point : CirculantSide::Line;
    const auto jumps = explicit_jumps();
    const std::uint32_t index = a.index.value_or(0);
    return jumps ? gen_bipartite_circulant(q, side, index, *jumps)
                 : gen_bipartite_circulant(q, side, index);
  }
  if (k == "family") return gen_family(require(a.q, "--q", k), explicit_jumps());
  if (k == "cage136") return gen_cage_136();
  if (k == "moore-tree")
    return gen_moore_tree(require(a.r, "--r", k), require(a.g, "--g", k));
  if (k == "witness")
    return gen_lower_bound_witness(require(a.z, "--z", k),
                                   require(a.r, "--r", k),
                                   require(a.g, "--g", k));
  throw UsageError("unknown graph kind '" + k + "'");
}

}  // namespace cli_detail

/// Entry point shared by the executable and the tests.
inline int cli_main(int argc, const char* const* argv, std::istream& in,
                    std::ostream& out, std::ostream& err) {
  using namespace cli_detail;

  CLI::App app{"Construct and verify mixed graphs and mixed cages"};
  app.name("mixedcage");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a constructed graph");
  generate->add_option("kind", gen.kind, "Graph to build")
      ->required()
      ->check(CLI::IsMember({"pg", "biaffine", "circulant", "bicirculant",
                             "family", "cage136", "moore-tree", "witness"}));
  generate->add_option("--q", gen.q, "Field order / circulant size");
  generate->add_option("--z", gen.z, "Arcs in and out per vertex");
  generate->add_option("--r", gen.r, "Edges per vertex");
  generate->add_option("--g", gen.g, "Girth");
  generate->add_option("--jumps", gen.jumps, "Circulant jumps")
      ->delimiter(',');
  generate->add_option("--side", gen.side, "Bicirculant side")
      ->check(CLI::IsMember({"line", "point"}));
  generate->add_option("--index", gen.index, "Bicirculant slope / abscissa");
  generate->add_option("--to-copy", gen.to_copy, "Original-to-copy jumps")
      ->delimiter(',');
  generate->add_option("--to-orig", gen.to_orig, "Copy-to-original jumps")
      ->delimiter(',');
  generate->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  generate->add_option("--out", gen.out, "Output path, - for stdout");

  std::string verify_path;
  std::size_t vz = 0, vr = 0, vg = 0;
  auto* verify = app.add_subcommand("verify", "Check [z,r;g] parameters");
  verify->add_option("path", verify_path, "Graph document, - for stdin")
      ->required();
  verify->add_option("--z", vz)->required();
  verify->add_option("--r", vr)->required();
  verify->add_option("--g", vg)->required();

  std::string girth_path;
  bool show_witness = false;
  auto* girth_cmd = app.add_subcommand("girth", "Compute the girth");
  girth_cmd->add_option("path", girth_path, "Graph document, - for stdin")
      ->required();
  girth_cmd->add_flag("--witness", show_witness, "Print a shortest cycle");

  std::uint64_t bz = 0, br = 0, bg = 0;
  std::optional<std::uint32_t> bq;
  auto* bounds = app.add_subcommand("bounds", "Order bounds for [z,r;g]");
  bounds->add_option("--z", bz)->required();
  bounds->add_option("--r", br)->required();
  bounds->add_option("--g", bg)->required();
  bounds->add_option("--q", bq, "Family field order for the 4q^2 bound");

  std::vector<std::uint32_t> q_list{3, 5, 7, 11, 13};
  std::string catalog_format = "md", catalog_out = "-";
  auto* catalog = app.add_subcommand("catalog", "Verify family members");
  catalog->add_option("--q-list", q_list, "Primes q")->delimiter(',');
  catalog->add_option("--format", catalog_format)
      ->check(CLI::IsMember({"md", "csv"}));
  catalog->add_option("--out", catalog_out, "Output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*generate) {
      const auto graph = run_generate(gen);
      write_output(gen.out,
                   gen.format == "dot" ? export_dot(graph) : export_json(graph),
                   out);
      return 0;
    }
    if (*verify) {
      const auto graph = import_json(read_input(verify_path, in));
      const auto rep = verify_zrg(graph, vz, vr, vg);
      out << "order " << rep.order << "\n";
      if (rep.regularity)
        out << "regularity [" << rep.regularity->z << ","
            << rep.regularity->r << "]\n";
      else
        out << "regularity none\n";
      if (rep.girth.girth)
        out << "girth " << *rep.girth.girth << "\n"
            << witness_line(rep.girth) << "\n";
      else
        out << "girth acyclic\n";
      if (rep.offending_vertex)
        out << "offending_vertex " << to_string(*rep.offending_vertex) << " ("
            << rep.offending_degrees->in_arcs << ","
            << rep.offending_degrees->out_arcs << ","
            << rep.offending_degrees->edge_degree << ")\n";
      out << "result " << (rep.passed ? "pass" : "fail") << "\n";
      return rep.passed ? 0 : 1;
    }
    if (*girth_cmd) {
      const auto graph = import_json(read_input(girth_path, in));
      const auto rep = mixedcage::girth(graph);
      if (rep.acyclic()) {
        out << "girth acyclic\n";
      } else {
        out << "girth " << *rep.girth << "\n";
        if (show_witness) out << witness_line(rep) << "\n";
      }
      return 0;
    }
    if (*bounds) {
      const auto rep = bounds_report(bz, br, bg, bq);
      out << "moore " << rep.moore << "\n"
          << "ahm " << rep.ahm << "\n"
          << "mixed_lower " << rep.mixed_lower.value << "\n"
          << "assumes_conjecture "
          << (rep.mixed_lower.assumes_conjecture ? "true" : "false") << "\n"
          << "family_upper "
          << (rep.family_upper ? std::to_string(*rep.family_upper)
                               : std::string("none"))
          << "\n";
      return 0;
    }
    if (*catalog) {
      std::vector<CatalogRow> rows;
      for (auto q : q_list) rows.push_back(catalog_row(q));
      write_output(catalog_out,
                   catalog_format == "csv" ? catalog_csv(rows)
                                           : catalog_markdown(rows),
                   out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // graph, field, bounds errors
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {  // documents, overflow
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_CLI_HPP
