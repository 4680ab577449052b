// Command-line front end: define groups, G-sets, objects and morphisms from
// files, compose, print double Burnside tables and decompositions, test object
// isomorphism, export JSON, and drive the property suites.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracat/errors.hpp"
#include "fracat/fuzz.hpp"
#include "fracat/workspace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitCap = 3;
constexpr int kExitCheckFailed = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracat: exact computations with fractions X/G and spans of bisets"};
  app.require_subcommand(1);

  fracat::WorkspaceConfig cfg;
  std::vector<std::string> defs;
  std::string format = "text";
  app.add_option("--defs,-f", defs, "definition file(s) loaded before the command runs");
  app.add_option("--max-order", cfg.max_order, "group order cap for definitions")
      ->default_val(fracat::kDefaultMaxOrder);
  app.add_option("--mod", cfg.modulus, "coefficient modulus (default: integers)");
  app.add_option("--seed", cfg.seed, "seed for the property suites")->default_val(1);
  app.add_option("--budget", cfg.budget, "instance budget for the property suites")
      ->default_val(200);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  std::string def_file, fname, gname, aname, bname, oname, kind, suite;

  auto* c_define = app.add_subcommand("define", "parse and validate a definition file");
  c_define->add_option("file", def_file)->required();

  auto* c_compose = app.add_subcommand("compose", "print f o g for named morphisms");
  c_compose->add_option("f", fname)->required();
  c_compose->add_option("g", gname)->required();

  auto* c_table = app.add_subcommand("table", "double Burnside table of a named group");
  c_table->add_option("group", gname)->required();

  auto* c_decompose = app.add_subcommand("decompose", "orbit decomposition of an object");
  c_decompose->add_option("object", oname)->required();

  auto* c_iso = app.add_subcommand("iso", "are two objects isomorphic");
  c_iso->add_option("a", aname)->required();
  c_iso->add_option("b", bname)->required();

  auto* c_rank = app.add_subcommand("hom-rank", "rank of the hom module between objects");
  c_rank->add_option("a", aname)->required();
  c_rank->add_option("b", bname)->required();

  auto* c_check = app.add_subcommand("check", "run a property suite");
  c_check->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember(fracat::suite_names()));

  auto* c_export = app.add_subcommand("export", "JSON export of a group or table");
  c_export->add_option("kind", kind)->required()->check(CLI::IsMember({"group", "table"}));
  c_export->add_option("name", gname)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  fracat::Format fmt = format == "json" ? fracat::Format::json : fracat::Format::text;
  try {
    fracat::Workspace ws(cfg);
    for (const auto& d : defs) ws.define_file(d);

    if (c_define->parsed()) {
      ws.define_file(def_file);
      std::cout << ws.summary();
    } else if (c_compose->parsed()) {
      std::cout << fracat::cmd_compose(ws, fname, gname, fmt);
    } else if (c_table->parsed()) {
      std::cout << fracat::cmd_table(ws, gname, fmt);
    } else if (c_decompose->parsed()) {
      std::cout << fracat::cmd_decompose(ws, oname, fmt);
    } else if (c_iso->parsed()) {
      std::cout << fracat::cmd_iso(ws, aname, bname, fmt);
    } else if (c_rank->parsed()) {
      std::cout << fracat::cmd_hom_rank(ws, aname, bname, fmt);
    } else if (c_check->parsed()) {
      fracat::CheckOutcome outcome = fracat::cmd_check(suite, cfg.seed, cfg.budget);
      std::cout << outcome.report;
      return outcome.passed ? kExitOk : kExitCheckFailed;
    } else if (c_export->parsed()) {
      std::cout << fracat::cmd_export(ws, kind, gname);
    }
  } catch (const fracat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fracat::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const fracat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
