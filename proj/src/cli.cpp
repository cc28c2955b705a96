#include "cpgroups/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "cpgroups/catalog.hpp"
#include "cpgroups/errors.hpp"
#include "cpgroups/metric.hpp"
#include "cpgroups/report.hpp"
#include "cpgroups/subgroups.hpp"
#include "cpgroups/verify.hpp"

namespace cpg {

namespace {

constexpr const char* kDescription =
    "Order-based distance d(x,y) = o(x y^-1) - 1 on finite groups and the classes CP, CP2, CP3.\n"
    "Products apply the left factor first: (1 2)(1 3) maps 1->2->2, 2->1->3, 3->3->1.\n"
    "Groups: cyclic:N dihedral:2N dicyclic:4N symmetric:N alternating:N elemab:P^K\n"
    "        product:A,B psl2:Q, or a file (Cayley table, or 'degree: k' + cycle words).\n"
    "Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 cap exceeded.";

FiniteGroup load_group(const std::string& spec, const Limits& limits) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return load_group_file(spec, limits);
  return resolve_group(spec, limits);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  file << text;
  if (!file) fail(ErrorKind::InvalidInput, "failed writing '" + path + "'");
}

Format require_format(const std::string& s) {
  auto f = parse_format(s);
  if (!f) fail(ErrorKind::InvalidInput, "unknown format '" + s + "'");
  return *f;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{kDescription, "cpgroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits limits;
  std::string format = "text";
  std::string output;
  app.add_option("--cap-elements", limits.max_elements, "Element cap for generated groups")
      ->capture_default_str();
  app.add_option("--cap-subgroups", limits.max_subgroup_order,
                 "Largest group order for full subgroup enumeration")
      ->capture_default_str();
  app.add_option("--format", format, "text | records | csv")->capture_default_str();
  app.add_option("--output", output, "Write the result to PATH instead of stdout");

  std::string group_spec;
  bool audit = false;
  auto* analyze = app.add_subcommand("analyze", "Classify one group and print witnesses");
  analyze->add_option("group", group_spec, "Group identifier or file")->required();
  analyze->add_flag("--audit-triangle", audit, "Also run the raw O(n^3) triangle check (n <= 60)");

  std::size_t max_order = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify every catalog group up to an order");
  classify_cmd->add_option("--max-order", max_order, "Largest group order")->required();

  std::string target_name;
  std::optional<std::size_t> verify_max;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem or conjecture check over the catalog");
  verify_cmd
      ->add_option("target", target_name,
                   "theorem1 | theorem2 | theorem3 | theorem4 | conjecture5 | subgroup-closure | problem1")
      ->required();
  verify_cmd->add_option("--max-order", verify_max, "Override the target's default order bound");

  auto* dist = app.add_subcommand("distance-matrix", "Export the distance matrix as CSV");
  dist->add_option("group", group_spec, "Group identifier or file")->required();

  auto* subs = app.add_subcommand("subgroups", "List all subgroups as hex bitsets");
  subs->add_option("group", group_spec, "Group identifier or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*analyze) {
      const auto fmt = require_format(format);
      auto g = load_group(group_spec, limits);
      const auto report = classify(g, audit, limits);
      emit(fmt == Format::Records ? class_report_records(g, report) : class_report_text(g, report),
           output, out);
    } else if (*classify_cmd) {
      const auto fmt = require_format(format);
      emit(render_classify(classify_catalog(max_order, limits), fmt), output, out);
    } else if (*verify_cmd) {
      auto target = parse_verify_target(target_name);
      if (!target) fail(ErrorKind::InvalidInput, "unknown verify target '" + target_name + "'");
      const auto result = verify(*target, VerifyOptions{verify_max, limits});
      emit(result.render(), output, out);
      return result.pass ? kExitOk : kExitVerifyFailed;
    } else if (*dist) {
      auto g = load_group(group_spec, limits);
      const auto t = order_table(g);
      emit(distance_csv(g, distance_matrix(g, t, limits)), output, out);
    } else if (*subs) {
      auto g = load_group(group_spec, limits);
      emit(subgroup_list_hex(all_subgroups(g, limits)), output, out);
    }
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CapExceeded: return kExitCapExceeded;
      case ErrorKind::Internal: return kExitVerifyFailed;
      default: return kExitBadInput;
    }
  }
  return kExitOk;
}

}  // namespace cpg
