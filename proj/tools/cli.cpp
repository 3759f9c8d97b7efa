#include "cli.hpp"

#include <algorithm>
#include <stdexcept>

#include <CLI11.hpp>

#include "jaco/jaco.hpp"

namespace jaco::cli {

namespace {

OutputFormat require_format(const std::string& name) {
  if (auto f = parse_output_format(name)) return *f;
  throw std::invalid_argument("unknown format: " + name);
}

std::string join_terms(const std::vector<WideInt>& terms) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0) out += ' ';
    out += terms[k].str();
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear Jaco graphs: parameters, dom-paths and sequence checks", "jaco"};
  app.require_subcommand(1);

  std::int64_t max_n = 32;
  std::int64_t n = 0;
  std::int64_t count = 10;
  std::string format = "text";
  std::string graph_format = "edges";
  std::string conjecture = "all";
  std::string id;
  bool secondary = false;
  bool artificial = false;

  auto* table = app.add_subcommand("table", "Parameter table for J_1 .. J_max-n");
  table->add_option("--max-n", max_n, "Largest order")->check(CLI::PositiveNumber);
  table->add_option("--format", format, "text | csv | json");

  auto* check = app.add_subcommand("check", "Sweep the conjecture checkers up to max-n (>= 10)");
  check->add_option("--max-n", max_n, "Largest order")->check(CLI::Range(std::int64_t{10}, std::int64_t{10'000'000}));
  check->add_option("--conjecture", conjecture, "all, a report id (C4a, C1-identity, ...) or a group (C1, C4)");
  check->add_option("--format", format, "text | csv | json");

  auto* graph = app.add_subcommand("graph", "Export J_n");
  graph->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  graph->add_option("--format", graph_format, "edges | dot | json");

  auto* dompath = app.add_subcommand("dompath", "Primary or secondary dom-path of J_n");
  dompath->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  dompath->add_flag("--secondary", secondary, "Start from v_n");
  dompath->add_option("--format", format, "text | json");

  auto* seq = app.add_subcommand("seq", "Print terms of a sequence");
  seq->add_option("--id", id, "Sequence id, e.g. A000149")->required();
  seq->add_option("--count", count, "Number of terms")->check(CLI::NonNegativeNumber);
  seq->add_flag("--artificial", artificial, "Prepend the artificial leading 1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (table->parsed()) {
      std::vector<ParamRow> rows;
      rows.reserve(max_n);
      for (std::int64_t k = 1; k <= max_n; ++k) rows.push_back(param_row(k));
      out << render_table(rows, require_format(format));
      return kExitOk;
    }
    if (check->parsed()) {
      const OutputFormat f = require_format(format);
      const auto reports = run_checks(max_n, conjecture);
      out << render_reports(reports, f);
      const bool refuted = std::any_of(reports.begin(), reports.end(),
                                       [](const auto& r) { return r.status == Status::counterexample; });
      return refuted ? kExitCounterexample : kExitOk;
    }
    if (graph->parsed()) {
      out << render_graph(build_jaco(n), require_format(graph_format));
      return kExitOk;
    }
    if (dompath->parsed()) {
      const DomPath path = secondary ? secondary_dom_path(n) : primary_dom_path(n);
      out << render_dompath(path, require_format(format));
      return kExitOk;
    }
    if (seq->parsed()) {
      const auto sid = parse_sequence_id(id);
      if (!sid) throw std::invalid_argument("unknown sequence id: " + id);
      out << join_terms(seq_prefix(*sid, count, artificial)) << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "jaco: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace jaco::cli
