// Command line front end: evaluate tangle expressions, close them up,
// regenerate catalog tables, classify pairs, and cross-check the algebra
// against the brute-force state sum.

#include "skein/catalog.hpp"
#include "skein/fraction.hpp"
#include "skein/shadow.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;       // parse or usage errors
constexpr int exit_mismatch = 2;    // verification found a real divergence
constexpr int exit_budget = 3;      // state enumeration over budget

// Accepts plain integers and the "2^k" shorthand.
std::size_t parse_budget(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    int k = std::stoi(text.substr(2));
    if (k < 0 || k > 62) throw CLI::ValidationError("budget", "exponent out of range");
    return std::size_t(1) << k;
  }
  return static_cast<std::size_t>(std::stoull(text));
}

// "0..5" or a bare upper bound.
std::size_t parse_n_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return static_cast<std::size_t>(std::stoull(text));
  if (text.substr(0, dots) != "0")
    throw CLI::ValidationError("--n", "ranges must start at 0");
  return static_cast<std::size_t>(std::stoull(text.substr(dots + 2)));
}

int run(int argc, char** argv) {
  CLI::App app{"bracket polynomials of 2-string tangle shadows"};
  app.require_subcommand(1);
  bool ascending = false;
  app.add_flag("--asc", ascending, "print polynomials in ascending degree order");
  auto poly_str = [&](const skein::Polynomial& p) { return to_string(p, !ascending); };

  std::string expr_text, kind_name = "N", format_name = "csv", entry_id, n_range = "0..5";
  std::string budget_text = "2^20", diagram_out, diagram_in;
  std::size_t rep_n = 1;

  auto* eval = app.add_subcommand("eval", "bracket pair of a tangle expression");
  eval->add_option("expr", expr_text, "tangle expression, e.g. \"[1]*[2]\"")->required();

  auto* close = app.add_subcommand("close", "closure polynomial of an expression");
  close->add_option("expr", expr_text)->required();
  close->add_option("--kind", kind_name, "closure: N, D, or R")->required();
  close->add_option("--rep", rep_n, "close the n-fold repetition (default 1)");

  auto* tab = app.add_subcommand("table", "coefficient table of an entry's closure family");
  tab->add_option("--entry", entry_id, "catalog entry, e.g. A7")->required();
  tab->add_option("--kind", kind_name, "closure: N, D, or R")->required();
  tab->add_option("--n", n_range, "row range, e.g. 0..5");
  tab->add_option("--format", format_name, "csv, md, or json");

  auto* cls = app.add_subcommand("classify", "match an expression against the catalog");
  cls->add_option("expr", expr_text)->required();

  auto* ver = app.add_subcommand("verify", "recompute the whole catalog and report");

  auto* orc = app.add_subcommand("oracle-check", "state sum vs algebraic bracket");
  orc->add_option("expr", expr_text);
  orc->add_option("--budget", budget_text, "max smoothing states, e.g. 2^20");
  orc->add_option("--diagram-out", diagram_out, "also write the shadow diagram to a file");
  orc->add_option("--diagram", diagram_in, "read a diagram file instead of an expression");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (eval->parsed()) {
    skein::BracketPair p = bracket_pair(skein::parse(expr_text));
    std::cout << "a = " << poly_str(p.a) << ", b = " << poly_str(p.b) << '\n';
    return exit_ok;
  }

  if (close->parsed()) {
    auto kind = skein::closure_from_name(kind_name);
    if (!kind) throw CLI::ValidationError("--kind", "want N, D, or R");
    skein::BracketPair p = bracket_pair(skein::parse(expr_text));
    std::cout << poly_str(skein::repeat_closure(p, rep_n, *kind)) << '\n';
    return exit_ok;
  }

  if (tab->parsed()) {
    auto kind = skein::closure_from_name(kind_name);
    if (!kind) throw CLI::ValidationError("--kind", "want N, D, or R");
    const auto& cat = skein::load_catalog();
    const skein::CatalogEntry* e = cat.find(entry_id);
    if (!e) throw CLI::ValidationError("--entry", "unknown entry " + entry_id);
    std::optional<int> number;
    switch (*kind) {
      case skein::ClosureKind::D: number = e->table_d; break;
      case skein::ClosureKind::N: number = e->table_n; break;
      case skein::ClosureKind::R: number = e->table_r; break;
    }
    if (!number) {
      std::cerr << entry_id << " has no " << kind_name << " table (closure is constant "
                << poly_str(skein::close(e->pair, *kind)) << ")\n";
      return exit_usage;
    }
    auto format = skein::table_format_from_name(format_name);
    if (!format) throw CLI::ValidationError("--format", "want csv, md, or json");
    // Shared tables are generated from their owning entry; same rows.
    std::cout << skein::render_table(*cat.find_table(*number), parse_n_range(n_range), *format);
    return exit_ok;
  }

  if (cls->parsed()) {
    skein::BracketPair p = bracket_pair(skein::parse(expr_text));
    skein::Classification c = skein::classify(p);
    std::cout << to_string(c) << '\n';
    return exit_ok;
  }

  if (ver->parsed()) {
    skein::VerifyReport rep = skein::verify_catalog();
    std::cout << "entries " << rep.entries_checked << ", members " << rep.members_checked
              << ", shared tables " << rep.tables_checked << ", oracle reruns "
              << rep.oracle_checked << '\n';
    for (const auto& issue : rep.issues)
      std::cout << (issue.expected_misprint ? "WARN " : "FAIL ") << issue.where << ": "
                << issue.detail << '\n';
    if (const char* dir = std::getenv("SKEIN_OEIS_DIR")) {
      for (const auto& chk : skein::oeis_cross_checks()) {
        const skein::TableSpec* t = skein::load_catalog().find_table(chk.table_number);
        std::string path = std::string(dir) + "/b" + chk.sequence.substr(1) + ".txt";
        std::string err = skein::check_against_bfile(*t, path, chk.drop_first_column);
        std::cout << (err.empty() ? "OK   " : "FAIL ") << "T" << chk.table_number << " vs "
                  << chk.sequence << (err.empty() ? "" : ": " + err) << '\n';
        if (!err.empty()) rep.issues.push_back({"oeis", err, false});
      }
    } else {
      std::cout << "OEIS cross-checks skipped (set SKEIN_OEIS_DIR to a b-file directory)\n";
    }
    bool ok = rep.ok();
    std::cout << (ok ? "catalog verified, 4 known misprints flagged" : "verification FAILED")
              << '\n';
    return ok ? exit_ok : exit_mismatch;
  }

  if (orc->parsed()) {
    std::size_t budget = parse_budget(budget_text);
    skein::ShadowDiagram d;
    skein::BracketPair expected;
    bool have_expected = false;
    if (!diagram_in.empty()) {
      std::ifstream in(diagram_in);
      if (!in) {
        std::cerr << "cannot open " << diagram_in << '\n';
        return exit_usage;
      }
      d = skein::read_diagram(in);
    } else if (!expr_text.empty()) {
      skein::ExprPtr e = skein::parse(expr_text);
      // Refuse before building anything oversized.
      std::size_t c = crossing_count(e);
      if (c >= 63 || (std::size_t(1) << c) > budget) throw skein::budget_exceeded(c, budget);
      d = skein::build_diagram(e);
      expected = bracket_pair(e);
      have_expected = true;
    } else {
      std::cerr << "oracle-check needs an expression or --diagram\n";
      return exit_usage;
    }
    if (!diagram_out.empty()) {
      std::ofstream out(diagram_out);
      skein::write_diagram(d, out);
    }
    if (d.tangle) {
      skein::BracketPair got = state_sum_tangle(d, budget);
      std::cout << "state sum: a = " << poly_str(got.a) << ", b = " << poly_str(got.b) << '\n';
      if (have_expected) {
        std::cout << "algebra:   a = " << poly_str(expected.a) << ", b = " << poly_str(expected.b)
                  << '\n';
        if (got != expected) {
          std::cout << "MISMATCH\n";
          return exit_mismatch;
        }
        std::cout << "match\n";
      }
    } else {
      std::cout << "state sum: " << poly_str(state_sum_knot(d, budget)) << '\n';
    }
    return exit_ok;
  }

  return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const skein::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const skein::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
