// Command line front end for the sgforge library.

#include <filesystem>  // for create_directories
#include <fstream>     // for ifstream, ofstream
#include <iostream>    // for cout, cerr
#include <optional>    // for optional
#include <sstream>     // for stringstream
#include <stdexcept>   // for runtime_error
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"  // for CLI::App
#include "json.hpp"   // for nlohmann::json

#include "sgforge/catalog.hpp"
#include "sgforge/classifier.hpp"
#include "sgforge/enumeration.hpp"
#include "sgforge/error.hpp"
#include "sgforge/satisfaction.hpp"
#include "sgforge/semigroup.hpp"
#include "sgforge/term.hpp"
#include "sgforge/transformation.hpp"

using namespace sgforge;
using json = nlohmann::json;

namespace {

  constexpr int exit_ok    = 0;
  constexpr int exit_fail  = 1;
  constexpr int exit_usage = 2;

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct SemigroupInput {
    std::string           name;
    std::string           table;
    std::optional<size_t> n, k, g;

    void add_to(CLI::App* app, std::string const& prefix = "") {
      app->add_option("--" + prefix + "name", name, "catalog name");
      app->add_option("--" + prefix + "table",
                      table,
                      "table as inline JSON or a JSON file path");
      if (prefix.empty()) {
        app->add_option("--n", n, "family parameter n");
        app->add_option("--k", k, "family parameter k");
        app->add_option("--g", g, "group order for ReesM0");
      }
    }

    Semigroup get(std::string const& what = "a semigroup") const {
      if (name.empty() == table.empty()) {
        throw UsageError("give exactly one of --name and --table for " + what);
      }
      if (!name.empty()) {
        return build_named(name, BuildParams{n, k, g});
      }
      std::string text = table;
      if (text.find('[') == std::string::npos) {
        std::ifstream in(table);
        if (!in) {
          throw UsageError("cannot read " + table);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      json j;
      try {
        j = json::parse(text);
      } catch (json::exception const& e) {
        throw UsageError(std::string("bad table JSON: ") + e.what());
      }
      if (j.is_object()) {
        j = j.at("table");
      }
      return Semigroup(j.get<table_type>());
    }
  };

  void print_table(Semigroup const& S) {
    for (auto const& row : S.rows()) {
      for (size_t i = 0; i < row.size(); ++i) {
        std::cout << (i == 0 ? "" : " ") << row[i];
      }
      std::cout << '\n';
    }
  }

  json to_json(Semigroup const& S) {
    return {{"order", S.size()},
            {"table", S.rows()},
            {"canonical_key", canonical_key(S, CanonMode::iso_antiiso)}};
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw std::runtime_error("cannot write " + path);
    }
    out << text;
  }

  std::string format_assignment(Assignment const& a) {
    std::string out;
    for (auto const& [letter, v] : a.letters) {
      out += (out.empty() ? "" : ", ") + letter + " = " + std::to_string(v);
    }
    if (a.kernel) {
      out += ", e = " + std::to_string(*a.kernel);
    }
    return out;
  }

  CanonMode parse_mode(std::string const& mode) {
    if (mode == "iso") {
      return CanonMode::iso;
    } else if (mode == "equiv") {
      return CanonMode::iso_antiiso;
    }
    throw UsageError("unknown mode " + mode + " (use iso or equiv)");
  }

  AugmentMode parse_augment(std::string const& mode) {
    if (mode == "bar") {
      return AugmentMode::bar;
    } else if (mode == "flat") {
      return AugmentMode::flat;
    }
    throw UsageError("unknown operator " + mode + " (use bar or flat)");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup computations"};
  app.require_subcommand(1);

  // enumerate
  auto*       enumerate = app.add_subcommand("enumerate", "enumerate semigroups");
  size_t      order     = 0;
  std::string mode      = "equiv";
  std::string out_path;
  size_t      jobs = 1;
  enumerate->add_option("--order", order, "order")->required();
  enumerate->add_option("--mode", mode, "iso or equiv");
  enumerate->add_option("--out", out_path, "JSON lines output file");
  enumerate->add_option("--jobs", jobs, "worker threads");

  // classify
  auto*          classify = app.add_subcommand("classify", "classify semigroups");
  SemigroupInput classify_in;
  size_t         max_order   = 5;
  bool           all_matches = false;
  std::string    csv_path, summary_path;
  classify_in.add_to(classify);
  classify->add_option("--max-order", max_order, "largest order");
  classify->add_option("--jobs", jobs, "worker threads");
  classify->add_flag("--all-matches", all_matches, "list every firing condition");
  classify->add_option("--csv", csv_path, "CSV output file");
  classify->add_option("--summary", summary_path, "summary JSON file");

  // build
  auto*          build = app.add_subcommand("build", "build a named semigroup");
  SemigroupInput build_in;
  bool           print = false;
  build_in.add_to(build);
  build->add_flag("--print-table", print, "print the table as text");

  // check
  auto*          check = app.add_subcommand("check", "check a pseudoidentity");
  SemigroupInput check_in;
  std::string    pid_text;
  bool           local = false;
  check_in.add_to(check);
  check->add_option("--pseudoidentity,--identity", pid_text, "u = v")->required();
  check->add_flag("--local", local, "check in every local monoid");

  // divides
  auto*          divides_cmd = app.add_subcommand("divides", "S divides T");
  SemigroupInput div_s, div_t;
  div_s.add_to(divides_cmd);
  div_t.add_to(divides_cmd, "in-");
  size_t exact_bound = DivisionConfig{}.exact_bound;
  divides_cmd->add_option("--exact-bound", exact_bound, "exact mode bound");

  // rlm
  auto*          rlm_cmd = app.add_subcommand("rlm", "right letter mapping");
  SemigroupInput rlm_in;
  rlm_in.add_to(rlm_cmd);

  // augment
  auto*          augment_cmd = app.add_subcommand("augment", "augmentation");
  SemigroupInput aug_in;
  std::string    aug_mode = "bar";
  aug_in.add_to(augment_cmd);
  augment_cmd->add_option("--mode", aug_mode, "bar or flat");

  // hierarchy
  auto*          hierarchy = app.add_subcommand("hierarchy", "iterate operators");
  SemigroupInput hier_in;
  std::string    pattern = "bar,flat";
  size_t         depth = 3, hier_max = 64;
  bool           separate = false;
  hier_in.add_to(hierarchy);
  hierarchy->add_option("--pattern", pattern, "comma separated bar/flat");
  hierarchy->add_option("--depth", depth, "number of iterates");
  hierarchy->add_option("--max-order", hier_max, "size cap per level");
  hierarchy->add_flag("--separate", separate, "search separating identities");

  // verify-catalog
  auto* verify = app.add_subcommand("verify-catalog", "verify catalog records");
  bool  verbose = false;
  verify->add_flag("--verbose", verbose, "print passing records too");

  // report
  auto*       report  = app.add_subcommand("report", "classification report");
  std::string out_dir = ".";
  report->add_option("--max-order", max_order, "largest order");
  report->add_option("--jobs", jobs, "worker threads");
  report->add_option("--out-dir", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (enumerate->parsed()) {
      auto const r = enumerate_semigroups(order, parse_mode(mode), jobs);
      if (!out_path.empty()) {
        std::string lines;
        for (auto const& S : r.classes) {
          json j = {{"order", S.size()},
                    {"table", S.rows()},
                    {"canonical_key", canonical_key(S, r.mode)}};
          lines += j.dump() + "\n";
        }
        write_file(out_path, lines);
      }
      std::cout << "order " << order << ": " << r.classes.size()
                << " classes (labeled " << r.counts.labeled << ", up to iso "
                << r.counts.up_to_iso << ", up to iso and anti-iso "
                << r.counts.up_to_equivalence << ")\n";
      return exit_ok;
    }

    if (classify->parsed()) {
      if (!classify_in.name.empty() || !classify_in.table.empty()) {
        auto const S = classify_in.get();
        auto const r = classify_one(S, all_matches);
        std::cout << verdict_name(r.verdict);
        if (r.verdict == Verdict::ji) {
          std::cout << " " << r.target;
        }
        if (!r.condition_id.empty()) {
          std::cout << " via " << r.condition_id
                    << (r.dual_applied ? " (dual)" : "");
        }
        std::cout << '\n';
        if (all_matches) {
          for (auto const& m : r.all_matches) {
            std::cout << "  matches " << m << '\n';
          }
        }
        return r.verdict == Verdict::unclassified ? exit_fail : exit_ok;
      }
      auto const r = classify_small_orders(max_order, jobs, all_matches);
      if (!csv_path.empty()) {
        write_file(csv_path, report_csv(r));
      }
      if (!summary_path.empty()) {
        write_file(summary_path, summary_json(r));
      }
      size_t unclassified = 0;
      for (auto const& [n, c] : r.counts) {
        std::cout << "order " << n << ": ji " << c.ji << ", non_ji " << c.non_ji
                  << ", unclassified " << c.unclassified << ", total "
                  << c.total << '\n';
        unclassified += c.unclassified;
      }
      std::cout << r.ji_targets.size() << " ji targets\n";
      if (all_matches) {
        for (auto const& rec : r.records) {
          if (rec.all_matches.size() > 1) {
            std::cout << rec.canonical_key << ':';
            for (auto const& m : rec.all_matches) {
              std::cout << ' ' << m;
            }
            std::cout << '\n';
          }
        }
      }
      return unclassified == 0 ? exit_ok : exit_fail;
    }

    if (build->parsed()) {
      auto const S = build_in.get();
      if (print) {
        print_table(S);
      } else {
        std::cout << to_json(S).dump() << '\n';
      }
      return exit_ok;
    }

    if (check->parsed()) {
      auto const S = check_in.get();
      auto const p = parse_pseudoidentity(pid_text);
      if (local) {
        bool ok = in_local(S, p);
        std::cout << (ok ? "satisfied locally" : "violated locally") << '\n';
        return ok ? exit_ok : exit_fail;
      }
      auto const r = satisfies(S, p);
      if (r.satisfied) {
        std::cout << "satisfied\n";
        return exit_ok;
      }
      std::cout << "violated\nwitness: " << format_assignment(*r.witness)
                << "\nlhs = " << r.lhs_value << ", rhs = " << r.rhs_value
                << '\n';
      return exit_fail;
    }

    if (divides_cmd->parsed()) {
      auto const     S = div_s.get("S");
      auto const     T = div_t.get("T");
      DivisionConfig cfg;
      cfg.exact_bound = exact_bound;
      auto const v    = divides(S, T, cfg);
      switch (v.result) {
        case DivisionVerdict::Result::yes: {
          std::cout << "yes\n";
          std::cout << "domain:";
          for (auto x : v.domain) {
            std::cout << ' ' << x;
          }
          std::cout << "\nmap:";
          for (auto x : v.map) {
            std::cout << ' ' << x;
          }
          std::cout << '\n';
          return exit_ok;
        }
        case DivisionVerdict::Result::no:
          std::cout << "no\n";
          return exit_fail;
        case DivisionVerdict::Result::inconclusive:
        default:
          std::cout << "inconclusive\n";
          return exit_fail;
      }
    }

    if (rlm_cmd->parsed()) {
      print_table(rlm(rlm_in.get()));
      return exit_ok;
    }

    if (augment_cmd->parsed()) {
      print_table(augment(aug_in.get(), parse_augment(aug_mode)));
      return exit_ok;
    }

    if (hierarchy->parsed()) {
      std::vector<AugmentMode> ops;
      std::stringstream        ss(pattern);
      for (std::string tok; std::getline(ss, tok, ',');) {
        ops.push_back(parse_augment(tok));
      }
      auto const levels = hierarchy_iterate(hier_in.get(), ops, depth, hier_max);
      bool       ok     = true;
      for (size_t i = 0; i < levels.size(); ++i) {
        std::cout << "level " << i << ": order " << levels[i].size() << '\n';
        if (separate && i + 1 < levels.size()) {
          auto p = separation_search(levels[i], levels[i + 1]);
          if (p) {
            std::cout << "  separated by " << format(*p) << '\n';
          } else {
            std::cout << "  no separating identity found\n";
            ok = false;
          }
        }
      }
      return ok ? exit_ok : exit_fail;
    }

    if (verify->parsed()) {
      size_t failed = 0;
      auto   checks = verify_catalog();
      for (auto const& c : checks) {
        if (!c.passed) {
          ++failed;
        }
        if (!c.passed || verbose) {
          std::cout << (c.passed ? "pass " : "FAIL ") << c.kind << ' ' << c.name
                    << ": " << c.detail << '\n';
        }
      }
      std::cout << checks.size() - failed << " of " << checks.size()
                << " catalog checks passed\n";
      return failed == 0 ? exit_ok : exit_fail;
    }

    if (report->parsed()) {
      auto const r = classify_small_orders(max_order, jobs);
      std::filesystem::create_directories(out_dir);
      write_file(out_dir + "/classification.csv", report_csv(r));
      write_file(out_dir + "/summary.json", summary_json(r));
      std::cout << summary_json(r);
      size_t unclassified = 0;
      for (auto const& [n, c] : r.counts) {
        unclassified += c.unclassified;
      }
      return unclassified == 0 ? exit_ok : exit_fail;
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (UnknownName const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (BadParams const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (SyntaxError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (ReservedLetterMisuse const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (OrderTooLarge const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (NotAssociative const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_ok;
}
