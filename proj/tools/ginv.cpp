// Command-line front end: analyses of class- and double class-inverting
// automorphisms and of the diagonal modular invariant of Z(G).

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "ginv/perm.hpp"
#include "ginv/report.hpp"
#include "ginv/table_cache.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kUnknown = 3,
  kCapExceeded = 4,
};

struct CommonFlags {
  bool json = false;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_order = 20000;
  std::size_t centre_max_order = 200;
  std::uint64_t search_budget = 20'000'000;
  bool timing = false;
  bool no_centre = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ginv::ParseError("range must look like 'n' or 'a..b', got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ginv: class-inverting automorphisms and the diagonal modular invariant of Z(G)"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto add_common = [&flags](CLI::App* cmd) {
    cmd->add_flag("--json", flags.json, "Emit JSON instead of text");
    cmd->add_option("--cache-dir", flags.cache_dir,
                    "Character table cache directory (default: $GINV_CACHE, else ~/.cache/ginv)");
    cmd->add_flag("--no-cache", flags.no_cache, "Do not read or write the table cache");
    cmd->add_option("--max-order", flags.max_order, "Largest group order to enumerate")->capture_default_str();
    cmd->add_option("--centre-max-order", flags.centre_max_order, "Largest group order for Drinfeld centre work")
        ->capture_default_str();
    cmd->add_option("--search-budget", flags.search_budget, "Node budget of each automorphism search")
        ->capture_default_str();
  };

  std::string spec;
  auto* analyze = app.add_subcommand("analyze", "Full report for one group");
  analyze->add_option("spec", spec, "Group spec: S5, A6, C12, Ab[2,4], D4, Q8, M11, H27, F21, 'perm: (1 2 3), (1 2)'")
      ->required();
  analyze->add_flag("--timing", flags.timing, "Include per-phase wall-clock times");
  analyze->add_flag("--no-centre", flags.no_centre, "Skip the Drinfeld centre section");
  add_common(analyze);

  std::string phi = "identity";
  auto* centre = app.add_subcommand("centre", "Modular invariant matrix of Z(G) for one automorphism");
  centre->add_option("spec", spec, "Group spec")->required();
  centre->add_option("--phi", phi, "identity, inversion (abelian groups), or an index into Aut(G) in search order")
      ->capture_default_str();
  add_common(centre);

  int sn_n = 0;
  auto* sn = app.add_subcommand("sn-doubles", "Double classes of S_n as factorized partitions");
  sn->add_option("n", sn_n, "Degree")->required();
  add_common(sn);

  std::string range;
  auto* an = app.add_subcommand("an-classify", "Class-inverting automorphisms of A_n");
  an->add_option("range", range, "n or a..b")->required();
  add_common(an);

  CLI11_PARSE(app, argc, argv);

  ginv::ReportOptions options;
  options.group.max_order = flags.max_order;
  options.char_table.max_order = flags.max_order;
  options.centre.max_order = flags.centre_max_order;
  options.search.node_budget = flags.search_budget;
  options.with_centre = !flags.no_centre;
  std::unique_ptr<ginv::TableCache> cache;
  if (!flags.no_cache) {
    cache = std::make_unique<ginv::TableCache>(ginv::default_cache_dir(flags.cache_dir));
    options.cache = cache.get();
  }

  try {
    if (analyze->parsed()) {
      const ginv::Report r = ginv::analyze(spec, options);
      if (flags.json) {
        std::cout << ginv::to_json(r, flags.timing).dump(2) << '\n';
      } else {
        std::cout << ginv::to_text(r, flags.timing);
      }
      return r.verdict == ginv::Physicality::unknown ? kUnknown : kOk;
    }
    if (centre->parsed()) {
      const ginv::CentreReport r = ginv::centre_report(spec, phi, options);
      std::cout << (flags.json ? ginv::to_json(r).dump(2) + "\n" : ginv::to_text(r));
      return kOk;
    }
    if (sn->parsed()) {
      const ginv::SnDoublesReport r = ginv::sn_doubles(sn_n, flags.max_order);
      std::cout << (flags.json ? ginv::to_json(r).dump(2) + "\n" : ginv::to_text(r));
      return kOk;
    }
    if (an->parsed()) {
      const auto [lo, hi] = parse_range(range);
      const auto rows = ginv::an_classify(lo, hi, options.search);
      std::cout << (flags.json ? ginv::to_json(rows).dump(2) + "\n" : ginv::to_text(rows));
      return kOk;
    }
  } catch (const ginv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kParseError;
  } catch (const ginv::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ginv::SearchBudgetExceeded& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
