#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ginv/automorphisms.hpp"
#include "ginv/catalog.hpp"
#include "ginv/drinfeld_centre.hpp"
#include "ginv/table_cache.hpp"

namespace ginv {

inline constexpr int kReportSchema = 1;

struct ReportOptions {
  GroupOptions group;
  SearchOptions search;
  CentreOptions centre;
  CharTableOptions char_table;
  /// Include the centre section when |G| is within centre.max_order.
  bool with_centre = true;
  /// Optional memo for character tables; not owned.
  const TableCache* cache = nullptr;
};

/// Outcome of one existence question, with a witness when found.
struct InvertingEntry {
  Physicality status = Physicality::unknown;
  /// Images of the group's generators, in cycle notation.
  std::vector<std::string> witness;
  /// "identity", "inversion" or "search"; empty without a witness.
  std::string source;
};

struct CentreSection {
  std::size_t simple_count = 0;
  /// Label of the automorphism the matrix was computed for.
  std::string phi;
  MIMatrix matrix;
  bool diagonal = false;
};

struct Report {
  std::string spec;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t double_class_count = 0;
  bool ambivalent = false;
  bool doubly_ambivalent = false;
  std::optional<bool> all_characters_real;
  InvertingEntry class_inverting;
  InvertingEntry double_class_inverting;
  std::uint64_t search_nodes = 0;
  std::optional<CentreSection> centre;
  /// Physicality of the diagonal modular invariant; always equal to
  /// double_class_inverting.status.
  Physicality verdict = Physicality::unknown;
  std::optional<bool> cross_check;
  /// Wall-clock milliseconds per phase; reported only on request.
  std::map<std::string, double> timings_ms;
};

/// Full analysis of a group given in the catalog grammar. Throws ParseError
/// for bad specs and SizeLimitError when a cap is exceeded; an exhausted
/// search budget is reported as Physicality::unknown.
Report analyze(const std::string& spec_text, const ReportOptions& options = {});

std::string to_string(Physicality p);
/// "physical", "not physical" or "unknown".
std::string verdict_string(Physicality p);

nlohmann::json to_json(const Report& report, bool include_timing = false);
std::string to_text(const Report& report, bool include_timing = false);

/// Modular invariant matrix of Z(G) for one automorphism.
struct CentreReport {
  std::string spec;
  std::string phi;
  std::vector<std::string> phi_images;
  /// "class k (rep) irrep j" per simple, in matrix order.
  std::vector<std::string> simples;
  MIMatrix matrix;
  bool diagonal = false;
  bool permutation = false;
};

/// selector: "identity", "inversion" (abelian groups only) or a decimal
/// index into the automorphisms in search order. Throws
/// std::invalid_argument for an unusable selector.
CentreReport centre_report(const std::string& spec_text, const std::string& selector,
                           const ReportOptions& options = {});
nlohmann::json to_json(const CentreReport& report);
std::string to_text(const CentreReport& report);

/// One double class of S_n, labelled by its factorized partition.
struct SnDoubleRow {
  std::string partition;
  /// Brute-force representative and class size, when S_n was enumerated.
  std::optional<std::string> sigma;
  std::optional<std::string> pi;
  std::optional<std::size_t> size;
};

struct SnDoublesReport {
  int n = 0;
  std::vector<SnDoubleRow> rows;
  /// Whether the rows were matched one-to-one with enumerated double classes.
  bool brute_force_checked = false;
};

/// Enumerates factorized partitions of n; when n! <= max_order, also
/// enumerates the double classes of S_n and checks the bijection (throws
/// std::logic_error on a mismatch).
SnDoublesReport sn_doubles(int n, std::size_t max_order);
nlohmann::json to_json(const SnDoublesReport& report);
std::string to_text(const SnDoublesReport& report);

struct AnClassifyRow {
  int n = 0;
  std::string classification;
  std::vector<std::string> splitting_types;
  std::vector<bool> self_inverse;
};

std::vector<AnClassifyRow> an_classify(int lo, int hi, const SearchOptions& options = {});
nlohmann::json to_json(const std::vector<AnClassifyRow>& rows);
std::string to_text(const std::vector<AnClassifyRow>& rows);

}  // namespace ginv
