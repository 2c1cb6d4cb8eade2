#include "ginv/report.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ginv/sym_alt.hpp"

namespace ginv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> generator_images(const Group& g, const Automorphism& phi) {
  std::vector<std::string> out;
  for (ElemId x : phi.gen_images) out.push_back(g.element(x).to_cycle_string());
  return out;
}

InvertingEntry entry(const Group& g, Physicality status, const std::optional<Automorphism>& witness,
                     std::string source) {
  InvertingEntry e;
  e.status = status;
  if (witness) {
    e.witness = generator_images(g, *witness);
    e.source = std::move(source);
  }
  return e;
}

CentreOptions centre_options(const ReportOptions& options) {
  CentreOptions c = options.centre;
  c.char_table = options.char_table;
  if (options.cache) {
    const TableCache* cache = options.cache;
    const CharTableOptions table_options = options.char_table;
    c.table_provider = [cache, table_options](const Group& h, const ClassData& classes) {
      return cache->table(h, classes, table_options);
    };
  }
  return c;
}

nlohmann::json entry_json(const InvertingEntry& e) {
  nlohmann::json j;
  j["status"] = to_string(e.status);
  if (e.witness.empty() && e.source.empty()) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = {{"source", e.source}, {"generator_images", e.witness}};
  }
  return j;
}

std::string entry_text(const InvertingEntry& e) {
  std::string s = to_string(e.status);
  if (!e.source.empty()) {
    s += " (" + e.source;
    if (e.source == "search") {
      s += ":";
      for (const auto& w : e.witness) s += " " + w;
    }
    s += ")";
  }
  return s;
}

std::string matrix_text(const MIMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.entries) {
    os << "  ";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_string(Physicality p) {
  switch (p) {
    case Physicality::yes: return "yes";
    case Physicality::no: return "no";
    case Physicality::unknown: return "unknown";
  }
  return "unknown";
}

std::string verdict_string(Physicality p) {
  switch (p) {
    case Physicality::yes: return "physical";
    case Physicality::no: return "not physical";
    case Physicality::unknown: return "unknown";
  }
  return "unknown";
}

Report analyze(const std::string& spec_text, const ReportOptions& options) {
  Report r;
  auto start = Clock::now();
  const GroupSpec spec = parse_group_spec(spec_text);
  const Group g = build(spec, options.group);
  r.spec = to_string(spec);
  r.order = g.order();
  r.degree = g.degree();
  r.timings_ms["build"] = ms_since(start);

  start = Clock::now();
  const ClassData classes = conjugacy_classes(g);
  r.class_sizes = classes.sizes;
  const DoubleClassData dclasses = double_classes(g, classes, options.centre.double_classes);
  r.double_class_count = dclasses.count();
  r.ambivalent = is_ambivalent(g, classes);
  r.doubly_ambivalent = is_doubly_ambivalent(g, dclasses);
  r.timings_ms["classes"] = ms_since(start);

  if (g.order() <= options.char_table.max_order) {
    start = Clock::now();
    const CharacterTable table = options.cache ? options.cache->table(g, classes, options.char_table)
                                               : character_table(g, classes, options.char_table);
    r.all_characters_real = all_characters_real(table);
    r.timings_ms["character_table"] = ms_since(start);
  }

  start = Clock::now();
  VerdictOptions vo;
  vo.search = options.search;
  vo.centre = centre_options(options);
  const PhysicalityVerdict v = diagonal_physical(g, vo);
  r.search_nodes = v.search_nodes;
  r.verdict = v.physical;
  r.cross_check = v.cross_check;
  r.double_class_inverting = entry(g, v.physical, v.witness, v.witness_source);
  if (r.ambivalent) {
    r.class_inverting = entry(g, Physicality::yes, Automorphism::identity(g), "identity");
  } else if (g.is_abelian()) {
    r.class_inverting = entry(g, Physicality::yes, Automorphism::inversion(g), "inversion");
  } else {
    r.class_inverting = entry(g, v.class_inverting, v.class_witness, "search");
  }
  r.timings_ms["search"] = ms_since(start);

  if (options.with_centre && g.order() <= options.centre.max_order) {
    start = Clock::now();
    const DrinfeldCentre centre(g, vo.centre);
    CentreSection c;
    c.simple_count = centre.simples().size();
    const Automorphism phi = v.witness ? *v.witness : Automorphism::identity(g);
    c.phi = v.witness ? v.witness_source : "identity";
    c.matrix = centre.modular_invariant_matrix(phi);
    c.diagonal = c.matrix.is_identity();
    r.centre = std::move(c);
    r.timings_ms["centre"] = ms_since(start);
  }
  return r;
}

nlohmann::json to_json(const Report& r, bool include_timing) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["group"] = {{"spec", r.spec}, {"order", r.order}, {"degree", r.degree}};
  j["classes"] = {{"count", r.class_sizes.size()}, {"sizes", r.class_sizes}};
  j["double_classes"] = {{"count", r.double_class_count}};
  j["ambivalent"] = r.ambivalent;
  j["doubly_ambivalent"] = r.doubly_ambivalent;
  j["all_characters_real"] = r.all_characters_real ? nlohmann::json(*r.all_characters_real) : nlohmann::json();
  j["class_inverting"] = entry_json(r.class_inverting);
  j["double_class_inverting"] = entry_json(r.double_class_inverting);
  j["search_nodes"] = r.search_nodes;
  if (r.centre) {
    j["centre"] = {{"simple_count", r.centre->simple_count},
                   {"phi", r.centre->phi},
                   {"matrix", r.centre->matrix.entries},
                   {"diagonal", r.centre->diagonal}};
  } else {
    j["centre"] = nullptr;
  }
  j["verdict"] = {{"diagonal_modular_invariant", verdict_string(r.verdict)},
                  {"cross_check", r.cross_check ? nlohmann::json(*r.cross_check) : nlohmann::json()}};
  if (include_timing) j["timing_ms"] = r.timings_ms;
  return j;
}

std::string to_text(const Report& r, bool include_timing) {
  std::ostringstream os;
  os << "group              " << r.spec << "  (order " << r.order << ", degree " << r.degree << ")\n";
  os << "conjugacy classes  " << r.class_sizes.size() << "  sizes:";
  for (std::size_t s : r.class_sizes) os << ' ' << s;
  os << '\n';
  os << "double classes     " << r.double_class_count << '\n';
  os << "ambivalent         " << (r.ambivalent ? "yes" : "no") << '\n';
  os << "doubly ambivalent  " << (r.doubly_ambivalent ? "yes" : "no") << '\n';
  if (r.all_characters_real) os << "all chars real     " << (*r.all_characters_real ? "yes" : "no") << '\n';
  os << "class-inverting    " << entry_text(r.class_inverting) << '\n';
  os << "double class-inv.  " << entry_text(r.double_class_inverting) << '\n';
  os << "search nodes       " << r.search_nodes << '\n';
  if (r.centre) {
    os << "centre simples     " << r.centre->simple_count << '\n';
    os << "MI matrix (" << r.centre->phi << ")" << (r.centre->diagonal ? "  diagonal" : "  not diagonal") << '\n';
    if (r.centre->simple_count <= 40) os << matrix_text(r.centre->matrix);
  }
  os << "verdict            diagonal modular invariant is " << verdict_string(r.verdict);
  if (r.cross_check) os << "  (matrix cross-check " << (*r.cross_check ? "agrees" : "DISAGREES") << ")";
  os << '\n';
  if (include_timing)
    for (const auto& [phase, ms] : r.timings_ms) os << "time " << phase << ": " << ms << " ms\n";
  return os.str();
}

CentreReport centre_report(const std::string& spec_text, const std::string& selector, const ReportOptions& options) {
  const GroupSpec spec = parse_group_spec(spec_text);
  const Group g = build(spec, options.group);
  const CentreOptions copts = centre_options(options);
  if (g.order() > copts.max_order)
    throw SizeLimitError("centre: group order exceeds the centre cap", copts.max_order);

  Automorphism phi;
  std::string label;
  if (selector == "identity") {
    phi = Automorphism::identity(g);
    label = "identity";
  } else if (selector == "inversion") {
    if (!g.is_abelian()) throw std::invalid_argument("centre: inversion is an automorphism only for abelian groups");
    phi = Automorphism::inversion(g);
    label = "inversion";
  } else {
    std::size_t k = 0;
    std::size_t used = 0;
    try {
      k = std::stoull(selector, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != selector.size())
      throw std::invalid_argument("centre: selector must be identity, inversion or an automorphism index, got '" +
                                  selector + "'");
    const ClassData classes = conjugacy_classes(g);
    std::optional<Automorphism> chosen;
    std::size_t seen = 0;
    for_each_automorphism(g, classes, options.search, [&](const Automorphism& a) {
      if (seen++ == k) {
        chosen = a;
        return false;
      }
      return true;
    });
    if (!chosen)
      throw std::invalid_argument("centre: automorphism index " + selector + " out of range (|Aut(G)| = " +
                                  std::to_string(seen) + ")");
    phi = std::move(*chosen);
    label = "aut[" + selector + "]";
  }

  const DrinfeldCentre centre(g, copts);
  CentreReport r;
  r.spec = to_string(spec);
  r.phi = label;
  r.phi_images = generator_images(g, phi);
  for (const CentreSimple& s : centre.simples()) {
    const ElemId rep = centre.classes().reps[s.class_index];
    r.simples.push_back("class " + std::to_string(s.class_index) + " " + g.element(rep).to_cycle_string() +
                        " irrep " + std::to_string(s.irrep_index));
  }
  r.matrix = centre.modular_invariant_matrix(phi);
  r.diagonal = r.matrix.is_identity();
  r.permutation = r.matrix.is_permutation();
  return r;
}

nlohmann::json to_json(const CentreReport& r) {
  return {{"schema", kReportSchema},   {"group", r.spec},         {"phi", r.phi},
          {"phi_images", r.phi_images}, {"simples", r.simples},   {"matrix", r.matrix.entries},
          {"diagonal", r.diagonal},     {"permutation", r.permutation}};
}

std::string to_text(const CentreReport& r) {
  std::ostringstream os;
  os << "group " << r.spec << ", phi = " << r.phi << " :";
  for (const auto& s : r.phi_images) os << ' ' << s;
  os << '\n';
  for (std::size_t i = 0; i < r.simples.size(); ++i) os << "  [" << i << "] " << r.simples[i] << '\n';
  os << "matrix (" << r.simples.size() << "x" << r.simples.size() << ")\n" << matrix_text(r.matrix);
  os << "diagonal: " << (r.diagonal ? "yes" : "no") << "   permutation: " << (r.permutation ? "yes" : "no") << '\n';
  return os.str();
}

SnDoublesReport sn_doubles(int n, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("sn-doubles: n must be at least 1");
  SnDoublesReport out;
  out.n = n;
  const auto partitions = sn_enumerate_factorized_partitions(n);
  std::map<FactorizedPartition, std::size_t> row_of;
  for (const auto& p : partitions) {
    row_of.emplace(p, out.rows.size());
    out.rows.push_back({p.to_string(), std::nullopt, std::nullopt, std::nullopt});
  }

  std::size_t factorial = 1;
  for (int k = 2; k <= n && factorial <= max_order; ++k) factorial *= static_cast<std::size_t>(k);
  if (factorial > max_order) return out;

  GroupOptions gopts;
  gopts.max_order = max_order;
  const Group g = build(GroupSpec::symmetric(n), gopts);
  const ClassData classes = conjugacy_classes(g);
  const DoubleClassData d = double_classes(g, classes);
  if (d.count() != partitions.size())
    throw std::logic_error("sn-doubles: " + std::to_string(d.count()) + " double classes but " +
                           std::to_string(partitions.size()) + " factorized partitions");
  for (std::size_t c = 0; c < d.count(); ++c) {
    const auto [f, h] = d.reps()[c];
    const Perm sigma = g.element(f);
    const Perm pi = g.element(h);
    const auto it = row_of.find(sn_double_class_invariant(static_cast<std::size_t>(n), sigma, pi));
    if (it == row_of.end()) throw std::logic_error("sn-doubles: invariant outside the enumeration");
    SnDoubleRow& row = out.rows[it->second];
    if (row.sigma) throw std::logic_error("sn-doubles: two double classes share a factorized partition");
    row.sigma = sigma.to_cycle_string();
    row.pi = pi.to_cycle_string();
    row.size = d.sizes()[c];
  }
  out.brute_force_checked = true;
  return out;
}

nlohmann::json to_json(const SnDoublesReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j = {{"partition", row.partition}};
    if (row.sigma) {
      j["sigma"] = *row.sigma;
      j["pi"] = *row.pi;
      j["size"] = *row.size;
    }
    rows.push_back(std::move(j));
  }
  return {{"schema", kReportSchema},
          {"n", r.n},
          {"count", r.rows.size()},
          {"brute_force_checked", r.brute_force_checked},
          {"rows", std::move(rows)}};
}

std::string to_text(const SnDoublesReport& r) {
  std::ostringstream os;
  os << "S" << r.n << ": " << r.rows.size() << " double classes"
     << (r.brute_force_checked ? " (checked against enumeration)" : "") << '\n';
  for (const auto& row : r.rows) {
    os << "  " << row.partition;
    if (row.sigma) os << "    sigma=" << *row.sigma << " pi=" << *row.pi << " size=" << *row.size;
    os << '\n';
  }
  return os.str();
}

std::vector<AnClassifyRow> an_classify(int lo, int hi, const SearchOptions& options) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("an-classify: need 1 <= lo <= hi");
  std::vector<AnClassifyRow> rows;
  for (int n = lo; n <= hi; ++n) {
    AnClassifyRow row;
    row.n = n;
    row.classification = to_string(an_classification(n, options));
    for (const CycleType& t : splitting_types(n)) {
      row.splitting_types.push_back(t.to_string());
      row.self_inverse.push_back(an_self_inverse_parity(t));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const std::vector<AnClassifyRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json types = nlohmann::json::array();
    for (std::size_t i = 0; i < r.splitting_types.size(); ++i)
      types.push_back({{"type", r.splitting_types[i]}, {"self_inverse", static_cast<bool>(r.self_inverse[i])}});
    out.push_back({{"n", r.n}, {"classification", r.classification}, {"splitting_types", std::move(types)}});
  }
  return {{"schema", kReportSchema}, {"rows", std::move(out)}};
}

std::string to_text(const std::vector<AnClassifyRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "A" << r.n << ": " << r.classification << "   splitting types:";
    for (std::size_t i = 0; i < r.splitting_types.size(); ++i)
      os << ' ' << r.splitting_types[i] << (r.self_inverse[i] ? "+" : "-");
    os << '\n';
  }
  return os.str();
}

}  // namespace ginv
