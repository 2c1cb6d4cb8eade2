#include "ginv/table_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ginv {

namespace {

constexpr int kRecordSchema = 1;

struct Fnv64 {
  std::uint64_t h = 1469598103934665603ULL;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  }
};

}  // namespace

std::string group_table_hash(const Group& g) {
  Fnv64 f;
  f.add(g.order());
  f.add(g.num_generators());
  for (std::size_t i = 0; i < g.num_generators(); ++i)
    for (ElemId x = 0; x < g.order(); ++x) f.add(g.mul_gen(x, i));
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << f.h;
  return os.str();
}

nlohmann::json character_table_to_json(const CharacterTable& table) {
  nlohmann::json j;
  j["exponent"] = table.exponent;
  j["prime"] = table.prime;
  j["degrees"] = table.degrees;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.chars) {
    nlohmann::json out = nlohmann::json::array();
    for (const Cyclo& v : row) {
      // Sparse [power, coefficient] pairs over zeta_order.
      nlohmann::json terms = nlohmann::json::array();
      for (std::size_t k = 0; k < v.coeffs().size(); ++k)
        if (v.coeffs()[k] != 0) terms.push_back({k, v.coeffs()[k]});
      out.push_back({{"order", v.order()}, {"terms", std::move(terms)}});
    }
    rows.push_back(std::move(out));
  }
  j["chars"] = std::move(rows);
  return j;
}

CharacterTable character_table_from_json(const nlohmann::json& j) {
  try {
    CharacterTable t;
    t.exponent = j.at("exponent").get<std::uint32_t>();
    t.prime = j.at("prime").get<std::uint64_t>();
    t.degrees = j.at("degrees").get<std::vector<std::size_t>>();
    for (const auto& row : j.at("chars")) {
      std::vector<Cyclo> values;
      for (const auto& v : row) {
        const auto order = v.at("order").get<std::uint32_t>();
        if (order == 0) throw std::runtime_error("zero order");
        Cyclo c(order);
        for (const auto& term : v.at("terms")) {
          const auto power = term.at(0).get<std::uint64_t>();
          if (power >= order) throw std::runtime_error("power out of range");
          c.add_term(power, term.at(1).get<std::int64_t>());
        }
        values.push_back(std::move(c));
      }
      t.chars.push_back(std::move(values));
    }
    if (t.chars.size() != t.degrees.size()) throw std::runtime_error("row count mismatch");
    for (const auto& row : t.chars)
      if (row.size() != t.degrees.size()) throw std::runtime_error("table is not square");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed character table record: ") + e.what());
  }
}

std::filesystem::path TableCache::path_for(const Group& g) const {
  return dir_ / ("chartable-" + group_table_hash(g) + ".json");
}

std::optional<CharacterTable> TableCache::load(const Group& g, const ClassData& classes) const {
  std::ifstream in(path_for(g));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema").get<int>() != kRecordSchema) return std::nullopt;
    if (j.at("hash").get<std::string>() != group_table_hash(g)) return std::nullopt;
    if (j.at("order").get<std::size_t>() != g.order()) return std::nullopt;
    if (j.at("classes").get<std::size_t>() != classes.count()) return std::nullopt;
    CharacterTable t = character_table_from_json(j.at("table"));
    if (t.size() != classes.count()) return std::nullopt;
    std::size_t sum = 0;
    for (std::size_t d : t.degrees) sum += d * d;
    if (sum != g.order()) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const Group& g, const ClassData& classes, const CharacterTable& table) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  nlohmann::json j;
  j["schema"] = kRecordSchema;
  j["hash"] = group_table_hash(g);
  j["order"] = g.order();
  j["classes"] = classes.count();
  j["table"] = character_table_to_json(table);
  // Write to a temporary name and rename, so readers never see partial files.
  const auto target = path_for(g);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

CharacterTable TableCache::table(const Group& g, const ClassData& classes, const CharTableOptions& options) const {
  if (auto t = load(g, classes)) {
    ++hits_;
    return std::move(*t);
  }
  ++misses_;
  CharacterTable t = character_table(g, classes, options);
  store(g, classes, t);
  return t;
}

std::filesystem::path default_cache_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("GINV_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "ginv";
  return ".ginv-cache";
}

}  // namespace ginv
