#include "cy2/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace cy2 {

namespace {

std::optional<std::vector<IndecSet>> load(const std::filesystem::path& file,
                                          const CategoryTables& tables) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("version", -1) != kCodeVersion ||
      j.value("name", "") != tables.spec().name() || !j.contains("halves")) {
    return std::nullopt;
  }
  std::vector<IndecSet> out;
  for (const auto& half : j["halves"]) {
    IndecSet x(tables.size());
    for (const auto& id : half) {
      if (!id.is_number_integer()) return std::nullopt;
      const int v = id.get<int>();
      if (v < 0 || static_cast<std::size_t>(v) >= tables.size()) return std::nullopt;
      x.insert(v);
    }
    if (!is_torsion_half(tables, x)) return std::nullopt;
    out.push_back(std::move(x));
  }
  return out;
}

void store(const std::filesystem::path& file, const CategoryTables& tables,
           const std::vector<IndecSet>& halves) {
  nlohmann::json j = {{"version", kCodeVersion}, {"name", tables.spec().name()}};
  nlohmann::json list = nlohmann::json::array();
  for (const IndecSet& x : halves) list.push_back(x.ids());
  j["halves"] = list;
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

std::optional<std::filesystem::path> cache_path(const CategorySpec& spec) {
  const char* dir = std::getenv("CY2_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / (to_string(spec.family) + "_" + std::to_string(spec.n) +
                                       "_" + std::to_string(spec.t) + "_v" +
                                       std::to_string(kCodeVersion) + ".json");
}

std::vector<IndecSet> enumerate_halves_cached(const CategoryTables& tables,
                                              const EnumerateOptions& opts) {
  auto file = opts.brute_force ? std::nullopt : cache_path(tables.spec());
  if (file) {
    if (auto hit = load(*file, tables)) return *hit;
  }
  std::vector<IndecSet> halves = enumerate_halves(tables, opts);
  if (file) store(*file, tables, halves);
  return halves;
}

}  // namespace cy2
