#include "nilalg/catalog.hpp"

#include "nilalg/cohomology.hpp"
#include "nilalg/errors.hpp"
#include "nilalg/interchange.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#ifndef NILALG_DATA_DIR
#define NILALG_DATA_DIR "data/catalog"
#endif

namespace nilalg {

namespace {

template <class F> void parallel_for(std::size_t count, std::size_t threads, F &&f) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        f(i);
    });
  for (auto &th : pool)
    th.join();
}

// Replace symbolic "alpha" coefficients by a value.
nlohmann::json substitute(nlohmann::json brackets, const Rational &alpha) {
  for (auto &b : brackets)
    for (auto &t : b.at("rhs")) {
      auto &c = t.at("c");
      if (c == "alpha")
        c = alpha.str();
      else if (c == "-alpha")
        c = (-alpha).str();
    }
  return brackets;
}

bool mentions_alpha(const nlohmann::json &brackets) {
  for (const auto &b : brackets)
    for (const auto &t : b.at("rhs"))
      if (t.at("c") == "alpha" || t.at("c") == "-alpha")
        return true;
  return false;
}

void load_file(const std::filesystem::path &path, const std::vector<Rational> &alphas,
               std::vector<CatalogEntry> &out) {
  std::ifstream in(path);
  if (!in)
    throw DataCorrupt("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw DataCorrupt(path.filename().string() + ": " + e.what());
  }
  const std::string where = path.filename().string();
  try {
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array() ||
        !doc.contains("nilindex") || !doc["nilindex"].is_number_unsigned() || !doc.contains("dim"))
      throw DataCorrupt(where + ": expected {class, nilindex, dim, entries}");
    const auto nil = doc["nilindex"].get<std::size_t>();
    const auto file_dim = doc["dim"].get<std::size_t>();
    for (const auto &e : doc["entries"]) {
      if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("brackets"))
        throw DataCorrupt(where + ": entry without name or brackets");
      const std::string name = e["name"].get<std::string>();
      if (e.value("dim", std::size_t{0}) != file_dim)
        throw DataCorrupt(where + ": " + name + " has a dimension different from its file");
      std::vector<std::optional<Rational>> instances{std::nullopt};
      if (mentions_alpha(e["brackets"])) {
        instances.clear();
        if (!alphas.empty()) {
          for (const auto &a : alphas)
            instances.emplace_back(a);
        } else {
          if (!e.contains("parameters") || !e["parameters"].contains("alpha"))
            throw DataCorrupt(where + ": " + name + " uses alpha without parameter values");
          for (const auto &v : e["parameters"]["alpha"])
            instances.emplace_back(Rational::parse(v.get<std::string>()));
        }
      }
      for (const auto &alpha : instances) {
        nlohmann::json alg{{"name", name}, {"dim", file_dim}};
        alg["brackets"] = alpha ? substitute(e["brackets"], *alpha) : e["brackets"];
        CatalogEntry ce;
        ce.base_name = name;
        ce.name = alpha ? name + "(alpha=" + alpha->str() + ")" : name;
        ce.dim = file_dim;
        ce.tensor = tensor_from_json(alg).renamed(ce.name);
        ce.expected_nilindex = nil;
        ce.alpha = alpha;
        ce.note = e.value("note", std::string{});
        out.push_back(std::move(ce));
      }
    }
  } catch (const ParseError &err) {
    throw DataCorrupt(where + ": " + err.what());
  } catch (const nlohmann::json::exception &err) {
    throw DataCorrupt(where + ": " + err.what());
  }
}

} // namespace

std::filesystem::path default_catalog_dir() { return NILALG_DATA_DIR; }

bool catalog_less(const std::string &a, const std::string &b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2])))
        ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2])))
        ++j2;
      const auto na = std::stoull(a.substr(i, i2 - i)), nb = std::stoull(b.substr(j, j2 - j));
      if (na != nb)
        return na < nb;
      i = i2;
      j = j2;
      continue;
    }
    if (a[i] != b[j])
      return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path &dir, const std::vector<Rational> &alphas) {
  if (!std::filesystem::is_directory(dir))
    throw DataCorrupt("catalog directory " + dir.string() + " not found");
  std::vector<std::filesystem::path> files;
  for (const auto &f : std::filesystem::directory_iterator(dir))
    if (f.path().extension() == ".json")
      files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto &f : files)
    load_file(f, alphas, out);
  std::set<std::string> names;
  for (const auto &e : out)
    if (!names.insert(e.name).second)
      throw DataCorrupt("duplicate catalog name " + e.name);
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry &a, const CatalogEntry &b) { return catalog_less(a.name, b.name); });
  return out;
}

EntryReport verify_entry(const CatalogEntry &e, std::size_t samples, std::uint64_t seed) {
  EntryReport r;
  r.name = e.name;
  r.dim = e.dim;
  r.expected_nilindex = e.expected_nilindex;
  r.jacobi_ok = jacobi_defect(e.tensor).empty();
  if (!r.jacobi_ok) {
    r.error = "NotLie";
    return r;
  }
  try {
    r.central_series = lower_central_series(e.tensor).dims;
    r.nilindex = nilindex(e.tensor);
    r.nilindex_matches_expected = *r.nilindex == e.expected_nilindex;
    r.characteristic_sequence = characteristic_sequence(e.tensor, samples, seed);
  } catch (const Error &err) {
    r.error = err.kind();
  }
  return r;
}

std::vector<EntryReport> verify_catalog(const std::vector<CatalogEntry> &entries, std::size_t samples,
                                        std::uint64_t seed, std::size_t threads) {
  std::vector<EntryReport> out(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) { out[i] = verify_entry(entries[i], samples, seed); });
  std::sort(out.begin(), out.end(),
            [](const EntryReport &a, const EntryReport &b) { return catalog_less(a.name, b.name); });
  return out;
}

std::vector<InvariantRow> invariant_table(const std::vector<CatalogEntry> &entries, std::size_t samples,
                                          std::uint64_t seed, std::size_t threads) {
  std::vector<InvariantRow> rows(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    const auto &e = entries[i];
    InvariantRow &row = rows[i];
    row.name = e.name;
    row.dim = e.dim;
    if (!is_lie(e.tensor))
      return;
    try {
      row.central_series = lower_central_series(e.tensor).dims;
      row.nilindex = nilindex(e.tensor);
      row.characteristic_sequence = characteristic_sequence(e.tensor, samples, seed).parts;
      row.derivations = derivations_dim(e.tensor);
      if (*row.nilindex <= 2)
        row.dimH2 = cohomology_dims_hc(e.tensor).dimH2;
    } catch (const Error &) {
    }
  });
  std::sort(rows.begin(), rows.end(),
            [](const InvariantRow &a, const InvariantRow &b) { return catalog_less(a.name, b.name); });
  auto key = [](const InvariantRow &r) {
    return std::tie(r.dim, r.nilindex, r.characteristic_sequence, r.central_series, r.derivations, r.dimH2);
  };
  for (auto &a : rows)
    for (const auto &b : rows)
      if (&a != &b && key(a) == key(b))
        a.not_separated_from.push_back(b.name);
  return rows;
}

} // namespace nilalg
