#ifndef NILALG_CATALOG_HPP
#define NILALG_CATALOG_HPP

#include "nilalg/lie.hpp"
#include "nilalg/structure_tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nilalg {

struct CatalogEntry {
  /// Unique key, e.g. "n7_120" or "n7_117(alpha=-1)".
  std::string name;
  /// Label without the parameter suffix.
  std::string base_name;
  std::size_t dim = 0;
  StructureTensor tensor;
  std::size_t expected_nilindex = 0;
  std::optional<Rational> alpha;
  std::string note;
};

/// Directory of the bundled data files.
std::filesystem::path default_catalog_dir();

/// Loads every *.json file of the directory. Parametric entries are
/// instantiated at `alphas` when given, else at the values listed in the
/// data file. Result is in catalog order (see catalog_less). Throws
/// DataCorrupt on any schema violation or duplicate name.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path &dir = default_catalog_dir(),
                                       const std::vector<Rational> &alphas = {});

/// Natural order on names: "n5_5" < "n6_19" < "n7_77" < "n7_120".
bool catalog_less(const std::string &a, const std::string &b);

struct EntryReport {
  std::string name;
  std::size_t dim = 0;
  std::size_t expected_nilindex = 0;
  bool jacobi_ok = false;
  std::optional<std::size_t> nilindex;
  bool nilindex_matches_expected = false;
  std::optional<CharSequence> characteristic_sequence;
  std::vector<std::size_t> central_series;
  /// Set when a computation raised (e.g. NotLie).
  std::string error;

  bool ok() const { return jacobi_ok && nilindex_matches_expected; }
};

EntryReport verify_entry(const CatalogEntry &e, std::size_t samples = 16, std::uint64_t seed = 0);

/// Verifies entries on `threads` workers (0 = hardware concurrency); the
/// result is sorted by name whatever the execution order.
std::vector<EntryReport> verify_catalog(const std::vector<CatalogEntry> &entries, std::size_t samples = 16,
                                        std::uint64_t seed = 0, std::size_t threads = 0);

struct InvariantRow {
  std::string name;
  std::size_t dim = 0;
  std::optional<std::size_t> nilindex;
  std::optional<Partition> characteristic_sequence;
  std::vector<std::size_t> central_series;
  std::optional<std::size_t> derivations;
  /// dim H²_{H,C}, only for 2-step entries.
  std::optional<std::size_t> dimH2;
  /// Same-dimension entries whose rows coincide with this one.
  std::vector<std::string> not_separated_from;
};

std::vector<InvariantRow> invariant_table(const std::vector<CatalogEntry> &entries, std::size_t samples = 16,
                                          std::uint64_t seed = 0, std::size_t threads = 0);

} // namespace nilalg

#endif
