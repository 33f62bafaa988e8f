#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invcensus/integer.hpp"
#include "invcensus/partition.hpp"

namespace invcensus {

/// Irreducible character value chi^lambda(mu) of S_n by the
/// Murnaghan-Nakayama rule. Throws std::invalid_argument on weight mismatch.
Integer character(const Partition& lambda, const Partition& mu);

/// Dense character table of S_n. Rows are irreducibles, columns are classes,
/// both in the order of partitions_of(n).
class CharTable {
public:
  CharTable(int n, std::vector<Partition> partitions, std::vector<Integer> values);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return partitions_.size(); }
  [[nodiscard]] const std::vector<Partition>& partitions() const noexcept { return partitions_; }

  [[nodiscard]] const Integer& at(std::size_t irrep, std::size_t cls) const {
    return values_[irrep * size() + cls];
  }
  [[nodiscard]] const Integer& at(const Partition& irrep, const Partition& cls) const {
    return at(index_of(irrep), index_of(cls));
  }

  /// Position of p in partitions(); throws std::invalid_argument when absent.
  [[nodiscard]] std::size_t index_of(const Partition& p) const;

  [[nodiscard]] const std::vector<Integer>& values() const noexcept { return values_; }

private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<Integer> values_;
  std::unordered_map<Partition, std::size_t> index_;
};

inline constexpr int kCharTableFormatVersion = 1;

/// Per-n table store: in memory always, on disk when a directory is set.
/// Concurrent callers are serialised per build; returned tables are immutable.
class CharTableCache {
public:
  std::shared_ptr<const CharTable> get(int n);

  void set_directory(std::optional<std::filesystem::path> dir);
  [[nodiscard]] std::optional<std::filesystem::path> directory() const;

  /// Drops in-memory tables (disk files are kept).
  void clear();

  [[nodiscard]] std::filesystem::path file_for(int n) const;

private:
  std::shared_ptr<const CharTable> load(int n) const;
  void store(const CharTable& table) const;

  mutable std::mutex mutex_;
  std::unordered_map<int, std::shared_ptr<const CharTable>> tables_;
  std::optional<std::filesystem::path> dir_;
};

/// Process-wide cache used by char_table and the modules built on it.
CharTableCache& char_table_cache();

/// Throws resource_limit_error when n exceeds resource_limits().max_degree.
std::shared_ptr<const CharTable> char_table(int n);

/// Builds a table directly, bypassing every cache.
CharTable compute_char_table(int n);

}  // namespace invcensus
