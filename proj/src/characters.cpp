#include "invcensus/characters.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <shared_mutex>
#include <sstream>

namespace invcensus {

namespace {

struct MemoKey {
  Partition shape;
  Partition classes;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    const std::hash<Partition> h;
    return h(k.shape) * 31u ^ h(k.classes);
  }
};

class CharacterMemo {
public:
  std::optional<Integer> find(const MemoKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  // Two writers racing on a key insert the same value; the first one wins.
  void insert(MemoKey key, const Integer& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(std::move(key), value);
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MemoKey, Integer, MemoKeyHash> values_;
};

CharacterMemo& memo() {
  static CharacterMemo m;
  return m;
}

// Border strips of lambda are read off its beta-set: bead b_i = lambda_i + (l-1-i)
// sliding down by r to an empty position removes a strip of length r that
// starts in row i; the beads jumped over count the rows it spans beyond the first.
Integer murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  MemoKey key{lambda, mu};
  if (auto hit = memo().find(key)) return *hit;

  const int r = mu[0];
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

  const int len = static_cast<int>(lambda.length());
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  Integer total = 0;
  for (int row = 0; row < len; ++row) {
    const int from = beta[static_cast<std::size_t>(row)];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // Beads are strictly decreasing, so the ones in (to, from) follow row.
    int height = 0;
    for (int j = row + 1; j < len && beta[static_cast<std::size_t>(j)] > to; ++j) ++height;

    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(row)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
      const int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) parts.push_back(part);
    }
    const Integer sub = murnaghan_nakayama(Partition(std::move(parts)), rest);
    if (height % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  memo().insert(std::move(key), total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("character: weights differ (" + format_partition(lambda) + " vs " +
                                format_partition(mu) + ")");
  }
  return murnaghan_nakayama(lambda, mu);
}

CharTable::CharTable(int n, std::vector<Partition> partitions, std::vector<Integer> values)
    : n_(n), partitions_(std::move(partitions)), values_(std::move(values)) {
  if (values_.size() != partitions_.size() * partitions_.size()) {
    throw std::invalid_argument("CharTable: value count does not match partition count");
  }
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], i);
}

std::size_t CharTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw std::invalid_argument("partition " + format_partition(p) + " is not a partition of " +
                                std::to_string(n_));
  }
  return it->second;
}

CharTable compute_char_table(int n) {
  auto parts = partitions_of(n);
  std::vector<Integer> values;
  values.reserve(parts.size() * parts.size());
  for (const auto& irrep : parts) {
    for (const auto& cls : parts) values.push_back(character(irrep, cls));
  }
  return CharTable(n, std::move(parts), std::move(values));
}

std::shared_ptr<const CharTable> CharTableCache::get(int n) {
  if (n < 0) throw std::invalid_argument("char_table: negative n");
  std::lock_guard lock(mutex_);
  if (auto it = tables_.find(n); it != tables_.end()) return it->second;

  std::shared_ptr<const CharTable> table;
  if (dir_) table = load(n);
  if (!table) {
    table = std::make_shared<const CharTable>(compute_char_table(n));
    if (dir_) store(*table);
  }
  tables_.emplace(n, table);
  return table;
}

void CharTableCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mutex_);
  dir_ = std::move(dir);
}

std::optional<std::filesystem::path> CharTableCache::directory() const {
  std::lock_guard lock(mutex_);
  return dir_;
}

void CharTableCache::clear() {
  std::lock_guard lock(mutex_);
  tables_.clear();
}

std::filesystem::path CharTableCache::file_for(int n) const {
  const auto name = "chartable-v" + std::to_string(kCharTableFormatVersion) + "-n" +
                    std::to_string(n) + ".txt";
  return dir_ ? *dir_ / name : std::filesystem::path(name);
}

// Layout:
//   invcensus-chartable <version>
//   n <n>
//   classes <k>
//   <k partition lines>
//   <k rows of k integers>
std::shared_ptr<const CharTable> CharTableCache::load(int n) const {
  std::ifstream in(file_for(n));
  if (!in) return nullptr;
  try {
    std::string magic, tag;
    int version = 0, file_n = -1;
    std::size_t count = 0;
    if (!(in >> magic >> version) || magic != "invcensus-chartable" ||
        version != kCharTableFormatVersion) {
      return nullptr;
    }
    if (!(in >> tag >> file_n) || tag != "n" || file_n != n) return nullptr;
    if (!(in >> tag >> count) || tag != "classes") return nullptr;

    const auto expected = partitions_of(n);
    if (count != expected.size()) return nullptr;
    std::vector<Partition> parts;
    for (std::size_t i = 0; i < count; ++i) {
      std::string text;
      if (!(in >> text)) return nullptr;
      parts.push_back(parse_partition(text));
    }
    if (parts != expected) return nullptr;

    std::vector<Integer> values;
    values.reserve(count * count);
    for (std::size_t i = 0; i < count * count; ++i) {
      std::string text;
      if (!(in >> text)) return nullptr;
      values.emplace_back(text);
    }
    auto table = std::make_shared<const CharTable>(n, std::move(parts), std::move(values));

    std::mt19937 rng(static_cast<std::uint32_t>(0x5eed0000u + static_cast<std::uint32_t>(n)));
    const std::size_t row = std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    for (std::size_t c = 0; c < count; ++c) {
      if (table->at(row, c) != character(table->partitions()[row], table->partitions()[c])) {
        return nullptr;
      }
    }
    return table;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void CharTableCache::store(const CharTable& table) const {
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto path = file_for(table.n());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << "invcensus-chartable " << kCharTableFormatVersion << "\n";
    out << "n " << table.n() << "\n";
    out << "classes " << table.size() << "\n";
    for (const auto& p : table.partitions()) out << format_partition(p) << "\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
      for (std::size_t c = 0; c < table.size(); ++c) {
        if (c) out << ' ';
        out << table.at(r, c);
      }
      out << "\n";
    }
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

CharTableCache& char_table_cache() {
  static CharTableCache cache;
  return cache;
}

std::shared_ptr<const CharTable> char_table(int n) {
  if (n > resource_limits().max_degree) {
    throw resource_limit_error("character table too large: n = " + std::to_string(n) +
                               " exceeds the configured limit " +
                               std::to_string(resource_limits().max_degree));
  }
  return char_table_cache().get(n);
}

}  // namespace invcensus
