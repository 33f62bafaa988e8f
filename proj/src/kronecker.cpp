#include "invcensus/kronecker.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

#include "invcensus/characters.hpp"
#include "invcensus/parallel.hpp"

namespace invcensus {

namespace {

struct ClassData {
  std::shared_ptr<const CharTable> table;
  std::vector<Integer> class_sizes;  // n!/z_rho, column order of the table
  Integer group_order;
};

std::shared_ptr<const ClassData> class_data(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const ClassData>> cache;
  auto table = char_table(n);
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end() && it->second->table == table) return it->second;
  auto data = std::make_shared<ClassData>();
  data->table = std::move(table);
  data->group_order = factorial(n);
  for (const auto& rho : data->table->partitions()) {
    data->class_sizes.push_back(exact_divide(data->group_order, z_order(rho), "class size"));
  }
  cache[n] = data;
  return data;
}

void require_same_weight(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw std::invalid_argument("weights differ: " + format_partition(a) + " has weight " +
                                std::to_string(a.weight()) + ", " + format_partition(b) +
                                " has weight " + std::to_string(b.weight()));
  }
}

// Row-index form; the aggregate sum_rho |C_rho| chi chi chi must be divisible by n!.
Integer coefficient(const ClassData& d, std::size_t a, std::size_t b, std::size_t c) {
  const auto& t = *d.table;
  Integer sum = 0;
  for (std::size_t rho = 0; rho < t.size(); ++rho) {
    const Integer& x = t.at(a, rho);
    if (x == 0) continue;
    sum += x * t.at(b, rho) * t.at(c, rho) * d.class_sizes[rho];
  }
  Integer g = exact_divide(sum, d.group_order, "Kronecker class sum");
  if (g < 0) throw consistency_error("Kronecker coefficient is negative: " + g.str());
  return g;
}

}  // namespace

Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_same_weight(lambda, mu);
  require_same_weight(lambda, nu);
  const auto data = class_data(lambda.weight());
  const auto& t = *data->table;
  return coefficient(*data, t.index_of(lambda), t.index_of(mu), t.index_of(nu));
}

SchurExpansion inner_product_expansion(const Partition& lambda, const Partition& mu) {
  require_same_weight(lambda, mu);
  const int n = lambda.weight();
  const auto data = class_data(n);
  const auto& t = *data->table;
  const std::size_t a = t.index_of(lambda);
  const std::size_t b = t.index_of(mu);

  std::vector<Integer> mult(t.size());
  parallel_for(t.size(), [&](std::size_t nu) { mult[nu] = coefficient(*data, a, b, nu); });

  SchurExpansion out;
  out.weight = n;
  for (std::size_t nu = 0; nu < t.size(); ++nu) {
    if (mult[nu] != 0) out.terms.emplace(t.partitions()[nu], mult[nu]);
  }
  return out;
}

Integer pair_weight(const Partition& kappa, const Partition& lambda, int part_bound) {
  require_same_weight(kappa, lambda);
  if (part_bound < 1) throw std::invalid_argument("pair_weight: part bound must be positive");
  const int n = kappa.weight();
  const auto data = class_data(n);
  const auto& t = *data->table;
  const std::size_t k = t.index_of(kappa);
  const std::size_t l = t.index_of(lambda);

  Integer total = 0;
  for (const auto& sigma : partitions_of(n, part_bound)) {
    const std::size_t s = t.index_of(sigma);
    const Integer left = coefficient(*data, k, k, s);
    if (left == 0) continue;
    total += left * coefficient(*data, l, l, s);
  }
  return total;
}

std::string format_expansion(const SchurExpansion& e) {
  std::string out;
  for (const auto& [p, m] : e.terms) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.str();
    out += "{" + format_partition(p) + "}";
  }
  return out.empty() ? "0" : out;
}

}  // namespace invcensus
