#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "invcensus/integer.hpp"

namespace invcensus {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0. Also used as a cycle type labelling a
/// conjugacy class of S_n.
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless \p parts is weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The single-row partition (n); empty when n == 0.
  static Partition row(int n);
  /// The single-column partition (1^n).
  static Partition column(int n);

  [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
  [[nodiscard]] int weight() const noexcept { return weight_; }
  [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  [[nodiscard]] int part_or_zero(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Every partition of n (with at most max_parts parts), reverse-lexicographic
/// starting from (n).
std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt);

Partition conjugate(const Partition& p);

/// Centralizer order z_p = prod_i i^{m_i} m_i!.
Integer z_order(const Partition& p);

/// Hook-length formula: number of standard Young tableaux of shape p.
Integer dimension(const Partition& p);

/// (-1)^(n - length) for a cycle type.
int sign(const Partition& cycle_type);

/// "6,2" style text, "-" for the empty partition.
std::string format_partition(const Partition& p);

/// Inverse of format_partition. Throws partition_parse_error.
Partition parse_partition(std::string_view text);

class partition_parse_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace invcensus

template <>
struct std::hash<invcensus::Partition> {
  std::size_t operator()(const invcensus::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};
