#include "invcensus/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace invcensus {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  return n == 0 ? Partition{} : Partition(std::vector<int>{n});
}

Partition Partition::column(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

namespace {

void enumerate(int remaining, int cap, std::optional<int> slots, std::vector<int>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots && *slots == 0) return;
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    // Remaining slots must be able to hold what is left.
    if (slots && static_cast<long>(part) * *slots < remaining) break;
    prefix.push_back(part);
    enumerate(remaining - part, part, slots ? std::optional<int>(*slots - 1) : std::nullopt,
              prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_parts) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  if (max_parts && *max_parts < 0) throw std::invalid_argument("partitions_of: negative max_parts");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(n, n, max_parts, prefix, out);
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> result(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(result));
}

Integer z_order(const Partition& p) {
  Integer z = 1;
  auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    Integer size_power = boost::multiprecision::pow(Integer(parts[i]), static_cast<unsigned>(mult));
    z *= size_power * factorial(mult);
    i = j;
  }
  return z;
}

Integer dimension(const Partition& p) {
  const Partition c = conjugate(p);
  Integer hooks = 1;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      const int arm = p[i] - j - 1;
      const int leg = c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return exact_divide(factorial(p.weight()), hooks, "hook-length formula");
}

int sign(const Partition& cycle_type) {
  return (cycle_type.weight() - static_cast<int>(cycle_type.length())) % 2 == 0 ? 1 : -1;
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw partition_parse_error("empty partition text (use \"-\" for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw partition_parse_error("malformed partition part \"" + std::string(token) + "\"");
    }
    if (value <= 0) {
      throw partition_parse_error("partition part \"" + std::string(token) + "\" must be positive");
    }
    if (!parts.empty() && value > parts.back()) {
      throw partition_parse_error("parts must be weakly decreasing (at \"" + std::string(token) +
                                  "\")");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace invcensus
