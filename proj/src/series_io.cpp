#include "invcensus/series_io.hpp"

#include <fstream>
#include <sstream>

namespace invcensus {

nlohmann::json integer_to_json(const Integer& value) {
  if (auto small = to_int64(value)) return *small;
  return value.str();
}

Integer integer_from_json(const nlohmann::json& value, std::string_view field) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(value.get<std::uint64_t>())
                                      : Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
    const bool digits = text.size() > start &&
                        text.find_first_not_of("0123456789", start) == std::string::npos;
    if (digits) return Integer(text);
  }
  throw series_format_error(std::string(field) + ": expected an exact integer, got " + value.dump());
}

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(integer_to_json(c));
  return {{"truncation_degree", s.truncation_degree()}, {"coefficients", std::move(coeffs)}};
}

Series series_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw series_format_error("series document must be a JSON object");
  if (!doc.contains("truncation_degree")) throw series_format_error("missing field \"truncation_degree\"");
  if (!doc.contains("coefficients")) throw series_format_error("missing field \"coefficients\"");
  const auto& deg = doc.at("truncation_degree");
  if (!deg.is_number_integer() || deg.get<long long>() < 0) {
    throw series_format_error("field \"truncation_degree\": expected a nonnegative integer, got " +
                              deg.dump());
  }
  const auto& coeffs = doc.at("coefficients");
  if (!coeffs.is_array()) throw series_format_error("field \"coefficients\": expected an array");
  const auto d = deg.get<long long>();
  if (static_cast<long long>(coeffs.size()) != d + 1) {
    throw series_format_error("field \"coefficients\": expected " + std::to_string(d + 1) +
                              " entries for truncation_degree " + std::to_string(d) + ", got " +
                              std::to_string(coeffs.size()));
  }
  std::vector<Integer> values;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    values.push_back(integer_from_json(coeffs[i], "coefficients[" + std::to_string(i) + "]"));
  }
  return Series(std::move(values));
}

Series parse_series_file_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw series_format_error(std::string("malformed JSON: ") + e.what());
  }
  return series_from_json(doc);
}

Series read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw series_format_error("cannot open series file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_series_file_text(buf.str());
  } catch (const series_format_error& e) {
    throw series_format_error(path.string() + ": " + e.what());
  }
}

void write_series_file(const std::filesystem::path& path, const Series& s) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write series file " + path.string());
  out << series_to_json(s).dump(2) << "\n";
}

}  // namespace invcensus
