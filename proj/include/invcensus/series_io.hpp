#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "invcensus/integer.hpp"
#include "invcensus/series.hpp"

namespace invcensus {

class series_format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact JSON form of an integer: a number when it fits int64, otherwise a
/// decimal string.
nlohmann::json integer_to_json(const Integer& value);
/// Accepts JSON integers and decimal strings; throws series_format_error.
Integer integer_from_json(const nlohmann::json& value, std::string_view field);

/// {"truncation_degree": D, "coefficients": [c0, ..., cD]}
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& doc);

/// Parses a series document, reporting line/column or field on failure.
Series parse_series_file_text(std::string_view text);
Series read_series_file(const std::filesystem::path& path);
void write_series_file(const std::filesystem::path& path, const Series& s);

}  // namespace invcensus
