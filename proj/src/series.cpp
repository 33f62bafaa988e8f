#include "invcensus/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace invcensus {

Series::Series(int truncation_degree) {
  if (truncation_degree < 0) throw std::invalid_argument("Series: negative truncation degree");
  coeffs_.assign(static_cast<std::size_t>(truncation_degree) + 1, Integer(0));
}

Series::Series(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("Series: at least one coefficient is required");
}

Series Series::one(int truncation_degree) {
  Series s(truncation_degree);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::binomial(int truncation_degree, int degree, int c) {
  Series s = one(truncation_degree);
  if (degree <= truncation_degree) s[degree] += c;
  return s;
}

Series Series::truncated(int degree) const {
  if (degree < 0 || degree > truncation_degree()) {
    throw std::invalid_argument("Series::truncated: degree outside 0.." +
                                std::to_string(truncation_degree()));
  }
  return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int d = std::min(a.truncation_degree(), b.truncation_degree());
  Series out(d);
  for (int i = 0; i <= d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= d; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void Series::multiply_binomial(int degree, int sign) {
  if (degree <= 0) throw std::invalid_argument("multiply_binomial: degree must be positive");
  for (int i = truncation_degree(); i >= degree; --i) {
    if (sign > 0) {
      (*this)[i] += (*this)[i - degree];
    } else {
      (*this)[i] -= (*this)[i - degree];
    }
  }
}

void Series::divide_binomial(int degree, int sign) {
  if (degree <= 0) throw std::invalid_argument("divide_binomial: degree must be positive");
  // q = s / (1 + sign x^d)  <=>  q_i = s_i - sign q_{i-d}
  for (int i = degree; i <= truncation_degree(); ++i) {
    if (sign > 0) {
      (*this)[i] -= (*this)[i - degree];
    } else {
      (*this)[i] += (*this)[i - degree];
    }
  }
}

Series Series::divided_by(const Series& divisor) const {
  const Integer& c0 = divisor[0];
  if (c0 != 1 && c0 != -1) throw std::invalid_argument("Series division needs a unit constant term");
  const int d = std::min(truncation_degree(), divisor.truncation_degree());
  Series q(d);
  for (int i = 0; i <= d; ++i) {
    Integer acc = (*this)[i];
    for (int j = 1; j <= i; ++j) acc -= divisor[j] * q[i - j];
    q[i] = c0 == 1 ? acc : Integer(-acc);
  }
  return q;
}

std::string format_series(const Series& s, std::string_view variable) {
  const std::string v(variable);
  std::string out;
  for (int i = 0; i <= s.truncation_degree(); ++i) {
    const Integer& c = s[i];
    if (c == 0) continue;
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + " ";
    out += v;
    if (i > 1) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  out += " + O(" + v + "^" + std::to_string(s.truncation_degree() + 1) + ")";
  return out;
}

}  // namespace invcensus
