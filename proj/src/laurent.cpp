#include "invcensus/laurent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace invcensus {

LaurentPoly LaurentPoly::constant(std::size_t variables, const Integer& c) {
  LaurentPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, const Integer& c) {
  LaurentPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::constant_term() const { return coefficient(Exponents(variables_, 0)); }

int LaurentPoly::max_abs_exponent() const {
  int m = 0;
  for (const auto& [e, c] : terms_) {
    for (int x : e) m = std::max(m, std::abs(x));
  }
  return m;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    out.terms_.emplace(std::move(neg), c);
  }
  return out;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != variables_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_arity(const LaurentPoly& other) const {
  if (other.variables_ != variables_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b);
  LaurentPoly out(a.variables_);
  LaurentPoly::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::exact_divided(const Integer& d, const char* what) const {
  LaurentPoly out(variables_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, exact_divide(c, d, what));
  return out;
}

Integer LaurentPoly::constant_term_of_product(const LaurentPoly& other) const {
  check_arity(other);
  const LaurentPoly& small = size() <= other.size() ? *this : other;
  const LaurentPoly& large = size() <= other.size() ? other : *this;
  Integer total = 0;
  Exponents neg(variables_);
  for (const auto& [e, c] : small.terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    auto it = large.terms_.find(neg);
    if (it != large.terms_.end()) total += c * it->second;
  }
  return total;
}

std::string format_laurent(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace invcensus
