#pragma once

#include <map>
#include <string>
#include <vector>

#include "genperm/numbers.hpp"

namespace genperm {

/// Dense univariate polynomial with integer coefficients, index = degree.
/// Trailing zero coefficients are trimmed so equality is structural.
struct IntPolynomial {
  std::vector<Int> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Int coefficient(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs.size())) return Int(0);
    return coeffs[d];
  }

  void add_term(int d, const Int& c) {
    if (d >= static_cast<int>(coeffs.size())) coeffs.resize(d + 1, Int(0));
    coeffs[d] += c;
    trim();
  }

  bool operator==(const IntPolynomial& other) const = default;

  std::string to_string(const std::string& var = "x") const;
};

/// Sparse multivariate polynomial: exponent tuple -> integer coefficient.
/// Zero coefficients are never stored.
struct MultiPolynomial {
  std::map<std::vector<int>, Int> terms;

  void add_term(const std::vector<int>& exponents, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(exponents);
    if (it == terms.end()) {
      terms.emplace(exponents, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Int coefficient(const std::vector<int>& exponents) const {
    auto it = terms.find(exponents);
    return it == terms.end() ? Int(0) : it->second;
  }

  bool operator==(const MultiPolynomial& other) const = default;
};

}  // namespace genperm
