#include "genperm/numbers.hpp"

#include <stdexcept>

namespace genperm {

namespace {

// Memo tables grow on demand. They are thread_local so concurrent readers
// never share mutable state.

std::vector<Int>& factorial_table() {
  thread_local std::vector<Int> table{Int(1)};
  return table;
}

std::vector<std::vector<Int>>& pascal_table() {
  thread_local std::vector<std::vector<Int>> table{{Int(1)}};
  return table;
}

std::vector<std::vector<Int>>& stirling_table() {
  thread_local std::vector<std::vector<Int>> table{{Int(1)}};
  return table;
}

}  // namespace

Int factorial(unsigned n) {
  auto& table = factorial_table();
  while (table.size() <= n) {
    table.push_back(table.back() * Int(table.size()));
  }
  return table[n];
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  auto& rows = pascal_table();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(rows.size() + 1, Int(1));
    for (size_t j = 1; j + 1 < row.size(); ++j) {
      row[j] = prev[j - 1] + prev[j];
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Int multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned used = 0;
  for (unsigned p : parts) used += p;
  if (used > n) {
    throw std::invalid_argument("multinomial: parts exceed n");
  }
  Int result = factorial(n);
  for (unsigned p : parts) result /= factorial(p);
  result /= factorial(n - used);
  return result;
}

Int multinomial(unsigned n, std::initializer_list<unsigned> parts) {
  return multinomial(n, std::span<const unsigned>(parts.begin(), parts.size()));
}

Int stirling2(unsigned n, unsigned m) {
  if (m > n) return Int(0);
  auto& rows = stirling_table();
  // Row n holds S(n, 0..n); recurrence S(n,m) = m*S(n-1,m) + S(n-1,m-1).
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    const size_t nn = rows.size();
    std::vector<Int> row(nn + 1, Int(0));
    for (size_t mm = 1; mm <= nn; ++mm) {
      Int from_same = (mm < prev.size()) ? Int(mm) * prev[mm] : Int(0);
      row[mm] = from_same + prev[mm - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows[n][m];
}

Int ordered_partition_count(unsigned n, unsigned m) {
  return stirling2(n, m) * factorial(m);
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace genperm
