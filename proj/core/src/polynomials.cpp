#include "genperm/polynomials.hpp"

#include <sstream>

namespace genperm {

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = coeffs[d];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    Int mag = abs(c);
    if (mag != 1 || d == 0) out << mag.str();
    if (d > 0) {
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace genperm
