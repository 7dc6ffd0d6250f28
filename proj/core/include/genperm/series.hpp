#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <vector>

#include "genperm/numbers.hpp"

namespace genperm {

/// Inclusive truncation degrees for the three variables (x, s, y), where s
/// stands for the block x_2 + ... + x_l of the flag variables.
struct SeriesCaps {
  int x = 10;
  int s = 6;
  int y = 10;

  bool operator==(const SeriesCaps&) const = default;
  bool covers(const SeriesCaps& other) const {
    return x >= other.x && s >= other.s && y >= other.y;
  }
};

/// Truncated power series in (x, s, y) with exact rational coefficients.
/// A value represents the jet of a series up to its caps: coefficients
/// beyond the caps are unknown, not zero, and reading them throws.
class BiSeries {
 public:
  explicit BiSeries(SeriesCaps caps) : caps_(caps) {}

  static BiSeries monomial(SeriesCaps caps, int dx, int ds, int dy,
                           const Rat& coeff);
  static BiSeries one(SeriesCaps caps) { return monomial(caps, 0, 0, 0, 1); }

  const SeriesCaps& caps() const { return caps_; }
  bool in_caps(int dx, int ds, int dy) const {
    return dx >= 0 && ds >= 0 && dy >= 0 && dx <= caps_.x && ds <= caps_.s &&
           dy <= caps_.y;
  }

  /// Coefficient of x^dx s^ds y^dy; throws std::out_of_range beyond caps.
  Rat coefficient(int dx, int ds, int dy) const;

  /// Adds into a coefficient inside the caps (throws outside).
  void add_to(int dx, int ds, int dy, const Rat& value);

  bool is_zero() const { return coef_.empty(); }

  /// Nonzero entries keyed by (dx, ds, dy), in ascending key order.
  const std::map<std::array<int, 3>, Rat>& entries() const { return coef_; }

  bool operator==(const BiSeries&) const = default;

 private:
  SeriesCaps caps_;
  std::map<std::array<int, 3>, Rat> coef_;
};

// Ring operations at fixed caps.  Operands must have equal caps; a mismatch
// throws std::invalid_argument.
BiSeries series_add(const BiSeries& a, const BiSeries& b);
BiSeries series_sub(const BiSeries& a, const BiSeries& b);
BiSeries series_mul(const BiSeries& a, const BiSeries& b);
BiSeries series_scale(const BiSeries& a, const Rat& factor);

/// exp of a series with zero constant term (throws otherwise).
BiSeries series_exp(const BiSeries& a);

/// Exact quotient num/den where den factors as monomial * unit.  The
/// monomial must divide every term of num (std::domain_error otherwise,
/// which signals a transcription bug in a formula).  The quotient's caps
/// shrink by the monomial degrees: coefficients beyond them would not be
/// determined by the operands' jets.
BiSeries series_divide_exact(const BiSeries& num, const BiSeries& den);

/// Copy restricted to smaller caps (throws if newcaps exceed the input's).
BiSeries truncated(const BiSeries& a, SeriesCaps newcaps);

/// d/dx.  The x-cap drops by one.
BiSeries series_derivative_x(const BiSeries& a);

/// Antiderivative in x with zero constant term.  The x-cap grows by one.
BiSeries series_integrate_x(const BiSeries& a);

/// e^{xy} - E_m(xy) = sum_{j > m} (xy)^j / j!, the tail of the exponential
/// beyond its m-th Taylor polynomial.
BiSeries exp_xy_tail(int m, SeriesCaps caps);

/// e^y - E_m(y) = sum_{j > m} y^j / j!.
BiSeries exp_y_tail(int m, SeriesCaps caps);

/// e^{x(e^y - 1)}: coefficient of x^k y^n is S(n,k)/n!.
BiSeries touchard_series(int dx, int dy);

/// Exponential flag generating function of the family of Minkowski sums of
/// all k-support simplices, summed over n >= k with weight y^n/n!.  The
/// variable s models x_2+...+x_l; for ell == 1 the s-cap is forced to zero.
/// Coefficient of x^{s_1} s^m y^n is (sum over chains with the given
/// x_1-degree and block degree) f_chain / ((n-s_1)! n!).
BiSeries xi_series(int k, int ell, SeriesCaps caps = SeriesCaps{});

/// Closed form for k = 2 covering every permutahedron including the point
/// (the n = 1 term): (e^{(S/x)(e^{xy}-1)} - 1) / S with S = s + 1.
BiSeries permutahedron_xi_series(int ell, SeriesCaps caps = SeriesCaps{});

/// Recovers a flag count from a generating series:
/// (n - s_1)! n! [x^{s_1} s^m y^n] series, distributed over the individual
/// block variables by the multinomial of the chain increments.  The chain
/// length must equal ell; throws std::out_of_range when the needed
/// coefficient lies beyond the series caps.
Int extract_flag_count(const BiSeries& series, int n,
                       const std::vector<int>& chain, int ell);

/// CSV rows "k,ell,deg_x,deg_s,deg_y,num,den", entries in ascending degree
/// order.
void write_series_csv(std::ostream& out, const BiSeries& series, int k,
                      int ell);

}  // namespace genperm
