#include "genperm/series.hpp"

#include <ostream>
#include <stdexcept>

namespace genperm {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void require_equal_caps(const BiSeries& a, const BiSeries& b,
                        const char* who) {
  if (!(a.caps() == b.caps())) {
    throw std::invalid_argument(std::string(who) + ": cap mismatch");
  }
}

}  // namespace

BiSeries BiSeries::monomial(SeriesCaps caps, int dx, int ds, int dy,
                            const Rat& coeff) {
  BiSeries result(caps);
  result.add_to(dx, ds, dy, coeff);
  return result;
}

Rat BiSeries::coefficient(int dx, int ds, int dy) const {
  if (!in_caps(dx, ds, dy)) {
    throw std::out_of_range("BiSeries: coefficient beyond caps is unknown");
  }
  auto it = coef_.find({dx, ds, dy});
  return it == coef_.end() ? Rat(0) : it->second;
}

void BiSeries::add_to(int dx, int ds, int dy, const Rat& value) {
  if (!in_caps(dx, ds, dy)) {
    throw std::out_of_range("BiSeries: write beyond caps");
  }
  if (value == 0) return;
  auto [it, inserted] = coef_.try_emplace({dx, ds, dy}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coef_.erase(it);
  }
}

BiSeries series_add(const BiSeries& a, const BiSeries& b) {
  require_equal_caps(a, b, "series_add");
  BiSeries result = a;
  for (const auto& [key, value] : b.entries()) {
    result.add_to(key[0], key[1], key[2], value);
  }
  return result;
}

BiSeries series_sub(const BiSeries& a, const BiSeries& b) {
  require_equal_caps(a, b, "series_sub");
  BiSeries result = a;
  for (const auto& [key, value] : b.entries()) {
    result.add_to(key[0], key[1], key[2], -value);
  }
  return result;
}

BiSeries series_mul(const BiSeries& a, const BiSeries& b) {
  require_equal_caps(a, b, "series_mul");
  BiSeries result(a.caps());
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      const int dx = ka[0] + kb[0];
      const int ds = ka[1] + kb[1];
      const int dy = ka[2] + kb[2];
      if (result.in_caps(dx, ds, dy)) {
        result.add_to(dx, ds, dy, va * vb);
      }
    }
  }
  return result;
}

BiSeries series_scale(const BiSeries& a, const Rat& factor) {
  BiSeries result(a.caps());
  if (factor == 0) return result;
  for (const auto& [key, value] : a.entries()) {
    result.add_to(key[0], key[1], key[2], value * factor);
  }
  return result;
}

BiSeries series_exp(const BiSeries& a) {
  if (a.in_caps(0, 0, 0) && a.coefficient(0, 0, 0) != 0) {
    throw std::invalid_argument("series_exp: nonzero constant term");
  }
  BiSeries result = BiSeries::one(a.caps());
  BiSeries power = BiSeries::one(a.caps());
  const int max_order = a.caps().x + a.caps().s + a.caps().y;
  for (int j = 1; j <= max_order; ++j) {
    power = series_mul(power, a);
    if (power.is_zero()) break;
    result = series_add(result, series_scale(power, Rat(1) / factorial(j)));
  }
  return result;
}

namespace {

// den = x^m0 * unit with the unit's constant term nonzero; returns m0.
// Throws when den's support has no componentwise-minimal element.
std::array<int, 3> leading_monomial(const BiSeries& den) {
  require(!den.is_zero(), "series_divide_exact: zero divisor");
  std::array<int, 3> m0 = den.entries().begin()->first;
  for (const auto& [key, value] : den.entries()) {
    for (int t = 0; t < 3; ++t) m0[t] = std::min(m0[t], key[t]);
  }
  if (den.entries().find(m0) == den.entries().end()) {
    throw std::domain_error(
        "series_divide_exact: divisor is not monomial times unit");
  }
  return m0;
}

BiSeries shifted_down(const BiSeries& a, const std::array<int, 3>& m0,
                      SeriesCaps newcaps) {
  BiSeries result(newcaps);
  for (const auto& [key, value] : a.entries()) {
    const int dx = key[0] - m0[0];
    const int ds = key[1] - m0[1];
    const int dy = key[2] - m0[2];
    if (dx < 0 || ds < 0 || dy < 0) {
      throw std::domain_error(
          "series_divide_exact: monomial does not divide numerator");
    }
    if (result.in_caps(dx, ds, dy)) result.add_to(dx, ds, dy, value);
  }
  return result;
}

// Inverse of a unit (nonzero constant term) by the truncated Neumann series.
BiSeries unit_inverse(const BiSeries& u) {
  const Rat c0 = u.coefficient(0, 0, 0);
  require(c0 != 0, "unit_inverse: constant term is zero");
  const BiSeries r =
      series_sub(series_scale(u, Rat(1) / c0), BiSeries::one(u.caps()));
  BiSeries result = BiSeries::one(u.caps());
  BiSeries power = BiSeries::one(u.caps());
  const int max_order = u.caps().x + u.caps().s + u.caps().y;
  for (int t = 1; t <= max_order; ++t) {
    power = series_mul(power, r);
    if (power.is_zero()) break;
    result = (t % 2 == 1) ? series_sub(result, power)
                          : series_add(result, power);
  }
  return series_scale(result, Rat(1) / c0);
}

}  // namespace

BiSeries series_divide_exact(const BiSeries& num, const BiSeries& den) {
  require_equal_caps(num, den, "series_divide_exact");
  const std::array<int, 3> m0 = leading_monomial(den);
  const SeriesCaps newcaps{num.caps().x - m0[0], num.caps().s - m0[1],
                           num.caps().y - m0[2]};
  require(newcaps.x >= 0 && newcaps.s >= 0 && newcaps.y >= 0,
          "series_divide_exact: caps too small for the shift");
  const BiSeries shifted_num = shifted_down(num, m0, newcaps);
  const BiSeries unit = shifted_down(den, m0, newcaps);
  return series_mul(shifted_num, unit_inverse(unit));
}

BiSeries truncated(const BiSeries& a, SeriesCaps newcaps) {
  require(a.caps().covers(newcaps), "truncated: caps may only shrink");
  BiSeries result(newcaps);
  for (const auto& [key, value] : a.entries()) {
    if (result.in_caps(key[0], key[1], key[2])) {
      result.add_to(key[0], key[1], key[2], value);
    }
  }
  return result;
}

BiSeries series_derivative_x(const BiSeries& a) {
  require(a.caps().x >= 1, "series_derivative_x: x-cap already zero");
  BiSeries result(SeriesCaps{a.caps().x - 1, a.caps().s, a.caps().y});
  for (const auto& [key, value] : a.entries()) {
    if (key[0] == 0) continue;
    result.add_to(key[0] - 1, key[1], key[2], value * key[0]);
  }
  return result;
}

BiSeries series_integrate_x(const BiSeries& a) {
  BiSeries result(SeriesCaps{a.caps().x + 1, a.caps().s, a.caps().y});
  for (const auto& [key, value] : a.entries()) {
    result.add_to(key[0] + 1, key[1], key[2], value / (key[0] + 1));
  }
  return result;
}

BiSeries exp_xy_tail(int m, SeriesCaps caps) {
  BiSeries result(caps);
  for (int j = m + 1; j <= std::min(caps.x, caps.y); ++j) {
    result.add_to(j, 0, j, Rat(1) / factorial(j));
  }
  return result;
}

BiSeries exp_y_tail(int m, SeriesCaps caps) {
  BiSeries result(caps);
  for (int j = m + 1; j <= caps.y; ++j) {
    result.add_to(0, 0, j, Rat(1) / factorial(j));
  }
  return result;
}

BiSeries touchard_series(int dx, int dy) {
  BiSeries result(SeriesCaps{dx, 0, dy});
  for (int n = 0; n <= dy; ++n) {
    for (int k = 0; k <= std::min(n, dx); ++k) {
      result.add_to(k, 0, n, Rat(stirling2(n, k), factorial(n)));
    }
  }
  return result;
}

namespace {

// (S/x)(e^{xy} - 1) = (1 + s) * sum_{j>=1} x^{j-1} y^j / j!, assembled
// directly with nonnegative exponents.
BiSeries scaled_exp_ratio(SeriesCaps caps) {
  BiSeries result(caps);
  for (int j = 1; j <= caps.y; ++j) {
    if (j - 1 > caps.x) break;
    const Rat c = Rat(1) / factorial(j);
    result.add_to(j - 1, 0, j, c);
    if (caps.s >= 1) result.add_to(j - 1, 1, j, c);
  }
  return result;
}

BiSeries one_plus_s(SeriesCaps caps) {
  BiSeries result = BiSeries::one(caps);
  if (caps.s >= 1) result.add_to(0, 1, 0, Rat(1));
  return result;
}

}  // namespace

BiSeries xi_series(int k, int ell, SeriesCaps caps) {
  require(k >= 1, "xi_series: need k >= 1");
  require(ell >= 1, "xi_series: need ell >= 1");
  require(caps.x >= 0 && caps.s >= 0 && caps.y >= k,
          "xi_series: caps too small to reach the first family member");
  if (ell == 1) caps.s = 0;
  // Work caps leave room for the monomial divisions below, which shift
  // degrees down by up to k in x and y.
  const SeriesCaps work{caps.x + k, caps.s, caps.y + k};

  const BiSeries scaled = scaled_exp_ratio(work);
  const BiSeries exp_scaled = series_exp(scaled);
  const BiSeries em1 = exp_xy_tail(0, work);

  BiSeries acc(caps);
  BiSeries denom = BiSeries::one(work);        // (e^{xy} - 1)^{i+1}
  BiSeries scaled_pow = BiSeries::one(work);   // scaled^i
  BiSeries taylor_head = BiSeries::one(work);  // E_i(scaled)
  for (int i = 0; i < k; ++i) {
    denom = series_mul(denom, em1);
    if (i > 0) {
      scaled_pow = series_mul(scaled_pow, scaled);
      taylor_head = series_add(taylor_head,
                               series_scale(scaled_pow, Rat(1) / factorial(i)));
    }
    // (xy)^i (e^{xy} - E_{k-i-1}(xy)) / (i! (e^{xy} - 1)^{i+1}); every term
    // of the numerator has (xy)-order at least k >= i+1, so the division is
    // exact.
    BiSeries numer = exp_xy_tail(k - i - 1, work);
    if (i > 0) {
      numer = series_mul(numer, BiSeries::monomial(work, i, 0, i, Rat(1)));
    }
    const BiSeries bracket1 = series_scale(series_divide_exact(numer, denom),
                                           Rat(1) / factorial(i));
    const BiSeries bracket2 = series_divide_exact(
        series_sub(exp_scaled, taylor_head), one_plus_s(work));
    const BiSeries term =
        series_mul(bracket1, truncated(bracket2, bracket1.caps()));
    acc = series_add(acc, truncated(term, caps));
  }
  return acc;
}

BiSeries permutahedron_xi_series(int ell, SeriesCaps caps) {
  require(ell >= 1, "permutahedron_xi_series: need ell >= 1");
  if (ell == 1) caps.s = 0;
  const BiSeries scaled = scaled_exp_ratio(caps);
  const BiSeries numer =
      series_sub(series_exp(scaled), BiSeries::one(caps));
  return series_divide_exact(numer, one_plus_s(caps));
}

Int extract_flag_count(const BiSeries& series, int n,
                       const std::vector<int>& chain, int ell) {
  require(n >= 1, "extract_flag_count: need n >= 1");
  require(static_cast<int>(chain.size()) == ell,
          "extract_flag_count: chain length must equal ell");
  for (size_t i = 0; i < chain.size(); ++i) {
    require(chain[i] >= 0 && chain[i] <= n - 1,
            "extract_flag_count: chain entry out of range");
    require(i == 0 || chain[i - 1] <= chain[i],
            "extract_flag_count: chain must be nondecreasing");
  }
  const int s1 = chain.front();
  const int block_degree = chain.back() - s1;
  // Multiplicity of the monomial x_2^{d_2}...x_l^{d_l} inside s^m.
  std::vector<unsigned> increments;
  for (size_t i = 1; i < chain.size(); ++i) {
    increments.push_back(static_cast<unsigned>(chain[i] - chain[i - 1]));
  }
  const Int distribution =
      multinomial(static_cast<unsigned>(block_degree), increments);
  const Rat coeff = series.coefficient(s1, block_degree, n);
  const Rat count = coeff * factorial(n - s1) * factorial(n) * distribution;
  if (denominator(count) != 1) {
    throw std::logic_error("extract_flag_count: non-integer flag count");
  }
  return numerator(count);
}

void write_series_csv(std::ostream& out, const BiSeries& series, int k,
                      int ell) {
  out << "k,ell,deg_x,deg_s,deg_y,num,den\n";
  for (const auto& [key, value] : series.entries()) {
    out << k << "," << ell << "," << key[0] << "," << key[1] << "," << key[2]
        << "," << numerator(value).str() << "," << denominator(value).str()
        << "\n";
  }
}

}  // namespace genperm
