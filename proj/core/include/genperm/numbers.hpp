#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace genperm {

/// Arbitrary-precision signed integer. Closed under +, -, *; never overflows.
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend.
using Rat = boost::multiprecision::mpq_rational;

Int factorial(unsigned n);

/// Binomial coefficient C(n, k); 0 when k > n so that formula sums may run
/// over uniform index ranges.
Int binomial(unsigned n, unsigned k);

/// Multinomial coefficient n! / (p_1! ... p_m! r!) with the implicit last
/// part r = n - sum(parts). Throws std::invalid_argument if sum(parts) > n.
Int multinomial(unsigned n, std::span<const unsigned> parts);
Int multinomial(unsigned n, std::initializer_list<unsigned> parts);

/// Stirling number of the second kind S(n, m): unordered partitions of an
/// n-set into m nonempty blocks. S(0,0) = 1, S(n,0) = 0 for n > 0, and
/// S(n,m) = 0 for m > n.
Int stirling2(unsigned n, unsigned m);

/// Ordered set partitions of [n] into exactly m blocks: S(n, m) * m!.
Int ordered_partition_count(unsigned n, unsigned m);

/// Parses "p", "-p" or "p/q" into a rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rat& value);

}  // namespace genperm
