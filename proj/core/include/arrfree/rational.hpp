#ifndef ARRFREE_RATIONAL_HPP
#define ARRFREE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arrfree {

// Scalars live in Q. All arrangement invariants computed here (lattice,
// dimensions, freeness) are insensitive to extending Q to an algebraically
// closed field of characteristic zero, so Q stands in for the base field.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// gcd of absolute values of all entries; 0 for the zero vector.
Integer content(const std::vector<Integer>& v);

// Scale a rational vector to integer entries with content 1 and first
// nonzero entry positive. Zero vector maps to zero vector.
std::vector<Integer> normalize_integral(const std::vector<Rational>& v);

// Divide by content and flip sign so the first nonzero entry is positive.
std::vector<Integer> normalize_primitive(const std::vector<Integer>& v);

}  // namespace arrfree

#endif
