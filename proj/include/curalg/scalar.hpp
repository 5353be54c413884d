#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curalg {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Scalar = mpq_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Scalar& s);

/// Accepts "p", "p/q", "-p/q"; throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonicalized.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// (-1)^n for any integer n.
inline int koszul(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace curalg
