#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adq {

/// Exact rational over arbitrary-precision integers; GMP keeps it canonical.
using Rational = mpq_class;

/// Accepts "p", "p/q", with optional sign; rejects q = 0.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0, e.g. "2/1", "-3/4".
std::string to_string(const Rational& q);

/// Shortest form: "2" for integers, "-3/4" otherwise.
std::string to_display(const Rational& q);

/// q^k for any integer k; throws DomainError on 0^negative.
Rational power(const Rational& q, long k);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace adq
