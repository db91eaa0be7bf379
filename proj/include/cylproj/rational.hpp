#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace cylproj {

/// Exact rational number. All set/measure logic is exact; doubles appear
/// only in display strings.
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// q^n with exact num/den exponentiation.
Rat rat_pow(const Rat& q, unsigned long n);

/// Parses "p" or "p/q" (nonnegative, q > 0). Returns nullopt on malformed
/// input; range checks are the caller's business.
std::optional<Rat> parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string rat_string(const Rat& r);

/// Display approximation ("0.333333"). Presentation only.
std::string rat_decimal(const Rat& r);

}  // namespace cylproj
