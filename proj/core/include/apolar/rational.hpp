#ifndef APOLAR_RATIONAL_HPP
#define APOLAR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

// Exact arithmetic throughout: arbitrary-precision integers and canonical
// rationals (denominator > 0, fully reduced, zero is 0/1).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Builds num/den with sign normalization. The boost two-argument
/// constructor rejects negative denominators, so route through here.
inline Rat make_rat(Int num, Int den) {
    require_user(den != 0, "InvalidParameter", "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Formats canonically: "p" when integral, else "p/q".
inline std::string rat_to_string(const Rat& q) { return q.str(); }

std::string int_to_string(const Int& n);

/// Parses "p" or "p/q" with optional leading sign. Throws InvalidParameter.
Rat parse_rat(std::string_view text);

/// binom(n, k) over the integers; zero for k < 0 or k > n.
Int binomial_int(long n, long k);

/// Multinomial d! / (e_0! ... e_n!) for an exponent vector summing to d.
Int multinomial(const std::vector<int>& exps);

Int int_gcd(Int a, Int b);
Int int_lcm(const Int& a, const Int& b);

} // namespace apolar

#endif
