#include "apolar/rational.hpp"

#include <cctype>

namespace apolar {

std::string int_to_string(const Int& n) { return n.str(); }

namespace {

bool parse_int_token(std::string_view s, Int& out) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    if (i >= s.size()) return false;
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    require_user(!text.empty(), "InvalidParameter", "empty rational literal");

    std::size_t slash = text.find('/');
    Int num, den = 1;
    if (slash == std::string_view::npos) {
        require_user(parse_int_token(text, num), "InvalidParameter",
                     "bad rational literal '" + std::string(text) + "'");
    } else {
        require_user(parse_int_token(text.substr(0, slash), num) &&
                         parse_int_token(text.substr(slash + 1), den),
                     "InvalidParameter", "bad rational literal '" + std::string(text) + "'");
    }
    return make_rat(num, den);
}

Int binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Int multinomial(const std::vector<int>& exps) {
    long d = 0;
    for (int e : exps) d += e;
    Int r = 1;
    long upper = d;
    for (int e : exps) {
        // product of binom(upper, e) telescopes to d! / prod(e_i!)
        r *= binomial_int(upper, e);
        upper -= e;
    }
    return r;
}

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

} // namespace apolar
