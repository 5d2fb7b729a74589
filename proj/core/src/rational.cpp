#include "arrfree/rational.hpp"

namespace arrfree {

Integer content(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<Integer> normalize_primitive(const std::vector<Integer>& v) {
    Integer g = content(v);
    if (g == 0) return v;
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x / g);
    for (const auto& x : out) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : out) y = -y;
            break;
        }
    }
    return out;
}

std::vector<Integer> normalize_integral(const std::vector<Rational>& v) {
    Integer lcm = 1;
    for (const auto& q : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> scaled;
    scaled.reserve(v.size());
    for (const auto& q : v) scaled.push_back(q.get_num() * (lcm / q.get_den()));
    return normalize_primitive(scaled);
}

}  // namespace arrfree
