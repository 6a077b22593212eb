#ifndef FGW_NUMTHEORY_HPP
#define FGW_NUMTHEORY_HPP

#include <stdexcept>
#include <vector>

namespace fgw {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long euler_phi(long n) {
    if (n < 1 || n > 1000000) throw std::invalid_argument("euler_phi: out of range");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int moebius(long n) {
    if (n < 1 || n > 1000000) throw std::invalid_argument("moebius: out of range");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace fgw

#endif
