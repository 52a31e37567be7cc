#include "mz/arith.hpp"

namespace mz {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower prime_power(long q) {
    if (q < 2) throw DomainError("not a prime power: " + std::to_string(q));
    long p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    long r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw DomainError("not a prime power: " + std::to_string(q));
    return {static_cast<int>(p), k};
}

int mobius(long n) {
    int s = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            s = -s;
        }
    }
    if (n > 1) s = -s;
    return s;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rat rpow(const Rat& b, long e) {
    if (e >= 0) {
        Rat r(ipow(b.get_num(), e), ipow(b.get_den(), e));
        r.canonicalize();
        return r;
    }
    if (b == 0) throw DomainError("zero to a negative power");
    Rat r(ipow(b.get_den(), -e), ipow(b.get_num(), -e));
    r.canonicalize();
    return r;
}

long ipow_small(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int multichoose(const Int& a, long k) {
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= a + i;
    return num / factorial(k);
}

std::string to_string(const Rat& r) { return r.get_str(); }

long inv_mod(long a, long p) {
    a = mod(a, p);
    if (a == 0) throw DomainError("inverse of zero");
    long r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace mz
