#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mz {

using Int = mpz_class;
using Rat = mpq_class;

// Error categories map onto CLI exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    int p = 0;
    int k = 0;
};

// Returns {p,k} with q = p^k, or throws DomainError.
PrimePower prime_power(long q);
bool is_prime(long n);

int mobius(long n);
std::vector<long> divisors(long n);

Int ipow(const Int& b, unsigned long e);
Rat rpow(const Rat& b, long e);
long ipow_small(long b, int e);

Int binomial(long n, long k);
Int factorial(long n);

// Multiset coefficient C(a + k - 1, k), allowing a < 0 formally.
Int multichoose(const Int& a, long k);

std::string to_string(const Rat& r);

inline long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long inv_mod(long a, long p);

}  // namespace mz
