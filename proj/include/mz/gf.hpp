#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace mz {

// The finite field GF(p^k). Elements are encoded as integers in [0, q):
// the base-p digits are the coefficients of a polynomial in a primitive root.
class GF {
public:
    GF(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        int e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    int inv(int a) const;
    int pow(int a, long e) const;
    int from_int(long c) const;  // image of c mod p
    int generator() const { return exp_[1]; }
    int log(int a) const { return log_[a]; }
    int exp(long e) const;

    // x -> x^(p^j)
    int frobenius(int a, int j = 1) const;
    // absolute trace to the prime field, as an integer in [0, p)
    int trace(int a) const;
    bool is_square(int a) const;

private:
    int p_, k_, q_;
    std::vector<int> exp_, log_;
    std::vector<int> trace_;
};

// Shared cache so that repeated counts reuse tables.
std::shared_ptr<const GF> field(int p, int k);

}  // namespace mz
