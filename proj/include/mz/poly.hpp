#pragma once

#include <vector>

#include "mz/gf.hpp"

namespace mz {

// Multivariate polynomial with integer coefficients, reduced mod p on evaluation.
struct IntPoly {
    struct Term {
        long coeff;
        std::vector<int> exps;
    };
    int nvars = 0;
    std::vector<Term> terms;

    int eval(const GF& f, const std::vector<int>& point) const;
    int degree() const;
    bool is_zero_mod(int p) const;

    static IntPoly variable(int nvars, int i);
    static IntPoly constant(int nvars, long c);
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);

// An affine variety over F_q cut out by equations f = 0 and inequations g != 0.
struct AffineSpec {
    int nvars = 0;
    std::vector<IntPoly> equations;
    std::vector<IntPoly> inequations;

    bool contains(const GF& f, const std::vector<int>& point) const;
};

// Visits every point of GF^n; the callback receives the coordinate vector.
template <class Fn>
void for_each_point(const GF& f, int n, Fn&& fn) {
    std::vector<int> pt(n, 0);
    if (n == 0) {
        fn(pt);
        return;
    }
    while (true) {
        fn(pt);
        int i = n - 1;
        while (i >= 0) {
            if (++pt[i] < f.q()) break;
            pt[i] = 0;
            --i;
        }
        if (i < 0) return;
    }
}

}  // namespace mz
