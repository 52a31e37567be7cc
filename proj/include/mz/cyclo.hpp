#pragma once

#include <string>
#include <vector>

#include "mz/arith.hpp"

namespace mz {

// Element of Q(zeta_p) stored on the powers zeta^0..zeta^(p-1) and kept in the
// canonical form where the last coordinate is zero (sum of all powers is 0).
class Cyclo {
public:
    Cyclo() = default;
    explicit Cyclo(int p, const Rat& c = 0);

    static Cyclo zeta_pow(int p, long e);

    int p() const { return p_; }
    const std::vector<Rat>& coords() const { return c_; }

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Rat& s);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(Cyclo a, const Rat& s) { return a *= s; }
    Cyclo operator-() const;
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Adds s * zeta^e in place.
    void add_zeta(long e, const Rat& s);
    // Multiplies by zeta^e.
    Cyclo rotate(long e) const;

    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // throws unless is_rational()
    Cyclo conj() const;
    Cyclo norm2() const { return *this * conj(); }

    std::string str() const;

private:
    void normalize();
    int p_ = 0;
    std::vector<Rat> c_;
};

// True iff |sigma(z)|^2 <= bound for every complex embedding sigma.
// Decided exactly: equality is detected in the ring, strict signs by interval evaluation.
bool abs2_at_most(const Cyclo& z, const Rat& bound);

}  // namespace mz
