#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mz/arith.hpp"

namespace mz {

// Integer Laurent polynomial in u, v. Only powers of uv are ever inverted,
// so every exponent pair (p, q) is admissible as (uv)^-k u^a v^b.
class EPoly {
public:
    using Key = std::pair<int, int>;

    EPoly() = default;
    EPoly(long c);  // NOLINT: constants convert implicitly
    EPoly(const Int& c);  // NOLINT

    static EPoly monomial(int p, int q, const Int& c = 1);
    static EPoly L(int k = 1) { return monomial(k, k); }  // (uv)^k

    const std::map<Key, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int p, int q) const;
    void add_term(int p, int q, const Int& c);

    EPoly& operator+=(const EPoly& o);
    EPoly& operator-=(const EPoly& o);
    EPoly& operator*=(const EPoly& o);
    EPoly operator-() const;
    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b);
    friend bool operator==(const EPoly& a, const EPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }
    friend bool operator<(const EPoly& a, const EPoly& b) { return a.c_ < b.c_; }

    // Exact division by an integer; throws if some coefficient is not divisible.
    EPoly div_exact(const Int& n) const;

    // Max p+q over the support, nullopt for zero.
    std::optional<int> degree() const;
    bool uv_only() const;
    // Coefficient of (uv)^d.
    Int uv_coeff(int d) const { return coeff(d, d); }
    // Substitute u v -> Q; requires uv_only().
    Rat eval_uv(const Rat& Q) const;
    // Evaluate at u = x, v = y.
    Rat eval(const Rat& x, const Rat& y) const;

    std::string str() const;

private:
    std::map<Key, Int> c_;
};

EPoly adams(const EPoly& f, int k);
EPoly pow(const EPoly& f, unsigned n);

}  // namespace mz
