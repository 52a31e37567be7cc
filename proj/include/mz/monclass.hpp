#pragma once

#include <map>
#include <optional>
#include <string>

#include "mz/epoly.hpp"

namespace mz {

// Eigenvalue-graded E-polynomial. The key alpha lies in (-1, 0]; the
// corresponding monodromy eigenvalue is exp(-2 pi i alpha).
class MonClass {
public:
    MonClass() = default;
    MonClass(long c);  // NOLINT: trivial-monodromy constants
    MonClass(const EPoly& f);  // NOLINT: trivial-monodromy classes
    static MonClass at(const Rat& alpha, const EPoly& f);

    const std::map<Rat, EPoly>& parts() const { return c_; }
    EPoly part(const Rat& alpha) const;
    bool is_zero() const { return c_.empty(); }
    // Forgets the monodromy.
    EPoly total() const;

    void add(const Rat& alpha, const EPoly& f);
    MonClass& operator+=(const MonClass& o);
    MonClass& operator-=(const MonClass& o);
    MonClass operator-() const;
    friend MonClass operator+(MonClass a, const MonClass& b) { return a += b; }
    friend MonClass operator-(MonClass a, const MonClass& b) { return a -= b; }
    // Ordinary product: eigenvalues multiply, Hodge types add.
    friend MonClass operator*(const MonClass& a, const MonClass& b);
    friend bool operator==(const MonClass& a, const MonClass& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MonClass& a, const MonClass& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<Rat, EPoly> c_;
};

// Reduces alpha into (-1, 0].
Rat reduce_alpha(const Rat& alpha);

// Convolution product on line elements with the weight and Hodge-index shifts
// for pairs of nontrivial eigenvalues.
MonClass twisted_product(const MonClass& a, const MonClass& b);

// Maximal weight: p+q on the trivial part, p+q+1 elsewhere; nullopt for zero.
std::optional<int> weight(const MonClass& a);
std::optional<int> weight(const EPoly& a);

}  // namespace mz
