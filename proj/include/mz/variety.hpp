#pragma once

#include <array>
#include <string>
#include <vector>

#include "mz/arith.hpp"
#include "mz/cyclo.hpp"
#include "mz/epoly.hpp"
#include "mz/poly.hpp"

namespace mz {

enum class VarKind {
    Affine,       // A^n
    Projective,   // P^n
    Gm,           // multiplicative group
    Points,       // finite set of rational points
    TwoPoint,     // the two-point set swapped by mu_2
    Curve,        // smooth projective curve given by its L-polynomial over F_q0
    Elliptic,     // elliptic curve over F_q0 with L-polynomial 1 + a t + q0 t^2
    Weierstrass,  // explicit Weierstrass equation (projective closure)
    Fermat0,      // x^n + y^n = 0 in Gm^2
    Fermat1,      // x^n + y^n = 1 in Gm^2
    Product,
    Union,
    Explicit      // affine equations and inequations
};

struct Variety {
    VarKind kind = VarKind::Points;
    int n = 0;
    long count = 0;
    long q0 = 0;
    long a = 0;
    std::vector<long> lpoly;           // Curve: 1, c_1, ..., c_2g
    std::array<long, 5> weier{};       // a1, a2, a3, a4, a6
    std::vector<Variety> parts;
    AffineSpec spec;

    static Variety affine(int n);
    static Variety projective(int n);
    static Variety gm();
    static Variety points(long k);
    static Variety two_point();
    static Variety curve(long q0, std::vector<long> lpoly);
    static Variety elliptic(long q0, long a);
    static Variety weierstrass(std::array<long, 5> coeffs);
    static Variety fermat0(int n);
    static Variety fermat1(int n);
    static Variety product(std::vector<Variety> parts);
    static Variety disjoint_union(std::vector<Variety> parts);
    static Variety explicit_spec(AffineSpec spec);

    std::string name() const;
    int dimension() const;
    int genus() const;  // curves only
};

// Compactly supported E-polynomial; throws DomainError for unsupported entries.
EPoly hd_measure(const Variety& X);

// #X(F_{q^m}) from the zeta descriptor (closed forms, Weil polynomials).
Int count_points(const Variety& X, long q, int m = 1);
// #X(F_{q^m}) by exhaustive enumeration of an explicit model.
Int brute_count(const Variety& X, long q, int m = 1);

// Closed-point census a_1..a_D (index 0 unused) from point counts.
std::vector<Int> census_from_counts(const std::vector<Int>& N);
std::vector<Int> census(const Variety& X, long q, int D);
std::vector<Int> brute_census(const Variety& X, long q, int D);

// Number of effective zero-cycles of degree n given the closed-point census.
Int cycles_of_degree(const std::vector<Int>& census, int n);

// Weierstrass model with L-polynomial 1 + a t + q t^2 over F_q (q prime), found by
// lexicographic search over coefficient tuples.
std::array<long, 5> find_weierstrass(long q, long a);
Int weierstrass_discriminant(const std::array<long, 5>& w);
// Projective point count of a Weierstrass curve over the field f.
Int weierstrass_points(const std::array<long, 5>& w, const GF& f);
// The same count by naive enumeration of all affine pairs (x, y).
Int weierstrass_points_naive(const std::array<long, 5>& w, const GF& f);

// Power sums of the inverse roots of an L-polynomial: s_1..s_M.
std::vector<Int> lpoly_power_sums(const std::vector<long>& lpoly, int M);

// Sum over X(F_q) of psi(Tr f(x)) in Q(zeta_p).
Cyclo exp_sum(const AffineSpec& X, const IntPoly& f, long q);

// Ring map Z[u,v] -> Q sending u, v to the roots of z^2 - e1 z + e2; defined on
// u <-> v symmetric polynomials.
Rat eval_symmetric(const EPoly& f, const Rat& e1, const Rat& e2);

}  // namespace mz
