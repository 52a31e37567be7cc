#pragma once

#include <vector>

#include "mz/lambda.hpp"
#include "mz/variety.hpp"

namespace mz {

// A constant family of local factors over a base, with replacement factors at
// distinct rational points. Every factor shares the bound of `factor`.
struct Family {
    Variety base;
    ESeries factor;
    std::vector<ESeries> overrides;
};

// Coefficients at uv = Q; throws unless every coefficient is a polynomial in uv.
QSeries at_uv(const ESeries& f, const Rat& Q);

// E-avatar: Exp([X - marked] Log f) times the marked factors.
ESeries euler_product_E(const Family& F);
// Counting avatar over F_q: product over closed points of f(t^deg) at uv = q^deg.
QSeries euler_product_count(const Family& F, long q);

// Closed points of the base by degree up to D. A^1, P^1 and Gm are enumerated as
// Frobenius orbits; other bases fall back to the census.
std::vector<Int> closed_points(const Variety& base, long q, int D);

struct OracleResult {
    Rat value;
    long configurations = 0;
};
// Coefficient of t^n by enumerating effective zero-cycles with multi-index labels.
OracleResult config_oracle(const Family& F, long q, const Exps& n, long cap = 10'000'000);

bool cut_and_paste_check(const ESeries& f, const Variety& X, const Variety& U, const Variety& Y, long q);
// t_i -> L^{m_i} t_i against coefficients twisted by L^{m.i}.
bool totaro_check(const Family& F, const Exps& m, long q);
bool mult_check(const Family& F, const Family& G, long q);

// Finite cover X -> R described by residue-degree patterns over each closed point of R.
enum class CoverKind { Trivial, Squaring };
struct Cover {
    CoverKind kind = CoverKind::Trivial;
    Variety base;
    long sheets = 1;  // trivial covers: R x {sheets points}
};
// For each degree d <= D, the list of fibres over the closed points of R of degree d;
// a fibre is the list of relative degrees of the points above.
std::vector<std::vector<std::vector<int>>> fibre_census(const Cover& c, long q, int D);
Variety total_space(const Cover& c);
bool double_product_check(const Cover& c, const ESeries& f, long q);

bool sym_minus_check(const EPoly& Y, int m);

// Euler product with arbitrary constant terms at the marked points, assembled from
// the decomposition over subsets E of marked points.
ESeries const_term_product(const Family& F);

// Series helpers.
ESeries geometric_factor(const Exps& bound);  // sum over all exponents, i.e. (1 - t)^-1 in one variable
ESeries one_plus(const Exps& bound, const std::vector<std::pair<Exps, EPoly>>& terms);

}  // namespace mz
