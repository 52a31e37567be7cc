#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mz/cyclo.hpp"

namespace mz {

// Degree-1 place of P^1 over F_q: t - c, or infinity with uniformizer 1/t.
struct Place {
    bool infinite = false;
    long c = 0;

    static Place finite(long c) { return {false, c}; }
    static Place inf() { return {true, 0}; }
    auto operator<=>(const Place&) const = default;
};
std::string place_name(const Place& v);

// omega = dt: conductor nu_v = -ord_v(omega), r_v(x) = res_v(x dt) = sign * x_{nu - 1}.
int conductor(const Place& v);
int residue_sign(const Place& v);

struct LocalLevel {
    int M = 0;
    int N = 0;
    int n = 1;

    int width() const { return N - M; }
    long size(long q) const;
};

// Function on (s^M O / s^N O)^n. Tables are indexed in carrier order:
// coordinate blocks in turn, each block the digits x_M, ..., x_{N-1}, first digit most significant.
struct SBFunction {
    long q = 2;
    Place place;
    LocalLevel level;
    std::vector<Cyclo> values;

    SBFunction() = default;
    SBFunction(long q, Place v, LocalLevel lev);

    static SBFunction indicator(long q, Place v, int n, int M, int N);

    long index_of(const std::vector<int>& digits) const;
    std::vector<int> digits_of(long index) const;
    Cyclo at(const std::vector<int>& digits) const { return values.at(index_of(digits)); }
};

Cyclo integrate(const SBFunction& phi);
// Same function viewed at a coarser support and finer invariance level (M2 <= M, N2 >= N).
SBFunction relevel(const SBFunction& phi, int M2, int N2);
SBFunction fourier(const SBFunction& phi);

// Rational function over F_p, coefficients low degree first.
struct RationalFunction {
    std::vector<long> num{0};
    std::vector<long> den{1};
};
RationalFunction polynomial(std::vector<long> coeffs);
// Laurent digits of f at v for s^lo, ..., s^(hi-1); throws DomainError if ord_v f < lo.
std::vector<int> laurent(const RationalFunction& f, const Place& v, int lo, int hi, long p);
// Valuation at v, nullopt for f = 0.
std::optional<int> valuation(const RationalFunction& f, const Place& v, long p);

struct DivisorP1 {
    std::map<Place, int> mult;
    int degree() const;
};
std::vector<RationalFunction> rr_space(const DivisorP1& D, long q);

// Product of local functions over finitely many places. Unlisted finite places carry 1_O,
// an unlisted infinity carries 1_O as well.
struct SBProduct {
    long q = 2;
    int n = 1;
    std::vector<SBFunction> locals;
};
SBProduct complete(const SBProduct& phi);
DivisorP1 support_divisor(const SBProduct& phi);
Cyclo evaluate(const SBProduct& phi, const std::vector<RationalFunction>& x);
Cyclo sum_rational(const SBProduct& phi);
SBProduct fourier(const SBProduct& phi);
// x -> phi(x - a) at every place; a must lie in L(D)^n for the support divisor D.
SBProduct translate(const SBProduct& phi, const std::vector<RationalFunction>& a);

struct PoissonReport {
    Cyclo lhs;
    Cyclo rhs;  // q^n * sum of the transform (genus 0)
    bool equal = false;
};
PoissonReport poisson_check(const SBProduct& phi);

struct SamplerBudget {
    long max_table = 729;
    long max_sum = 200'000;
};
// Random product with |M|, N <= level_bound at infinity and up to two finite places.
SBProduct random_sb_product(std::mt19937_64& rng, long q, int n, int level_bound = 3, SamplerBudget budget = {});

// P(x) = sum_k P_k(t) x^k with P_k given by t-coefficients.
struct AnnulusPoly {
    std::vector<std::vector<long>> coeffs{{1}};
};
struct AnnulusResult {
    Cyclo value;
    Cyclo value_next;  // at truncation N + 1
    int N = 0;
    bool stable = false;
};
// q^-N sum over x in (t^m O \ t^(m+1) O) / t^N O of psi(res(P(x) x^-d dt)).
Cyclo annulus_sum(int m, int d, const AnnulusPoly& P, long q, int N);
AnnulusResult annulus_integral(int m, int d, const AnnulusPoly& P, long q);

// Levels per multiplicity j of a rational point in D: (alpha - M[j], beta + N[j]), M[0] = N[0] = 0.
struct FamilyLevels {
    int alpha = 0;
    int beta = 1;
    std::vector<int> M{0};
    std::vector<int> N{0};
};
struct FamilyReport {
    long divisors = 0;
    bool all_equal = true;
    Cyclo discrepancy;          // sum over D of lhs - rhs
    bool swap_lhs = false;      // sum_D sum_x == sum_x sum_D
    bool swap_rhs = false;
    std::vector<std::pair<std::vector<int>, PoissonReport>> per_divisor;  // multiplicities at the q + 1 points
};
// Effective divisors of degree k supported on P^1(F_q), with seeded local tables per (place, multiplicity).
FamilyReport family_poisson(long q, int k, int n, const FamilyLevels& levels, std::uint64_t seed);
SBProduct family_member(long q, int n, const FamilyLevels& levels, const std::vector<int>& multiplicity,
                        std::uint64_t seed);

}  // namespace mz
