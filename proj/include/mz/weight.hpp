#pragma once

#include <optional>
#include <vector>

#include "mz/euler.hpp"
#include "mz/monclass.hpp"

namespace mz {

struct RadiusEstimate {
    std::optional<Rat> value;  // nullopt: every coefficient in the window vanishes
    bool stable = false;
};
// Max of w(X_i) / 2i over the trailing window of a one-variable series.
RadiusEstimate radius(const ESeries& F, int window);

enum class ConvergenceMode {
    Curve,   // w(X_i) <= 2i - 2 for i <= M, w(X_i) <= 2ci - 1 beyond
    Uniform  // w(X_i) <= 2ci - 1 for all i
};
struct ConvergenceReport {
    bool ok = false;
    // Largest delta with w(X_i) <= 2(c - delta)i - 1 for the checked i > M; nullopt if none checked.
    std::optional<Rat> delta;
};
ConvergenceReport convergence_check(const ESeries& F, int M, const Rat& c,
                                    ConvergenceMode mode = ConvergenceMode::Curve);

struct GrowthReport {
    int residue = 0;
    bool dominant = false;       // case (ii)
    int d0 = 0;                  // top uv-degree among the derivative sums
    int i0 = 0;                  // first derivative order reaching d0
    int degree = 0;              // degree in m of the controlling polynomial
    std::vector<Rat> poly;       // coefficients in m = (n - residue) / a, constant first
};
// Z = F / (1 - L^a T^a)^r with F the given numerator series.
std::vector<GrowthReport> coef_growth(const ESeries& F, int a, int r);
// Value of the controlling polynomial at n, i.e. the predicted coefficient of (uv)^(n + d0) in M_n.
Rat predicted_top(const std::vector<GrowthReport>& reports, int a, int n);
// Expansion of F / (1 - L^a T^a)^r to the precision of F.
ESeries expand_growth_series(const ESeries& F, int a, int r);

// Boundary data of an equivariant compactification over a curve.
struct StratumTerm {
    unsigned subset = 0;        // A as a bitmask over boundary components
    EPoly delta;                // class of Delta(A, beta)
    std::vector<int> e;         // exponents e_{alpha, beta} of T_alpha (empty: all zero)
    int rho_beta = 0;
};
struct BadPlace {
    int clemens = 1;            // 1 + dim of the analytic Clemens complex
    std::vector<StratumTerm> strata;
};
struct CompactificationData {
    int n = 1;                  // dimension
    std::vector<int> rho;       // rho_alpha >= 2
    std::vector<bool> in_AD;
    std::vector<StratumTerm> good;
    std::vector<BadPlace> bad;

    int components() const { return static_cast<int>(rho.size()); }
    int rho_log(int alpha) const { return in_AD[alpha] ? rho[alpha] - 1 : rho[alpha]; }
    void validate() const;
};

int pole_order(const CompactificationData& data);

// Local factor Z_v(T, 0) at a good place in the variables T_alpha, truncated at prec.
ESeries local_factor_trivial(const CompactificationData& data, const std::vector<StratumTerm>& strata, int prec);
ESeries local_factor_trivial(const CompactificationData& data, int prec);

struct GlobalZeta {
    int a = 1;                  // lcm of the rho'_alpha
    int r = 0;                  // pole order
    ESeries series_E;           // E-avatar Z(T)
    ESeries numerator_E;        // Z(T) (1 - (LT)^a)^r
    QSeries series_count;       // counting avatar over F_q
    QSeries numerator_count;
};
// Euler product over the base curve of the good local factors (T_alpha -> T^{rho'_alpha}),
// times the bad factors placed at rational points.
GlobalZeta global_zeta_trivial(const CompactificationData& data, const Variety& curve, long q, int prec);

// #{x in F_q(t) : max(deg num, deg den) = d in lowest terms}.
Int schanuel_oracle(long q, int d);

}  // namespace mz
