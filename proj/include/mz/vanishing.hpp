#pragma once

#include <string>
#include <vector>

#include "mz/monclass.hpp"
#include "mz/series.hpp"

namespace mz {

using MSeries = Series<MonClass>;

// Building blocks of mu_2 x mu_2 varieties. Each factor of a product carries the
// action of its own mu_2.
enum class EqPiece {
    Point,
    Gm,
    A1,
    TwoPoint,  // two points swapped
    GmNeg      // Gm with x -> -x
};

struct EqProduct {
    EqPiece first = EqPiece::Point;
    EqPiece second = EqPiece::Point;
    long mult = 1;
};
using EqVariety = std::vector<EqProduct>;

bool acts_trivially(EqPiece p);
std::string piece_name(EqPiece p);
MonClass chi(EqPiece p);

// Realization of Z x^{mu_n x mu_n} F_0^n - Z x^{mu_n x mu_n} F_1^n, n in {1, 2}.
MonClass psi_fermat(const EqVariety& Z, int n = 2);

// Frobenius traces over F_q (q odd) on the invariant and anti-invariant parts of the
// same difference, by counting twisted Frobenius fixed points on Z x F over F_{q^2}.
struct EigenCounts {
    Int trivial;
    Int sign;
};
EigenCounts psi_fermat_count(const EqVariety& Z, long q);

struct Stratum {
    std::string label;
    MonClass cls;          // class of the cover over the open stratum
    std::vector<int> a;    // multiplicities of f along the divisors in J
    std::vector<int> nu;   // log-discrepancies
};

struct ResolutionData {
    std::vector<Stratum> strata;
    MonClass ambient;  // class of the zero fibre
};

// Sum of terms coefficient * product of symbols L^-nu T^a / (1 - L^-nu T^a).
struct RationalForm {
    struct Symbol {
        int nu;
        int a;
        friend bool operator==(const Symbol&, const Symbol&) = default;
    };
    struct Term {
        MonClass coeff;
        std::vector<Symbol> symbols;
    };
    std::vector<Term> terms;
};

RationalForm dl_zeta_form(const ResolutionData& res);
MSeries expand(const RationalForm& form, int prec);
MSeries dl_zeta(const ResolutionData& res, int prec);
// Substitutes -1 for every symbol.
MonClass limit_T_infinity(const RationalForm& form);

struct NearbyVanishing {
    MonClass psi;
    MonClass phi;
};
NearbyVanishing nearby_vanishing(const ResolutionData& res);

bool thom_sebastiani_check(const ResolutionData& f, const ResolutionData& g, const ResolutionData& fg);

// Data sets of the worked example.
ResolutionData resolution_x2();
ResolutionData resolution_x2_plus_y2();
ResolutionData resolution_smooth();

}  // namespace mz
