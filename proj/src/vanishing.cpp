#include "mz/vanishing.hpp"

#include <array>

#include "mz/gf.hpp"

namespace mz {

bool acts_trivially(EqPiece p) { return p == EqPiece::Point || p == EqPiece::Gm || p == EqPiece::A1; }

std::string piece_name(EqPiece p) {
    switch (p) {
        case EqPiece::Point: return "pt";
        case EqPiece::Gm: return "Gm";
        case EqPiece::A1: return "A1";
        case EqPiece::TwoPoint: return "E~";
        case EqPiece::GmNeg: return "Gm-";
    }
    return "?";
}

MonClass chi(EqPiece p) {
    switch (p) {
        case EqPiece::Point: return MonClass(1);
        case EqPiece::Gm:
        case EqPiece::GmNeg: return MonClass(EPoly::L() - 1);
        case EqPiece::A1: return MonClass(EPoly::L());
        case EqPiece::TwoPoint: return MonClass(1) + MonClass::at(Rat(-1, 2), 1);
    }
    throw DomainError("unknown piece");
}

namespace {

MonClass psi_pair(EqPiece a, EqPiece b) {
    if (acts_trivially(a) || acts_trivially(b)) return chi(a) * chi(b);
    // A free Gm factor is a torsor over Gm; the quotient fibres over Gm with the
    // remaining factor's mixed space as fibre.
    if (a == EqPiece::GmNeg) return MonClass(EPoly::L() - 1) * psi_pair(EqPiece::Point, b);
    if (b == EqPiece::GmNeg) return MonClass(EPoly::L() - 1) * psi_pair(a, EqPiece::Point);
    // Both free on two points: the quotients are F_0^2 (two lines y = +-ix, i.e. two
    // copies of Gm) and F_1^2 (a conic minus the four points +-1, +-i), each with the
    // antipodal involution.
    MonClass gm_neg = chi(EqPiece::GmNeg);
    MonClass f0 = gm_neg + gm_neg;
    MonClass f1 = gm_neg - chi(EqPiece::TwoPoint) - chi(EqPiece::TwoPoint);
    return f0 - f1;
}

}  // namespace

MonClass psi_fermat(const EqVariety& Z, int n) {
    if (n != 1 && n != 2) throw DomainError("Fermat convolution implemented for n in {1, 2}");
    MonClass r;
    for (const auto& prod : Z) {
        MonClass term;
        if (n == 1) {
            if (!acts_trivially(prod.first) || !acts_trivially(prod.second))
                throw DomainError("mu_1 acts trivially; pieces with an involution need n = 2");
            term = chi(prod.first) * chi(prod.second);
        } else {
            term = psi_pair(prod.first, prod.second);
        }
        r += term * MonClass(prod.mult);
    }
    return r;
}

namespace {

// #{z in piece(F_{q^2}) : Frob z = g z} for g = +1 (false) or -1 (true).
long twisted_fixed(EqPiece p, bool minus, const GF& f, int k) {
    switch (p) {
        case EqPiece::Point: return 1;
        case EqPiece::TwoPoint: return minus ? 0 : 2;
        case EqPiece::Gm:
        case EqPiece::A1:
        case EqPiece::GmNeg: {
            bool neg_action = (p == EqPiece::GmNeg) && minus;
            long c = 0;
            for (int x = (p == EqPiece::A1 ? 0 : 1); x < f.q(); ++x) {
                int target = neg_action ? f.neg(x) : x;
                if (f.frobenius(x, k) == target) ++c;
            }
            return c;
        }
    }
    return 0;
}

// #{(x, y) in Gm^2(F_{q^2}) : x^2 + y^2 = c, Frob x = s1 x, Frob y = s2 y}.
std::array<long, 4> fermat_fixed(int c, const GF& f, int k) {
    std::array<long, 4> out{};
    for (int x = 1; x < f.q(); ++x) {
        int fx = f.frobenius(x, k);
        int sx = fx == x ? 0 : (fx == f.neg(x) ? 1 : -1);
        if (sx < 0) continue;
        int x2 = f.mul(x, x);
        for (int y = 1; y < f.q(); ++y) {
            if (f.add(x2, f.mul(y, y)) != c) continue;
            int fy = f.frobenius(y, k);
            int sy = fy == y ? 0 : (fy == f.neg(y) ? 1 : -1);
            if (sy < 0) continue;
            // for p odd, x = -x only at 0, so each point lands in one class
            out[sx * 2 + sy]++;
        }
    }
    return out;
}

}  // namespace

EigenCounts psi_fermat_count(const EqVariety& Z, long q) {
    PrimePower pp = prime_power(q);
    if (pp.p == 2) throw DomainError("mu_2 counting needs odd characteristic");
    const GF& f = *field(pp.p, 2 * pp.k);
    std::array<std::array<long, 4>, 2> F{fermat_fixed(0, f, pp.k), fermat_fixed(1, f, pp.k)};
    Int trivial = 0, sign = 0;
    for (const auto& prod : Z) {
        std::array<Int, 2> N{}, Ntw{};
        for (int c = 0; c < 2; ++c)
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2) {
                    Int zc = Int(twisted_fixed(prod.first, g1, f, pp.k)) * twisted_fixed(prod.second, g2, f, pp.k);
                    N[c] += zc * F[c][g1 * 2 + g2];
                    Ntw[c] += zc * F[c][(1 - g1) * 2 + (1 - g2)];
                }
        Int diff = (N[0] - N[1]), diff_tw = (Ntw[0] - Ntw[1]);
        // both sums carry the factor |mu_2 x mu_2| = 4 and the eigenspace split 2
        if ((diff + diff_tw) % 8 != 0 || (diff - diff_tw) % 8 != 0)
            throw DomainError("twisted counts are not those of a free quotient");
        trivial += prod.mult * (diff + diff_tw) / 8;
        sign += prod.mult * (diff - diff_tw) / 8;
    }
    return {trivial, sign};
}

RationalForm dl_zeta_form(const ResolutionData& res) {
    RationalForm form;
    for (const auto& s : res.strata) {
        if (s.a.empty() || s.a.size() != s.nu.size())
            throw ParseError("stratum " + s.label + " needs matching nonempty multiplicity lists");
        RationalForm::Term term;
        term.coeff = s.cls * MonClass(pow(EPoly::L() - 1, static_cast<unsigned>(s.a.size() - 1)));
        for (size_t j = 0; j < s.a.size(); ++j) {
            if (s.a[j] < 1 || s.nu[j] < 1) throw ParseError("multiplicities must be positive in " + s.label);
            term.symbols.push_back({s.nu[j], s.a[j]});
        }
        form.terms.push_back(std::move(term));
    }
    return form;
}

MSeries expand(const RationalForm& form, int prec) {
    if (prec < 0) throw DomainError("negative precision");
    MSeries total({prec});
    for (const auto& term : form.terms) {
        MSeries acc = MSeries::constant({prec}, term.coeff);
        for (const auto& sym : term.symbols) {
            MSeries geo({prec});
            for (int k = 1; k * sym.a <= prec; ++k) geo.set({k * sym.a}, MonClass(EPoly::L(-sym.nu * k)));
            acc *= geo;
        }
        total += acc;
    }
    return total;
}

MSeries dl_zeta(const ResolutionData& res, int prec) { return expand(dl_zeta_form(res), prec); }

MonClass limit_T_infinity(const RationalForm& form) {
    MonClass r;
    for (const auto& term : form.terms) {
        if (term.symbols.size() % 2)
            r -= term.coeff;
        else
            r += term.coeff;
    }
    return r;
}

NearbyVanishing nearby_vanishing(const ResolutionData& res) {
    MonClass psi;
    for (const auto& s : res.strata) {
        if (s.a.empty()) throw ParseError("stratum " + s.label + " has an empty index set");
        psi += s.cls * MonClass(pow(1 - EPoly::L(), static_cast<unsigned>(s.a.size() - 1)));
    }
    return {psi, res.ambient - psi};
}

bool thom_sebastiani_check(const ResolutionData& f, const ResolutionData& g, const ResolutionData& fg) {
    return twisted_product(nearby_vanishing(f).phi, nearby_vanishing(g).phi) == nearby_vanishing(fg).phi;
}

ResolutionData resolution_x2() {
    ResolutionData r;
    r.strata.push_back({"1", chi(EqPiece::TwoPoint), {2}, {1}});
    r.ambient = MonClass(1);
    return r;
}

ResolutionData resolution_x2_plus_y2() {
    ResolutionData r;
    MonClass gm(EPoly::L() - 1);
    r.strata.push_back({"1", gm, {1}, {1}});
    r.strata.push_back({"2", gm, {1}, {1}});
    r.strata.push_back({"12", MonClass(1), {1, 1}, {1, 1}});
    r.ambient = MonClass(EPoly::L() * 2 - 1);
    return r;
}

ResolutionData resolution_smooth() {
    ResolutionData r;
    r.strata.push_back({"1", MonClass(1), {1}, {1}});
    r.ambient = MonClass(1);
    return r;
}

}  // namespace mz
