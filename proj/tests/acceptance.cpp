// One PASS/FAIL line per acceptance criterion. Usage: acceptance [criterion ...]

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mz/euler.hpp"
#include "mz/fourier.hpp"
#include "mz/partitions.hpp"
#include "mz/vanishing.hpp"
#include "mz/weight.hpp"

using namespace mz;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string first_failure;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            first_failure = what;
            pass = false;
        }
    }
};

const EPoly L = EPoly::L();

void howe(Outcome& o) {
    HoweSweep s = howe_sweep(8, 3);
    o.detail << s.cases << " tuples, " << s.failures << " failures";
    o.require(s.cases > 1000, "too few tuples enumerated");
    o.require(s.failures == 0, "sum differs from the sign");
}

void kapranov_elliptic(Outcome& o) {
    const long q = 5;
    int checked = 0;
    for (long a = -4; a <= 4; ++a) {
        Variety E = Variety::elliptic(q, a);
        auto w = find_weierstrass(q, a);
        Variety model = Variety::weierstrass(w);
        std::vector<Int> cen = brute_census(model, q, 6);
        ZSeries rational = rational_expansion({1, Int(a), Int(q)}, {1, Int(-(1 + q)), Int(q)}, 6);
        for (int n = 0; n <= 6; ++n) {
            o.require(cycles_of_degree(cen, n) == rational[n], "S^n count, a = " + std::to_string(a));
            o.require(kapranov_zeta_count(E, q, 6)[n] == rational[n], "descriptor count, a = " + std::to_string(a));
        }
        Int points = brute_count(model, q);
        Rat P_inv = 1 + Rat(a, q) + Rat(q, q * q);
        o.require(P_inv == Rat(points, q), "P(1/q) = #E/q, a = " + std::to_string(a));
        ++checked;
    }
    o.detail << checked << " traces, n <= 6, brute force on Weierstrass models";
}

void euler_oracle(Outcome& o) {
    long coefficients = 0, configurations = 0;
    for (const auto& X : {Variety::affine(1), Variety::projective(1), Variety::gm()})
        for (long q : {2L, 3L})
            for (const ESeries& f : {geometric_factor({5}), one_plus({5}, {{{1}, EPoly(1)}}), one_plus({5}, {{{2}, L}})}) {
                Family F{X, f, {}};
                QSeries C = euler_product_count(F, q);
                for (int n = 0; n <= 5; ++n) {
                    OracleResult r = config_oracle(F, q, {n});
                    configurations += r.configurations;
                    ++coefficients;
                    o.require(r.value == C[n], X.name() + " q=" + std::to_string(q) + " n=" + std::to_string(n));
                }
            }
    o.detail << coefficients << " coefficients, " << configurations << " configurations";
}

ESeries mixed_sign_factor(std::mt19937_64& rng, int prec) {
    std::uniform_int_distribution<int> coef(-2, 2), deg(0, 1);
    ESeries f = ESeries::constant({prec}, EPoly(1));
    for (int i = 1; i <= prec; ++i) f.set({i}, EPoly::L(deg(rng)) * EPoly(coef(rng)));
    return f;
}

void multiplicativity(Outcome& o) {
    std::mt19937_64 rng(4);
    const std::vector<Variety> bases{Variety::affine(1), Variety::projective(1), Variety::gm(), Variety::elliptic(3, 1)};
    int negative = 0;
    for (int t = 0; t < 50; ++t) {
        const Variety& X = bases[t % bases.size()];
        long q = X.kind == VarKind::Elliptic ? X.q0 : 2 + t % 2;
        Family F{X, mixed_sign_factor(rng, 4), {}}, G{X, mixed_sign_factor(rng, 4), {}};
        for (const auto& [e, c] : F.factor.terms()) negative += c.uv_coeff(0) < 0 || c.uv_coeff(1) < 0;
        o.require(mult_check(F, G, q), "family pair " + std::to_string(t));
    }
    o.require(negative > 0, "no negative coefficients drawn");
    for (const auto& X : {Variety::affine(1), Variety::projective(1), Variety::gm(), Variety::projective(2),
                          Variety::elliptic(5, 1)}) {
        Family Z{X, geometric_factor({6}), {}}, M{X, one_plus({6}, {{{1}, EPoly(-1)}}), {}};
        o.require(euler_product_E(Z) * euler_product_E(M) == ESeries::constant({6}, EPoly(1)), "inverse E " + X.name());
        long q = X.kind == VarKind::Elliptic ? X.q0 : 3;
        o.require(euler_product_count(Z, q) * euler_product_count(M, q) == QSeries::constant({6}, 1),
                  "inverse count " + X.name());
    }
    o.detail << "50 mixed-sign pairs, inverse identity on 5 bases to prec 6";
}

void thom_sebastiani(Outcome& o) {
    MonClass phi_x2 = nearby_vanishing(resolution_x2()).phi;
    MonClass phi_x2y2 = nearby_vanishing(resolution_x2_plus_y2()).phi;
    o.require(phi_x2 == MonClass::at(Rat(-1, 2), EPoly(-1)), "phi(x^2) = " + phi_x2.str());
    o.require(phi_x2y2 == MonClass(L), "phi(x^2+y^2) = " + phi_x2y2.str());
    o.require(twisted_product(phi_x2, phi_x2) == MonClass(L), "twisted square");
    MonClass conv = psi_fermat({{EqPiece::TwoPoint, EqPiece::TwoPoint, 1}});
    o.require(conv == MonClass::at(0, L + 1) + MonClass::at(Rat(-1, 2), EPoly(2)), "psi_fermat = " + conv.str());
    o.require(thom_sebastiani_check(resolution_x2(), resolution_x2(), resolution_x2_plus_y2()), "phi(f+g) = phi(f) * phi(g)");
    o.detail << "phi(x^2) = " << phi_x2.str() << ", phi(x^2+y^2) = " << phi_x2y2.str();
}

AnnulusPoly random_annulus_poly(std::mt19937_64& rng, long q) {
    std::uniform_int_distribution<long> unit(1, q - 1), any(0, q - 1);
    AnnulusPoly P;
    P.coeffs.assign(3, std::vector<long>(3, 0));
    for (auto& c : P.coeffs)
        for (auto& x : c) x = any(rng);
    P.coeffs[0][0] = unit(rng);
    return P;
}

void annulus(Outcome& o) {
    long cases = 0, wrong = 0;
    std::ostringstream bad;
    for (long q : {2L, 3L, 5L}) {
        std::mt19937_64 rng(600 + q);
        std::vector<AnnulusPoly> polys{AnnulusPoly{}};
        while (polys.size() < 5) polys.push_back(random_annulus_poly(rng, q));
        for (int m = 1; m <= 4; ++m)
            for (int d = 1; d <= 4; ++d) {
                Cyclo expected(static_cast<int>(q), m == 1 && d == 1 ? Rat(-1, q * q) : Rat(0));
                int miss = 0;
                for (const auto& P : polys) {
                    AnnulusResult r = annulus_integral(m, d, P, q);
                    ++cases;
                    if (!(r.stable && r.value == expected)) ++miss;
                }
                if (miss) bad << " (q=" << q << ",m=" << m << ",d=" << d << ")";
                wrong += miss;
            }
    }
    o.detail << cases << " cases, " << wrong << " off the stated value";
    if (wrong) o.detail << " at" << bad.str();
    o.require(wrong == 0, "annulus values");
}

void poisson(Outcome& o) {
    long trials = 0;
    for (long q : {2L, 3L})
        for (int n : {1, 2}) {
            std::mt19937_64 rng(700 + 10 * q + n);
            for (int t = 0; t < 200; ++t) {
                SBProduct phi = random_sb_product(rng, q, n, 3);
                PoissonReport r = poisson_check(phi);
                ++trials;
                o.require(r.equal, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " trial " + std::to_string(t));
            }
        }
    for (long q : {2L, 3L}) {
        SBProduct unit{q, 1, {SBFunction::indicator(q, Place::inf(), 1, 0, 1)}};
        PoissonReport r = poisson_check(complete(unit));
        o.require(r.lhs == Cyclo(static_cast<int>(q), q) && r.equal, "Riemann-Roch sanity case");
    }
    o.detail << trials << " random products over q in {2,3}, n in {1,2}; sanity lhs = q";
}

void family_poisson_check(Outcome& o) {
    long divisors = 0;
    for (int n : {1, 2})
        for (int k = 0; k <= 2; ++k) {
            FamilyReport r = family_poisson(2, k, n, FamilyLevels{0, 1, {0, 1, 2}, {0, 1, 1}}, 800 + k);
            divisors += r.divisors;
            std::string tag = "n=" + std::to_string(n) + " degree " + std::to_string(k);
            o.require(r.divisors == static_cast<long>(r.per_divisor.size()) && r.divisors > 0, tag + " divisors");
            o.require(r.all_equal, tag + " per-divisor Poisson");
            o.require(r.swap_lhs && r.swap_rhs, tag + " summation swap");
            o.require(r.discrepancy.is_zero(), tag + " discrepancy");
        }
    o.detail << divisors << " divisors of degree <= 2 on P^1 over F_2";
}

IntPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3), count(1, 4);
    IntPoly f;
    f.nvars = nvars;
    for (int k = count(rng); k > 0; --k) {
        std::vector<int> e(nvars);
        for (auto& x : e) x = deg(rng);
        f.terms.push_back({coef(rng), e});
    }
    return f;
}

void weights(Outcome& o) {
    const Variety E1 = Variety::elliptic(5, 1), E2 = Variety::elliptic(5, -2);
    const std::vector<Variety> catalog{
        Variety::points(3), Variety::affine(1), Variety::affine(3), Variety::projective(1), Variety::projective(2),
        Variety::gm(), E1, E2, Variety::fermat1(3), Variety::product({Variety::gm(), Variety::affine(1)}),
        Variety::product({E1, Variety::projective(1)}), Variety::disjoint_union({Variety::gm(), Variety::points(2)})};
    for (const auto& X : catalog) o.require(weight(hd_measure(X)) == 2 * X.dimension(), "w = 2 dim on " + X.name());
    const std::vector<std::vector<Variety>> irreducible{
        {Variety::affine(1), Variety::projective(1), Variety::gm(), E1, E2, Variety::fermat1(3)},
        {Variety::affine(2), Variety::projective(2), Variety::product({Variety::gm(), Variety::gm()}),
         Variety::product({E1, Variety::projective(1)}), Variety::product({Variety::projective(1), Variety::projective(1)})}};
    int pairs = 0;
    for (const auto& group : irreducible)
        for (const auto& X : group)
            for (const auto& Y : group) {
                if (&X == &Y) continue;
                auto w = weight(hd_measure(X) - hd_measure(Y));
                o.require(!w || *w <= 2 * X.dimension() - 1, "w(X - Y) for " + X.name() + ", " + Y.name());
                ++pairs;
            }
    std::mt19937_64 rng(9);
    int sums = 0;
    for (long q : {3L, 4L, 5L, 7L})
        for (int t = 0; t < 8; ++t) {
            int nvars = 1 + t % 2;
            AffineSpec X;
            X.nvars = nvars;
            if (t % 4 >= 2) X.equations.push_back(random_poly(rng, nvars, 2));
            if (t % 4 == 3) X.inequations.push_back(IntPoly::variable(nvars, 0));
            IntPoly f = random_poly(rng, nvars, 3);
            Int N = brute_count(Variety::explicit_spec(X), q);
            o.require(abs2_at_most(exp_sum(X, f, q), Rat(N * N)), "|exp_sum|^2 <= #X^2");
            ++sums;
        }
    o.detail << catalog.size() << " classes, " << pairs << " pairs, " << sums << " exponential sums";
}

void coefficient_growth(Outcome& o) {
    const int prec = 14;
    auto p1 = coef_growth(geometric_factor({prec}), 1, 1);
    o.require(p1.size() == 1 && p1[0].dominant, "Z_P1 in case (ii)");
    o.require(p1[0].d0 == 0 && p1[0].degree == 0, "Z_P1 d0 = 0, degree 0");
    ESeries one = ESeries::constant({prec}, EPoly(1));
    auto sq = coef_growth(one, 1, 2);
    o.require(sq.size() == 1 && sq[0].dominant && sq[0].degree == 1, "1/(1-LT)^2 degree 1");
    o.require(sq[0].poly == std::vector<Rat>{1, 1}, "1/(1-LT)^2 polynomial n + 1");
    ESeries M = expand_growth_series(one, 1, 2);
    for (int n = 0; n <= prec; ++n) o.require(M[n] == EPoly(n + 1) * EPoly::L(n), "expansion (n+1) L^n");
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        int a = 1 + t % 3, r = 1 + t % 2;
        ESeries F = ESeries::constant({prec}, EPoly(1));
        std::uniform_int_distribution<int> coef(-2, 2), deg(0, 1);
        for (int i = 1; i <= 3; ++i) F.set({i}, EPoly(coef(rng)) * EPoly::L(deg(rng)));
        std::vector<GrowthReport> reports;
        try {
            reports = coef_growth(F, a, r);
        } catch (const BoundsError&) {
            continue;
        }
        ESeries Z = expand_growth_series(F, a, r);
        for (const auto& g : reports) {
            o.require(g.degree <= r - 1, "degree at most r - 1");
            if (!g.dominant) continue;
            for (int n = g.residue + a * 3; n <= prec; n += a)
                o.require(predicted_top(reports, a, n) == Rat(Z[n].uv_coeff(n + g.d0)), "predicted top coefficient");
        }
    }
    o.detail << "Z_P1: case (ii), d0 = 0, degree 0; 1/(1-LT)^2: n + 1";
}

CompactificationData line_demo() {
    CompactificationData d;
    d.n = 1;
    d.rho = {2};
    d.in_AD = {false};
    d.good = {{0, L, {}, 0}, {1, EPoly(1), {}, 0}};
    return d;
}

void height_demo(Outcome& o) {
    CompactificationData d = line_demo();
    o.require(pole_order(d) == 1, "pole order 1");
    const int prec = 10;
    ESeries local = local_factor_trivial(d, prec);
    ESeries formula = ESeries::constant({prec}, EPoly(1));
    for (int j = 1; j <= prec; ++j) formula.set({j}, EPoly::L(j) - EPoly::L(j - 1));  // (1 - L^-1) L^j
    o.require(local == formula, "local factor, E avatar");
    for (long q : {2L, 3L, 5L}) {
        QSeries expected = QSeries::constant({prec}, 1);
        for (int j = 1; j <= prec; ++j) expected.set({j}, (1 - Rat(1, q)) * rpow(Rat(q), j));
        o.require(at_uv(local, q) == expected, "local factor at q = " + std::to_string(q));
    }
    std::optional<Rat> prev;
    Rat worst = 0;
    for (int dd = 0; dd <= 8; ++dd) {
        Rat norm = Rat(schanuel_oracle(2, dd)) * rpow(Rat(2), -2 * dd);
        if (prev && dd >= 4) {
            Rat dev = norm / *prev - 1;
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
        prev = norm;
    }
    o.require(worst < Rat(1, 20), "consecutive ratios within 5%");
    o.detail << "pole order 1, local factor exact, max ratio deviation for d >= 4: " << worst.get_str();
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void(Outcome&)> run;
};

const std::vector<Criterion> kCriteria{
    {"Howe lemma sweep", 60, howe},
    {"Kapranov rationality for elliptic curves over F_5", 30, kapranov_elliptic},
    {"Euler product equals configuration oracle", 120, euler_oracle},
    {"multiplicativity with signs and the Kapranov inverse", 60, multiplicativity},
    {"Thom-Sebastiani worked example", 1, thom_sebastiani},
    {"annulus integrals", 120, annulus},
    {"Poisson summation", 600, poisson},
    {"Poisson over families and summation swap", 300, family_poisson_check},
    {"weight calculus", 60, weights},
    {"coefficient growth", 10, coefficient_growth},
    {"height zeta demo", 300, height_demo},
};

bool run_one(size_t i) {
    const Criterion& c = kCriteria[i];
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        c.run(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.budget_seconds, "over the time budget");
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << c.name << "): " << o.detail.str();
    if (!o.pass) std::cout << "; first failure: " << o.first_failure;
    std::cout << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s of " << c.budget_seconds << " s]" << std::endl;
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<size_t> chosen;
    for (int i = 1; i < argc; ++i) {
        long k = std::strtol(argv[i], nullptr, 10);
        if (k < 1 || k > static_cast<long>(kCriteria.size())) {
            std::cerr << "criterion must be 1.." << kCriteria.size() << "\n";
            return 2;
        }
        chosen.push_back(static_cast<size_t>(k - 1));
    }
    if (chosen.empty())
        for (size_t i = 0; i < kCriteria.size(); ++i) chosen.push_back(i);
    bool all = true;
    for (size_t i : chosen) all &= run_one(i);
    return all ? 0 : 1;
}
