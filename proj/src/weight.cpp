#include "mz/weight.hpp"

#include <numeric>

#include "mz/gf.hpp"

namespace mz {

namespace {

int weight_or_min(const EPoly& f, int floor) {
    auto w = weight(f);
    return w ? *w : floor;
}

}  // namespace

RadiusEstimate radius(const ESeries& F, int window) {
    if (F.nvars() != 1) throw DomainError("radius is defined for one-variable series");
    int prec = F.bound()[0];
    if (window < 1 || window > prec) throw BoundsError("window exceeds the truncation");
    RadiusEstimate est;
    std::vector<Rat> seen;
    for (int i = prec - window + 1; i <= prec; ++i) {
        auto w = weight(F[i]);
        if (!w) continue;
        Rat r(*w, 2 * i);
        r.canonicalize();
        seen.push_back(r);
        if (!est.value || r > *est.value) est.value = r;
    }
    if (est.value) {
        int hits = 0;
        bool nonincreasing = true;
        for (size_t k = 0; k < seen.size(); ++k) {
            hits += seen[k] == *est.value;
            if (k && seen[k] > seen[k - 1]) nonincreasing = false;
        }
        est.stable = hits >= 2 && nonincreasing;
    }
    return est;
}

ConvergenceReport convergence_check(const ESeries& F, int M, const Rat& c, ConvergenceMode mode) {
    if (F.nvars() != 1) throw DomainError("convergence_check is defined for one-variable series");
    ConvergenceReport rep;
    rep.ok = true;
    for (int i = 1; i <= F.bound()[0]; ++i) {
        auto w = weight(F[i]);
        if (!w) continue;
        bool early = mode == ConvergenceMode::Curve && i <= M;
        if (early) {
            if (*w > 2 * i - 2) rep.ok = false;
            continue;
        }
        Rat slack = (2 * c * i - 1 - *w) / (2 * i);
        if (slack < 0) rep.ok = false;
        if (!rep.delta || slack < *rep.delta) rep.delta = slack;
    }
    return rep;
}

namespace {

// coefficients of C(m + k, k) as a polynomial in m
std::vector<Rat> binomial_poly(int k) {
    std::vector<Rat> p{Rat(1)};
    for (int l = 1; l <= k; ++l) {
        std::vector<Rat> next(p.size() + 1, 0);
        for (size_t j = 0; j < p.size(); ++j) {
            next[j] += p[j] * l;
            next[j + 1] += p[j];
        }
        for (auto& x : next) x /= l;
        p = std::move(next);
    }
    return p;
}

Int falling(long k, int i) {
    Int r = 1;
    for (int t = 0; t < i; ++t) r *= k - t;
    return r;
}

}  // namespace

std::vector<GrowthReport> coef_growth(const ESeries& F, int a, int r) {
    if (F.nvars() != 1) throw DomainError("coef_growth is defined for one-variable series");
    if (a < 1 || r < 1) throw DomainError("a and r must be positive");
    int prec = F.bound()[0];
    if (prec < a) throw BoundsError("numerator shorter than the period");
    std::vector<GrowthReport> out;
    for (int p = 0; p < a; ++p) {
        GrowthReport rep;
        rep.residue = p;
        std::vector<EPoly> g;  // f'_{ak+p}
        for (int j = p; j <= prec; j += a) g.push_back(F[j] * EPoly::L(-j));
        std::vector<EPoly> S(r);
        for (int i = 0; i < r; ++i)
            for (size_t k = 0; k < g.size(); ++k) S[i] += g[k] * EPoly(falling(static_cast<long>(k), i));
        std::optional<int> d0;
        for (int i = 0; i < r; ++i)
            for (const auto& [key, c] : S[i].terms())
                if (key.first == key.second && (!d0 || key.first > *d0)) d0 = key.first;
        if (!d0) {
            out.push_back(rep);
            continue;
        }
        rep.dominant = true;
        rep.d0 = *d0;
        // the neglected tail must sit below weight 2 d0
        for (size_t k = g.size() >= 2 ? g.size() - 2 : 0; k < g.size(); ++k)
            if (g.size() > 1 && weight_or_min(g[k], 2 * rep.d0 - 1) >= 2 * rep.d0)
                throw BoundsError("numerator truncated before its weights decay below 2 d0");
        rep.i0 = -1;
        rep.poly.assign(r, 0);
        for (int i = 0; i < r; ++i) {
            Int top = S[i].uv_coeff(rep.d0);
            if (top == 0) continue;
            if (rep.i0 < 0) rep.i0 = i;
            Rat scale = Rat(top) / Rat(factorial(i));
            if (i % 2) scale = -scale;
            auto bp = binomial_poly(r - i - 1);
            for (size_t j = 0; j < bp.size(); ++j) rep.poly[j] += scale * bp[j];
        }
        while (rep.poly.size() > 1 && rep.poly.back() == 0) rep.poly.pop_back();
        rep.degree = static_cast<int>(rep.poly.size()) - 1;
        out.push_back(rep);
    }
    return out;
}

Rat predicted_top(const std::vector<GrowthReport>& reports, int a, int n) {
    const GrowthReport& rep = reports.at(n % a);
    if (!rep.dominant) return 0;
    Rat m = (n - rep.residue) / a, v = 0, pw = 1;
    for (const Rat& c : rep.poly) {
        v += c * pw;
        pw *= m;
    }
    return v;
}

ESeries expand_growth_series(const ESeries& F, int a, int r) {
    int prec = F.bound()[0];
    ESeries den({prec});
    for (int m = 0; a * m <= prec; ++m) den.set({a * m}, EPoly(binomial(m + r - 1, r - 1)) * EPoly::L(a * m));
    return F * den;
}

void CompactificationData::validate() const {
    if (rho.empty()) throw ParseError("compactification without boundary components");
    if (in_AD.size() != rho.size()) throw ParseError("A_D flags do not match the boundary components");
    for (int r : rho)
        if (r < 2) throw ParseError("rho_alpha must be at least 2");
    if (components() > 16) throw BoundsError("too many boundary components");
    auto check = [&](const StratumTerm& s) {
        if (s.subset >> components()) throw ParseError("stratum refers to an unknown component");
        if (!s.e.empty() && static_cast<int>(s.e.size()) != components())
            throw ParseError("stratum exponent vector has the wrong length");
    };
    for (const auto& s : good) check(s);
    for (const auto& b : bad) {
        if (b.clemens < 1) throw ParseError("Clemens contribution must be at least 1");
        for (const auto& s : b.strata) check(s);
    }
}

int pole_order(const CompactificationData& data) {
    data.validate();
    int r = 0;
    for (int alpha = 0; alpha < data.components(); ++alpha) r += !data.in_AD[alpha];
    for (const auto& b : data.bad) r += b.clemens;
    return r;
}

ESeries local_factor_trivial(const CompactificationData& data, const std::vector<StratumTerm>& strata, int prec) {
    data.validate();
    const int k = data.components();
    Exps bound(k, prec);
    ESeries total(bound);
    unsigned ad_mask = 0;
    for (int alpha = 0; alpha < k; ++alpha)
        if (data.in_AD[alpha]) ad_mask |= 1u << alpha;
    for (const auto& s : strata) {
        if (s.subset & ad_mask) continue;
        int size = __builtin_popcount(s.subset);
        Exps shift(k, 0);
        if (!s.e.empty()) shift = s.e;
        EPoly coeff = s.delta * EPoly::L(s.rho_beta - data.n + size) * pow(1 - EPoly::L(-1), size);
        ESeries term(bound);
        term.set(shift, coeff);
        for (int alpha = 0; alpha < k; ++alpha) {
            if (!(s.subset >> alpha & 1)) continue;
            ESeries geo(bound);
            for (int j = 1; j <= prec; ++j) {
                Exps e(k, 0);
                e[alpha] = j;
                geo.set(e, EPoly::L((data.rho[alpha] - 1) * j));
            }
            term *= geo;
        }
        total += term;
    }
    return total;
}

ESeries local_factor_trivial(const CompactificationData& data, int prec) {
    return local_factor_trivial(data, data.good, prec);
}

namespace {

ESeries collapse(const CompactificationData& data, const ESeries& f, int prec) {
    ESeries out({prec});
    for (const auto& [e, c] : f.terms()) {
        int deg = 0;
        for (int alpha = 0; alpha < data.components(); ++alpha) deg += e[alpha] * data.rho_log(alpha);
        out.add({deg}, c);
    }
    return out;
}

}  // namespace

GlobalZeta global_zeta_trivial(const CompactificationData& data, const Variety& curve, long q, int prec) {
    GlobalZeta g;
    g.r = pole_order(data);
    g.a = 1;
    for (int alpha = 0; alpha < data.components(); ++alpha) g.a = std::lcm(g.a, data.rho_log(alpha));
    Family fam{curve, collapse(data, local_factor_trivial(data, prec), prec), {}};
    if (fam.factor.coeff({0}) != EPoly(1)) throw DomainError("good local factor must have constant term 1");
    for (const auto& b : data.bad) fam.overrides.push_back(collapse(data, local_factor_trivial(data, b.strata, prec), prec));
    g.series_E = euler_product_E(fam);
    g.series_count = euler_product_count(fam, q);
    ESeries polE = ESeries::constant({prec}, EPoly(1));
    polE.set({g.a}, -EPoly::L(g.a));
    QSeries polC = QSeries::constant({prec}, 1);
    polC.set({g.a}, -Rat(ipow(Int(q), g.a)));
    g.numerator_E = g.series_E * power(polE, g.r);
    g.numerator_count = g.series_count * power(polC, g.r);
    return g;
}

namespace {

using Poly = std::vector<int>;  // coefficients over GF, low degree first, no trailing zeros

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b for b monic-normalizable
Poly poly_mod(Poly a, const Poly& b, const GF& f) {
    int lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        int c = f.mul(a.back(), lead_inv);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        trim(a);
    }
    return a;
}

bool coprime(Poly a, Poly b, const GF& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

}  // namespace

Int schanuel_oracle(long q, int d) {
    if (d < 0) throw DomainError("negative height");
    PrimePower pp = prime_power(q);
    if (ipow(Int(q), 2 * d + 1) > 60'000'000) throw BoundsError("coprime-pair enumeration too large");
    const GF& f = *field(pp.p, pp.k);
    long count = 0;
    // a ranges over polynomials of degree <= d, b over monic polynomials of degree <= d
    long na = ipow_small(q, d + 1);
    Poly a(d + 1), b;
    for (int eb = 0; eb <= d; ++eb) {
        long nb = ipow_small(q, eb);
        for (long cb = 0; cb < nb; ++cb) {
            b.assign(eb + 1, 0);
            long x = cb;
            for (int i = 0; i < eb; ++i, x /= q) b[i] = static_cast<int>(x % q);
            b[eb] = 1;
            for (long ca = 0; ca < na; ++ca) {
                long y = ca;
                int deg_a = -1;
                for (int i = 0; i <= d; ++i, y /= q) {
                    a[i] = static_cast<int>(y % q);
                    if (a[i]) deg_a = i;
                }
                if (std::max(deg_a, eb) != d) continue;
                if (deg_a < 0) {
                    count += eb == 0;  // x = 0
                    continue;
                }
                if (coprime(a, b, f)) ++count;
            }
        }
    }
    return count;
}

}  // namespace mz
