#include "mz/lambda.hpp"

namespace mz {

std::vector<EPoly> sympow_all(const EPoly& a, int n) {
    if (n < 0) throw DomainError("negative symmetric power");
    std::vector<EPoly> psi(n + 1), sigma(n + 1);
    for (int k = 1; k <= n; ++k) psi[k] = adams(a, k);
    sigma[0] = EPoly(1);
    for (int m = 1; m <= n; ++m) {
        EPoly acc;
        for (int k = 1; k <= m; ++k) acc += psi[k] * sigma[m - k];
        sigma[m] = acc.div_exact(m);
    }
    return sigma;
}

EPoly sympow(const EPoly& a, int n) { return sympow_all(a, n)[n]; }

ESeries adams(const ESeries& f, int k) {
    ESeries r(f.bound());
    for (const auto& [e, c] : f.terms()) {
        Exps g = e;
        for (auto& x : g) x *= k;
        r.set(g, adams(c, k));
    }
    return r;
}

namespace {

ESeries euler_operator(const ESeries& f) {
    return f.map([](const Exps& e, const EPoly& c) { return c * EPoly(total_degree(e)); });
}

int max_total(const Exps& bound) { return total_degree(bound); }

EPoly unit_inverse(const EPoly& c) {
    if (c == EPoly(1)) return EPoly(1);
    if (c == EPoly(-1)) return EPoly(-1);
    throw DomainError("constant term is not a unit: " + c.str());
}

}  // namespace

ESeries pexp(const ESeries& a) {
    Exps zero(a.nvars(), 0);
    if (!a.coeff(zero).is_zero()) throw DomainError("plethystic exponential needs a zero constant term");
    ESeries da = euler_operator(a);
    ESeries b(a.bound());
    for (int k = 1; k <= max_total(a.bound()); ++k) b += adams(da, k);
    ESeries h(a.bound());
    for (const Exps& n : exponent_box(a.bound())) {
        if (n == zero) {
            h.set(n, EPoly(1));
            continue;
        }
        EPoly acc;
        for (const auto& [j, bj] : b.terms()) {
            Exps l(n.size());
            bool ok = true;
            for (size_t i = 0; i < n.size(); ++i) {
                l[i] = n[i] - j[i];
                if (l[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) acc += bj * h.coeff(l);
        }
        h.set(n, acc.div_exact(total_degree(n)));
    }
    return h;
}

ESeries plog(const ESeries& f) {
    Exps zero(f.nvars(), 0);
    if (f.coeff(zero) != EPoly(1)) throw DomainError("plethystic logarithm needs constant term 1");
    ESeries b = euler_operator(f) * inverse<EPoly>(f, unit_inverse);
    ESeries da(f.bound());
    for (int k = 1; k <= max_total(f.bound()); ++k) {
        int mu = mobius(k);
        if (mu != 0) da += adams(b, k).scaled(EPoly(mu));
    }
    return da.map([](const Exps& e, const EPoly& c) {
        int d = total_degree(e);
        return d == 0 ? EPoly() : c.div_exact(d);
    });
}

ESeries kapranov_zeta(const EPoly& x, int prec) {
    auto sig = sympow_all(x, prec);
    return ESeries::univariate(prec, sig);
}

QSeries exp_series(const QSeries& a) {
    if (a.nvars() != 1) throw DomainError("exp_series is univariate");
    int prec = a.bound()[0];
    if (a[0] != 0) throw DomainError("exponential needs a zero constant term");
    std::vector<Rat> g(prec + 1, 0);
    g[0] = 1;
    for (int n = 1; n <= prec; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += Rat(k) * a[k] * g[n - k];
        g[n] = acc / n;
    }
    return QSeries::univariate(prec, g);
}

ZSeries kapranov_zeta_count(const std::vector<Int>& N, int prec) {
    if (static_cast<int>(N.size()) <= prec) throw BoundsError("not enough point counts for the precision");
    QSeries a(Exps{prec});
    for (int m = 1; m <= prec; ++m) a.set({m}, Rat(N[m]) / m);
    QSeries z = exp_series(a);
    ZSeries out(Exps{prec});
    for (int n = 0; n <= prec; ++n) {
        Rat c = z[n];
        if (c.get_den() != 1) throw DomainError("zeta coefficient is not integral");
        out.set({n}, c.get_num());
    }
    return out;
}

ZSeries kapranov_zeta_count(const Variety& X, long q, int prec) {
    std::vector<Int> N(prec + 1, 0);
    for (int m = 1; m <= prec; ++m) N[m] = count_points(X, q, m);
    return kapranov_zeta_count(N, prec);
}

ZSeries rational_expansion(const std::vector<Int>& num, const std::vector<Int>& den, int prec) {
    if (den.empty() || abs(den[0]) != 1) throw DomainError("denominator must have unit constant term");
    std::vector<Int> out(prec + 1, 0);
    for (int n = 0; n <= prec; ++n) {
        Int acc = n < static_cast<int>(num.size()) ? num[n] : Int(0);
        for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k) acc -= den[k] * out[n - k];
        out[n] = acc * den[0];
    }
    return ZSeries::univariate(prec, out);
}

}  // namespace mz
