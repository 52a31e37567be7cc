#include "mz/fourier.hpp"

#include <algorithm>
#include <functional>

namespace mz {

namespace {

using Pol = std::vector<long>;

void require_prime(long q) {
    if (!is_prime(q)) throw DomainError("the Fourier module works over prime fields");
}

void trim(Pol& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.empty()) a.push_back(0);
}

bool is_zero(const Pol& a) { return a.size() == 1 && a[0] == 0; }

int deg(const Pol& a) { return is_zero(a) ? -1 : static_cast<int>(a.size()) - 1; }

Pol normalized(Pol a, long p) {
    for (auto& x : a) x = mod(x, p);
    trim(a);
    return a;
}

Pol mul(const Pol& a, const Pol& b, long p) {
    Pol r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// a(s + c)
Pol taylor_shift(const Pol& a, long c, long p) {
    Pol r{0};
    for (size_t i = a.size(); i-- > 0;) {
        r = mul(r, Pol{mod(c, p), 1}, p);
        r[0] = (r[0] + a[i]) % p;
    }
    trim(r);
    return r;
}

// leading-zero count, i.e. s-adic valuation of a nonzero polynomial
int low_order(const Pol& a) {
    int e = 0;
    while (a[e] == 0) ++e;
    return e;
}

Pol series_inverse(const Pol& b, int K, long p) {
    Pol inv(K, 0);
    long b0 = inv_mod(b[0], p);
    for (int k = 0; k < K; ++k) {
        long acc = k == 0 ? 1 : 0;
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) acc -= b[j] * inv[k - j];
        inv[k] = mod(acc * b0, p);
    }
    return inv;
}

Pol series_mul(const Pol& a, const Pol& b, int K, long p) {
    Pol r(K, 0);
    for (int i = 0; i < K && i < static_cast<int>(a.size()); ++i)
        if (a[i])
            for (int j = 0; i + j < K && j < static_cast<int>(b.size()); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

Pol poly_mod(Pol a, const Pol& b, long p) {
    long lead = inv_mod(b.back(), p);
    while (deg(a) >= deg(b)) {
        long c = a.back() * lead % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        a.pop_back();
        trim(a);
        if (is_zero(a)) break;
    }
    return a;
}

Pol poly_div_exact(Pol a, const Pol& b, long p) {
    if (deg(a) < deg(b)) return {0};
    Pol qt(a.size() - b.size() + 1, 0);
    long lead = inv_mod(b.back(), p);
    for (size_t k = qt.size(); k-- > 0;) {
        long c = a[k + b.size() - 1] * lead % p;
        qt[k] = c;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] = mod(a[k + i] - c * b[i], p);
    }
    trim(qt);
    return qt;
}

Pol poly_gcd(Pol a, Pol b, long p) {
    while (!is_zero(b)) {
        Pol r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f = s^val * A1 / B1 with A1(0), B1(0) nonzero in the uniformizer s at v
struct LocalForm {
    int val = 0;
    Pol A1, B1;
};

LocalForm local_form(const RationalFunction& f, const Place& v, long p) {
    Pol A = normalized(f.num, p), B = normalized(f.den, p);
    if (is_zero(B)) throw DomainError("rational function with zero denominator");
    LocalForm lf;
    if (v.infinite) {
        lf.val = deg(B) - deg(A);
        lf.A1.assign(A.rbegin(), A.rend());
        lf.B1.assign(B.rbegin(), B.rend());
    } else {
        Pol As = taylor_shift(A, v.c, p), Bs = taylor_shift(B, v.c, p);
        int ea = low_order(As), eb = low_order(Bs);
        lf.val = ea - eb;
        lf.A1.assign(As.begin() + ea, As.end());
        lf.B1.assign(Bs.begin() + eb, Bs.end());
    }
    return lf;
}

}  // namespace

std::string place_name(const Place& v) { return v.infinite ? "inf" : std::to_string(v.c); }

int conductor(const Place& v) { return v.infinite ? 2 : 0; }

int residue_sign(const Place& v) { return v.infinite ? -1 : 1; }

long LocalLevel::size(long q) const {
    if (N < M || n < 1) throw DomainError("level needs M <= N and n >= 1");
    return ipow_small(q, n * width());
}

SBFunction::SBFunction(long q_, Place v, LocalLevel lev) : q(q_), place(v), level(lev) {
    require_prime(q);
    if (!v.infinite && (v.c < 0 || v.c >= q)) throw DomainError("finite place outside F_q");
    if (level.size(q) > 50'000'000) throw BoundsError("Schwartz-Bruhat table too large");
    values.assign(level.size(q), Cyclo(static_cast<int>(q)));
}

SBFunction SBFunction::indicator(long q, Place v, int n, int M, int N) {
    SBFunction f(q, v, {M, N, n});
    for (long i = 0; i < static_cast<long>(f.values.size()); ++i) f.values[i] = Cyclo(static_cast<int>(q), 1);
    return f;
}

long SBFunction::index_of(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != level.n * level.width()) throw DomainError("digit vector of the wrong length");
    long idx = 0;
    for (int d : digits) idx = idx * q + mod(d, q);
    return idx;
}

std::vector<int> SBFunction::digits_of(long index) const {
    std::vector<int> d(level.n * level.width());
    for (size_t k = d.size(); k-- > 0; index /= q) d[k] = static_cast<int>(index % q);
    return d;
}

Cyclo integrate(const SBFunction& phi) {
    Cyclo s(static_cast<int>(phi.q));
    for (const auto& v : phi.values) s += v;
    return s * rpow(Rat(phi.q), -static_cast<long>(phi.level.n) * phi.level.N);
}

SBFunction relevel(const SBFunction& phi, int M2, int N2) {
    const auto& lv = phi.level;
    if (M2 > lv.M || N2 < lv.N) throw DomainError("relevel only coarsens the support and refines the invariance");
    SBFunction out(phi.q, phi.place, {M2, N2, lv.n});
    int W2 = N2 - M2;
    for (long i = 0; i < static_cast<long>(out.values.size()); ++i) {
        auto d2 = out.digits_of(i);
        std::vector<int> d;
        bool inside = true;
        for (int k = 0; k < lv.n; ++k)
            for (int e = M2; e < N2; ++e) {
                int digit = d2[k * W2 + (e - M2)];
                if (e < lv.M && digit) inside = false;
                if (e >= lv.M && e < lv.N) d.push_back(digit);
            }
        if (inside) out.values[i] = phi.at(d);
    }
    return out;
}

SBFunction fourier(const SBFunction& phi) {
    const auto& lv = phi.level;
    const long q = phi.q;
    const int nu = conductor(phi.place), sign = residue_sign(phi.place);
    const int W = lv.width(), axes = lv.n * W;
    std::vector<Cyclo> cur = phi.values;
    const int p = static_cast<int>(q);
    // DFT along each digit axis: x digit a pairs with the dual digit b through zeta^(sign a b)
    long stride = 1;
    for (int ax = axes - 1; ax >= 0; --ax, stride *= q) {
        std::vector<Cyclo> next(cur.size(), Cyclo(p));
        for (long base = 0; base < static_cast<long>(cur.size()); ++base) {
            if ((base / stride) % q != 0) continue;
            for (long b = 0; b < q; ++b) {
                Cyclo acc(p);
                for (long a = 0; a < q; ++a) acc += cur[base + a * stride].rotate(mod(sign * a * b, q));
                next[base + b * stride] = std::move(acc);
            }
        }
        cur = std::move(next);
    }
    SBFunction out(q, phi.place, {nu - lv.N, nu - lv.M, lv.n});
    Rat scale = rpow(Rat(q), -static_cast<long>(lv.n) * lv.N);
    for (long i = 0; i < static_cast<long>(cur.size()); ++i) {
        auto d = phi.digits_of(i);
        // position k in a block holds y_{nu-1-(M+k)}, which sits at W-1-k in the output block
        for (int c = 0; c < lv.n; ++c) std::reverse(d.begin() + c * W, d.begin() + (c + 1) * W);
        out.values[out.index_of(d)] = cur[i] * scale;
    }
    return out;
}

RationalFunction polynomial(std::vector<long> coeffs) {
    RationalFunction f;
    f.num = coeffs.empty() ? Pol{0} : std::move(coeffs);
    return f;
}

std::optional<int> valuation(const RationalFunction& f, const Place& v, long p) {
    if (is_zero(normalized(f.num, p))) return std::nullopt;
    return local_form(f, v, p).val;
}

std::vector<int> laurent(const RationalFunction& f, const Place& v, int lo, int hi, long p) {
    std::vector<int> out(std::max(hi - lo, 0), 0);
    if (is_zero(normalized(f.num, p)) || hi <= lo) {
        if (!is_zero(normalized(f.num, p)) && valuation(f, v, p) < lo) throw DomainError("function outside the support");
        return out;
    }
    LocalForm lf = local_form(f, v, p);
    if (lf.val < lo) throw DomainError("function outside the support");
    int K = hi - lf.val;
    if (K <= 0) return out;
    Pol series = series_mul(lf.A1, series_inverse(lf.B1, K, p), K, p);
    for (int j = std::max(lo, lf.val); j < hi; ++j) out[j - lo] = static_cast<int>(series[j - lf.val]);
    return out;
}

int DivisorP1::degree() const {
    int d = 0;
    for (const auto& [v, m] : mult) d += m;
    return d;
}

std::vector<RationalFunction> rr_space(const DivisorP1& D, long q) {
    require_prime(q);
    std::vector<RationalFunction> basis;
    int degD = D.degree();
    if (degD < 0) return basis;
    Pol zeros{1}, poles{1};
    for (const auto& [v, m] : D.mult) {
        if (v.infinite || m == 0) continue;
        Pol lin{mod(-v.c, q), 1};
        for (int k = 0; k < std::abs(m); ++k) (m < 0 ? zeros : poles) = mul(m < 0 ? zeros : poles, lin, q);
    }
    for (int k = 0; k <= degD; ++k) {
        Pol tk(k + 1, 0);
        tk[k] = 1;
        basis.push_back({mul(tk, zeros, q), poles});
    }
    return basis;
}

SBProduct complete(const SBProduct& phi) {
    require_prime(phi.q);
    SBProduct out = phi;
    bool has_inf = false;
    std::vector<Place> seen;
    for (const auto& f : phi.locals) {
        if (f.q != phi.q || f.level.n != phi.n) throw DomainError("local factor over a different field or dimension");
        if (std::find(seen.begin(), seen.end(), f.place) != seen.end()) throw DomainError("place listed twice");
        seen.push_back(f.place);
        has_inf |= f.place.infinite;
    }
    if (!has_inf) out.locals.push_back(SBFunction::indicator(phi.q, Place::inf(), phi.n, 0, 0));
    return out;
}

DivisorP1 support_divisor(const SBProduct& phi) {
    DivisorP1 D;
    for (const auto& f : complete(phi).locals) D.mult[f.place] = -f.level.M;
    return D;
}

Cyclo evaluate(const SBProduct& phi_in, const std::vector<RationalFunction>& x) {
    SBProduct phi = complete(phi_in);
    const long q = phi.q;
    const int p = static_cast<int>(q);
    if (static_cast<int>(x.size()) != phi.n) throw DomainError("point of the wrong dimension");
    // integrality at every unlisted place: the reduced denominator may only vanish at listed finite places
    for (const auto& xi : x) {
        Pol num = normalized(xi.num, q), den = normalized(xi.den, q);
        if (is_zero(num)) continue;
        Pol g = poly_gcd(num, den, q);
        den = poly_div_exact(den, g, q);
        for (const auto& f : phi.locals) {
            if (f.place.infinite) continue;
            Pol lin{mod(-f.place.c, q), 1};
            while (deg(den) > 0 && is_zero(poly_mod(den, lin, q))) den = poly_div_exact(den, lin, q);
        }
        if (deg(den) > 0) return Cyclo(p);
    }
    Cyclo value(p, 1);
    for (const auto& f : phi.locals) {
        std::vector<int> digits;
        for (const auto& xi : x) {
            auto val = valuation(xi, f.place, q);
            if (val && *val < f.level.M) return Cyclo(p);
            auto d = laurent(xi, f.place, f.level.M, f.level.N, q);
            digits.insert(digits.end(), d.begin(), d.end());
        }
        value = value * f.at(digits);
        if (value.is_zero()) break;
    }
    return value;
}

Cyclo sum_rational(const SBProduct& phi_in) {
    SBProduct phi = complete(phi_in);
    const long q = phi.q;
    const int p = static_cast<int>(q), n = phi.n;
    auto basis = rr_space(support_divisor(phi), q);
    const int dim = static_cast<int>(basis.size());
    const size_t places = phi.locals.size();
    if (dim == 0) {
        Cyclo v(p, 1);
        for (const auto& f : phi.locals) v = v * f.values[0];
        return v;
    }
    if (ipow(Int(q), static_cast<unsigned long>(n) * dim) > 50'000'000)
        throw BoundsError("Riemann-Roch space too large to enumerate");
    // digits[v][k]: Laurent window of basis element k at place v
    std::vector<std::vector<std::vector<int>>> digits(places);
    for (size_t v = 0; v < places; ++v)
        for (const auto& b : basis)
            digits[v].push_back(laurent(b, phi.locals[v].place, phi.locals[v].level.M, phi.locals[v].level.N, q));
    // running digit windows per place and coordinate; every odometer step adds one basis window mod q
    std::vector<std::vector<std::vector<int>>> run(places);
    for (size_t v = 0; v < places; ++v) run[v].assign(n, std::vector<int>(phi.locals[v].level.width(), 0));
    std::vector<int> coef(n * dim, 0);
    std::map<std::vector<long>, long> histogram;
    std::vector<long> key(places);
    while (true) {
        for (size_t v = 0; v < places; ++v) {
            long idx = 0;
            for (int c = 0; c < n; ++c)
                for (int dgt : run[v][c]) idx = idx * q + dgt;
            key[v] = idx;
        }
        ++histogram[key];
        int pos = 0;
        while (pos < n * dim) {
            int c = pos / dim, k = pos % dim;
            for (size_t v = 0; v < places; ++v) {
                auto& w = run[v][c];
                for (size_t e = 0; e < w.size(); ++e) w[e] = static_cast<int>((w[e] + digits[v][k][e]) % q);
            }
            if (++coef[pos] < q) break;
            coef[pos] = 0;
            ++pos;
        }
        if (pos == n * dim) break;
    }
    Cyclo total(p);
    for (const auto& [k, count] : histogram) {
        Cyclo term(p, count);
        for (size_t v = 0; v < places && !term.is_zero(); ++v) term = term * phi.locals[v].values[k[v]];
        total += term;
    }
    return total;
}

SBProduct fourier(const SBProduct& phi) {
    SBProduct out = complete(phi);
    for (auto& f : out.locals) f = fourier(f);
    return out;
}

SBProduct translate(const SBProduct& phi_in, const std::vector<RationalFunction>& a) {
    SBProduct phi = complete(phi_in);
    if (static_cast<int>(a.size()) != phi.n) throw DomainError("translation of the wrong dimension");
    if (evaluate(SBProduct{phi.q, phi.n, [&] {
                     std::vector<SBFunction> ind;
                     for (const auto& f : phi.locals)
                         ind.push_back(SBFunction::indicator(phi.q, f.place, phi.n, f.level.M, f.level.M));
                     return ind;
                 }()},
                 a)
            .is_zero())
        throw DomainError("translation vector outside L(D)^n");
    SBProduct out = phi;
    for (auto& f : out.locals) {
        std::vector<int> shift;
        for (const auto& ai : a) {
            auto d = laurent(ai, f.place, f.level.M, f.level.N, phi.q);
            shift.insert(shift.end(), d.begin(), d.end());
        }
        SBFunction g = f;
        for (long i = 0; i < static_cast<long>(g.values.size()); ++i) {
            auto d = f.digits_of(i);
            for (size_t k = 0; k < d.size(); ++k) d[k] = static_cast<int>(mod(d[k] - shift[k], phi.q));
            g.values[i] = f.at(d);
        }
        f = std::move(g);
    }
    return out;
}

PoissonReport poisson_check(const SBProduct& phi) {
    PoissonReport rep;
    rep.lhs = sum_rational(phi);
    rep.rhs = sum_rational(fourier(phi)) * rpow(Rat(phi.q), phi.n);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

namespace {

Cyclo random_value(std::mt19937_64& rng, int p) {
    std::uniform_int_distribution<int> pick(0, 5), small(-2, 2), power(0, p - 1);
    Cyclo v(p);
    int kind = pick(rng);
    if (kind <= 1) return v;
    v.add_zeta(0, small(rng));
    if (kind == 5) v.add_zeta(power(rng), small(rng));
    return v;
}

void fill_random(SBFunction& f, std::mt19937_64& rng) {
    for (auto& v : f.values) v = random_value(rng, static_cast<int>(f.q));
}

long sum_size(const SBProduct& phi) {
    int d = support_divisor(phi).degree();
    if (d < 0) return 1;
    Int s = ipow(Int(phi.q), static_cast<unsigned long>(phi.n) * (d + 1));
    return s > 1'000'000'000 ? 1'000'000'000 : s.get_si();
}

}  // namespace

SBProduct random_sb_product(std::mt19937_64& rng, long q, int n, int level_bound, SamplerBudget budget) {
    require_prime(q);
    std::uniform_int_distribution<int> coin(0, 1), level(-level_bound, level_bound);
    std::uniform_int_distribution<long> point(0, q - 1);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        std::vector<Place> places{Place::inf()};
        int finite = coin(rng) + coin(rng);
        for (int k = 0; k < finite; ++k) {
            Place v = Place::finite(point(rng));
            if (std::find(places.begin(), places.end(), v) == places.end()) places.push_back(v);
        }
        SBProduct phi{q, n, {}};
        bool ok = true;
        for (const Place& v : places) {
            int M = level(rng), N = level(rng);
            if (M > N) std::swap(M, N);
            LocalLevel lv{M, N, n};
            if (lv.size(q) > budget.max_table) {
                ok = false;
                break;
            }
            SBFunction f(q, v, lv);
            fill_random(f, rng);
            phi.locals.push_back(std::move(f));
        }
        if (!ok) continue;
        if (sum_size(phi) > budget.max_sum || sum_size(fourier(phi)) > budget.max_sum) continue;
        return phi;
    }
    throw BoundsError("sampler budget admits no product");
}

namespace {

// coefficient of t^(md-1) in P(t^m u) u^-d, computed mod t^K with K >= md
long annulus_residue(const Pol& u, int m, int d, const AnnulusPoly& P, int K, long p) {
    Pol w = series_inverse(u, K, p), acc(K, 0);
    Pol ud(K, 0);
    ud[0] = 1;
    for (int k = 0; k < d; ++k) ud = series_mul(ud, w, K, p);
    Pol upow(K, 0);
    upow[0] = 1;
    for (size_t k = 0; k < P.coeffs.size(); ++k) {
        int shift = m * static_cast<int>(k);
        if (shift < K) {
            Pol term = series_mul(normalized(P.coeffs[k], p), upow, K - shift, p);
            for (int i = 0; i + shift < K && i < static_cast<int>(term.size()); ++i) acc[i + shift] = (acc[i + shift] + term[i]) % p;
        }
        upow = series_mul(upow, u, K, p);
    }
    return series_mul(acc, ud, K, p)[m * d - 1];
}

// sum over u mod t^K with u_0 != 0 of zeta^(c(u))
Cyclo unit_sum(int m, int d, const AnnulusPoly& P, long q, int K) {
    const int p = static_cast<int>(q);
    std::vector<long> hist(q, 0);
    Pol u(K, 0);
    long total = ipow_small(q, K);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < K; ++i, c /= q) u[i] = c % q;
        if (u[0] == 0) continue;
        ++hist[annulus_residue(u, m, d, P, K, q)];
    }
    Cyclo s(p);
    for (long e = 0; e < q; ++e) s.add_zeta(e, hist[e]);
    return s;
}

}  // namespace

Cyclo annulus_sum(int m, int d, const AnnulusPoly& P, long q, int N) {
    require_prime(q);
    if (m < 1 || d < 1) throw DomainError("annulus needs m, d >= 1");
    if (P.coeffs.empty() || P.coeffs[0].empty() || mod(P.coeffs[0][0], q) == 0) throw DomainError("P(0) must be a unit");
    const int K = m * d;
    if (N < K + m) throw BoundsError("truncation too coarse to determine the residue");
    const int p = static_cast<int>(q);
    // the residue depends on u = x / t^m only through u mod t^K; every such class has q^(N-m-K) lifts
    int digits = N - m;
    if (ipow(Int(q), digits) <= 200'000) return unit_sum(m, d, P, q, digits) * rpow(Rat(q), -N);
    if (ipow(Int(q), K) <= 20'000'000) return unit_sum(m, d, P, q, K) * rpow(Rat(q), -m - K);
    // the top digit of u enters the residue linearly with coefficient -d P(0) u_0^(-d-1)
    if (K >= 2 && d % q != 0) return Cyclo(p);
    throw BoundsError("annulus enumeration too large");
}

AnnulusResult annulus_integral(int m, int d, const AnnulusPoly& P, long q) {
    AnnulusResult r;
    r.N = m * d + m + 2;
    r.value = annulus_sum(m, d, P, q, r.N);
    r.value_next = annulus_sum(m, d, P, q, r.N + 1);
    r.stable = r.value == r.value_next;
    return r;
}

namespace {

std::vector<std::vector<int>> effective_divisors(int points, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(points, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == points - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int j = left; j >= 0; --j) {
            cur[i] = j;
            rec(i + 1, left - j);
        }
    };
    rec(0, k);
    return out;
}

Place rational_point(long q, int i) { return i == q ? Place::inf() : Place::finite(i); }

// Sum over the union lattice of the pointwise sums.
Cyclo swapped_sum(const std::vector<SBProduct>& family) {
    const SBProduct& first = family.front();
    DivisorP1 big;
    for (const auto& phi : family)
        for (const auto& [v, m] : support_divisor(phi).mult) {
            auto it = big.mult.find(v);
            if (it == big.mult.end())
                big.mult[v] = m;
            else
                it->second = std::max(it->second, m);
        }
    auto basis = rr_space(big, first.q);
    const int dim = static_cast<int>(basis.size()), n = first.n;
    const long q = first.q;
    Cyclo total(static_cast<int>(q));
    std::vector<int> coef(n * dim, 0);
    Int count = ipow(Int(q), static_cast<unsigned long>(n) * dim);
    if (count > 2'000'000) throw BoundsError("summation lattice too large");
    for (long code = 0; code < count.get_si(); ++code) {
        long c = code;
        std::vector<RationalFunction> x;
        for (int i = 0; i < n; ++i) {
            RationalFunction xi;
            xi.num = {0};
            xi.den = dim ? basis[0].den : Pol{1};
            for (int k = 0; k < dim; ++k, c /= q) {
                long ck = c % q;
                if (!ck) continue;
                Pol term = basis[k].num;
                for (auto& t : term) t = t * ck % q;
                if (term.size() > xi.num.size()) xi.num.resize(term.size(), 0);
                for (size_t e = 0; e < term.size(); ++e) xi.num[e] = (xi.num[e] + term[e]) % q;
            }
            trim(xi.num);
            x.push_back(std::move(xi));
        }
        for (const auto& phi : family) total += evaluate(phi, x);
    }
    return total;
}

}  // namespace

SBProduct family_member(long q, int n, const FamilyLevels& levels, const std::vector<int>& multiplicity,
                        std::uint64_t seed) {
    require_prime(q);
    if (static_cast<long>(multiplicity.size()) != q + 1) throw DomainError("multiplicity vector must cover P^1(F_q)");
    SBProduct phi{q, n, {}};
    for (int i = 0; i <= q; ++i) {
        int j = multiplicity[i];
        if (j < 0 || j >= static_cast<int>(levels.M.size()) || j >= static_cast<int>(levels.N.size()))
            throw DomainError("no level recorded for this multiplicity");
        LocalLevel lv{levels.alpha - levels.M[j], levels.beta + levels.N[j], n};
        SBFunction f(q, rational_point(q, i), lv);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        std::mt19937_64 rng(seq);
        fill_random(f, rng);
        phi.locals.push_back(std::move(f));
    }
    return phi;
}

FamilyReport family_poisson(long q, int k, int n, const FamilyLevels& levels, std::uint64_t seed) {
    require_prime(q);
    if (k < 0) throw DomainError("negative degree");
    FamilyReport rep;
    rep.discrepancy = Cyclo(static_cast<int>(q));
    std::vector<SBProduct> members, duals;
    Cyclo lhs_total(static_cast<int>(q)), rhs_total(static_cast<int>(q));
    for (const auto& mult : effective_divisors(static_cast<int>(q) + 1, k)) {
        SBProduct phi = family_member(q, n, levels, mult, seed);
        PoissonReport pr = poisson_check(phi);
        rep.all_equal &= pr.equal;
        rep.discrepancy += pr.lhs - pr.rhs;
        lhs_total += pr.lhs;
        rhs_total += pr.rhs;
        rep.per_divisor.emplace_back(mult, pr);
        duals.push_back(fourier(phi));
        members.push_back(std::move(phi));
    }
    rep.divisors = static_cast<long>(members.size());
    rep.swap_lhs = swapped_sum(members) == lhs_total;
    rep.swap_rhs = swapped_sum(duals) * rpow(Rat(q), n) == rhs_total;
    return rep;
}

}  // namespace mz
