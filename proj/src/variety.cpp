#include "mz/variety.hpp"

#include <numeric>
#include <sstream>

namespace mz {

namespace {

constexpr long kEnumerationCap = 20'000'000;

Int field_size(long q, int m) { return ipow(Int(q), m); }

const GF& ext_field(long q, int m) {
    PrimePower pp = prime_power(q);
    return *field(pp.p, pp.k * m);
}

long checked_points(long Q, int n) {
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= Q;
        if (total > kEnumerationCap) throw BoundsError("enumeration exceeds the brute-force cap");
    }
    return total;
}

}  // namespace

namespace {

Variety make(VarKind kind, int n = 0) {
    Variety v;
    v.kind = kind;
    v.n = n;
    return v;
}

}  // namespace

Variety Variety::affine(int n) { return make(VarKind::Affine, n); }
Variety Variety::projective(int n) { return make(VarKind::Projective, n); }
Variety Variety::gm() { return make(VarKind::Gm, 1); }
Variety Variety::points(long k) {
    Variety v = make(VarKind::Points);
    v.count = k;
    return v;
}
Variety Variety::two_point() { return make(VarKind::TwoPoint); }
Variety Variety::curve(long q0, std::vector<long> lpoly) {
    if (lpoly.empty() || lpoly[0] != 1 || lpoly.size() % 2 == 0)
        throw ParseError("L-polynomial must be 1 + c1 t + ... + c_2g t^2g");
    Variety v = make(VarKind::Curve);
    v.q0 = q0;
    v.lpoly = std::move(lpoly);
    return v;
}
Variety Variety::elliptic(long q0, long a) {
    Variety v = make(VarKind::Elliptic);
    v.q0 = q0;
    v.a = a;
    v.lpoly = {1, a, q0};
    return v;
}
Variety Variety::weierstrass(std::array<long, 5> coeffs) {
    Variety v = make(VarKind::Weierstrass);
    v.weier = coeffs;
    return v;
}
Variety Variety::fermat0(int n) { return make(VarKind::Fermat0, n); }
Variety Variety::fermat1(int n) { return make(VarKind::Fermat1, n); }
Variety Variety::product(std::vector<Variety> parts) {
    Variety v = make(VarKind::Product);
    v.parts = std::move(parts);
    return v;
}
Variety Variety::disjoint_union(std::vector<Variety> parts) {
    Variety v = make(VarKind::Union);
    v.parts = std::move(parts);
    return v;
}
Variety Variety::explicit_spec(AffineSpec spec) {
    Variety v = make(VarKind::Explicit);
    v.spec = std::move(spec);
    return v;
}

std::string Variety::name() const {
    std::ostringstream os;
    auto join = [&](const char* sep) {
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? sep : "") << parts[i].name();
    };
    switch (kind) {
        case VarKind::Affine: os << "A^" << n; break;
        case VarKind::Projective: os << "P^" << n; break;
        case VarKind::Gm: os << "Gm"; break;
        case VarKind::Points: os << count << "pt"; break;
        case VarKind::TwoPoint: os << "E~"; break;
        case VarKind::Curve: os << "curve(q=" << q0 << ",g=" << genus() << ")"; break;
        case VarKind::Elliptic: os << "elliptic(q=" << q0 << ",a=" << a << ")"; break;
        case VarKind::Weierstrass:
            os << "weierstrass[" << weier[0] << "," << weier[1] << "," << weier[2] << "," << weier[3] << ","
               << weier[4] << "]";
            break;
        case VarKind::Fermat0: os << "F0^" << n; break;
        case VarKind::Fermat1: os << "F1^" << n; break;
        case VarKind::Product: os << "("; join(" x "); os << ")"; break;
        case VarKind::Union: os << "("; join(" + "); os << ")"; break;
        case VarKind::Explicit: os << "explicit(" << spec.nvars << " vars)"; break;
    }
    return os.str();
}

int Variety::dimension() const {
    switch (kind) {
        case VarKind::Affine:
        case VarKind::Projective: return n;
        case VarKind::Gm: return 1;
        case VarKind::Points: return count > 0 ? 0 : -1;
        case VarKind::TwoPoint: return 0;
        case VarKind::Curve:
        case VarKind::Elliptic:
        case VarKind::Weierstrass:
        case VarKind::Fermat0:
        case VarKind::Fermat1: return 1;
        case VarKind::Product: {
            int d = 0;
            for (const auto& p : parts) {
                int e = p.dimension();
                if (e < 0) return -1;
                d += e;
            }
            return d;
        }
        case VarKind::Union: {
            int d = -1;
            for (const auto& p : parts) d = std::max(d, p.dimension());
            return d;
        }
        case VarKind::Explicit: break;
    }
    throw DomainError("dimension unknown for " + name());
}

int Variety::genus() const {
    switch (kind) {
        case VarKind::Curve: return static_cast<int>(lpoly.size() - 1) / 2;
        case VarKind::Elliptic:
        case VarKind::Weierstrass: return 1;
        case VarKind::Fermat0: return 0;
        case VarKind::Fermat1: return (n - 1) * (n - 2) / 2;
        default: throw DomainError("genus requested for a non-curve: " + name());
    }
}

EPoly hd_measure(const Variety& X) {
    switch (X.kind) {
        case VarKind::Affine: return EPoly::L(X.n);
        case VarKind::Projective: {
            EPoly r;
            for (int i = 0; i <= X.n; ++i) r += EPoly::L(i);
            return r;
        }
        case VarKind::Gm: return EPoly::L() - 1;
        case VarKind::Points: return EPoly(X.count);
        case VarKind::TwoPoint: return EPoly(2);
        case VarKind::Curve:
        case VarKind::Elliptic:
        case VarKind::Weierstrass: {
            Int g = X.genus();
            return 1 - EPoly::monomial(1, 0, g) - EPoly::monomial(0, 1, g) + EPoly::L();
        }
        case VarKind::Fermat0: return EPoly(X.n) * (EPoly::L() - 1);
        case VarKind::Fermat1: {
            Int g = X.genus();
            return 1 - EPoly::monomial(1, 0, g) - EPoly::monomial(0, 1, g) + EPoly::L() - 3L * X.n;
        }
        case VarKind::Product: {
            EPoly r(1);
            for (const auto& p : X.parts) r *= hd_measure(p);
            return r;
        }
        case VarKind::Union: {
            EPoly r;
            for (const auto& p : X.parts) r += hd_measure(p);
            return r;
        }
        case VarKind::Explicit: break;
    }
    throw DomainError("unsupported variety for the Hodge-Deligne measure: " + X.name());
}

std::vector<Int> lpoly_power_sums(const std::vector<long>& lpoly, int M) {
    // Inverse roots alpha_i of sum c_k t^k = prod (1 - alpha_i t): e_k = (-1)^k c_k.
    int deg = static_cast<int>(lpoly.size()) - 1;
    auto e = [&](int k) -> Int { return k > deg ? Int(0) : Int((k % 2 ? -1 : 1) * lpoly[k]); };
    std::vector<Int> s(M + 1, 0);
    for (int m = 1; m <= M; ++m) {
        Int acc = 0;
        for (int i = 1; i < m; ++i) acc += ((i - 1) % 2 ? -1 : 1) * e(i) * s[m - i];
        acc += ((m - 1) % 2 ? -1 : 1) * m * e(m);
        s[m] = acc;
    }
    return s;
}

Int weierstrass_discriminant(const std::array<long, 5>& w) {
    Int a1 = w[0], a2 = w[1], a3 = w[2], a4 = w[3], a6 = w[4];
    Int b2 = a1 * a1 + 4 * a2;
    Int b4 = 2 * a4 + a1 * a3;
    Int b6 = a3 * a3 + 4 * a6;
    Int b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

Int weierstrass_points(const std::array<long, 5>& w, const GF& f) {
    int Q = f.q();
    int a1 = f.from_int(w[0]), a2 = f.from_int(w[1]), a3 = f.from_int(w[2]), a4 = f.from_int(w[3]),
        a6 = f.from_int(w[4]);
    // Root-count tables obtained by enumerating the field once.
    std::vector<int> sqrt_count(Q, 0), as_count(Q, 0);
    for (int y = 0; y < Q; ++y) {
        sqrt_count[f.mul(y, y)]++;
        as_count[f.add(f.mul(y, y), y)]++;
    }
    int four = f.from_int(4);
    long total = 1;  // point at infinity
    for (int x = 0; x < Q; ++x) {
        int x2 = f.mul(x, x);
        int rhs = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
        int b = f.add(f.mul(a1, x), a3);
        if (f.p() != 2) {
            total += sqrt_count[f.add(f.mul(b, b), f.mul(four, rhs))];
        } else if (b == 0) {
            total += sqrt_count[rhs];
        } else {
            total += as_count[f.mul(rhs, f.inv(f.mul(b, b)))];
        }
    }
    return total;
}

Int weierstrass_points_naive(const std::array<long, 5>& w, const GF& f) {
    int Q = f.q();
    checked_points(Q, 2);
    int a1 = f.from_int(w[0]), a2 = f.from_int(w[1]), a3 = f.from_int(w[2]), a4 = f.from_int(w[3]),
        a6 = f.from_int(w[4]);
    long total = 1;
    for (int x = 0; x < Q; ++x) {
        int x2 = f.mul(x, x);
        int rhs = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
        for (int y = 0; y < Q; ++y) {
            int lhs = f.add(f.mul(y, y), f.add(f.mul(f.mul(a1, x), y), f.mul(a3, y)));
            if (lhs == rhs) ++total;
        }
    }
    return total;
}

std::array<long, 5> find_weierstrass(long q, long a) {
    if (!is_prime(q)) throw DomainError("elliptic models are searched over prime fields only");
    const GF& f = *field(static_cast<int>(q), 1);
    Int target = Int(q) + 1 + a;
    std::array<long, 5> w{};
    long total = ipow_small(q, 5);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 4; i >= 0; --i) {
            w[i] = c % q;
            c /= q;
        }
        Int disc = weierstrass_discriminant(w);
        if (disc % Int(q) == 0) continue;
        if (weierstrass_points(w, f) == target) return w;
    }
    throw DomainError("no elliptic curve over F_" + std::to_string(q) + " with a = " + std::to_string(a));
}

namespace {

Int fermat0_closed(int n, const Int& Q) {
    Int g;
    Int Qm1 = Q - 1;
    mpz_gcd_ui(g.get_mpz_t(), Qm1.get_mpz_t(), static_cast<unsigned long>(n));
    Int logm1 = (Q % 2 == 0) ? Int(0) : Qm1 / 2;
    if (logm1 % g != 0) return 0;
    return Qm1 * g;
}

long count_fermat_brute(int n, bool one, const GF& f) {
    int Q = f.q();
    checked_points(Q, 2);
    long total = 0;
    std::vector<int> pw(Q);
    for (int x = 0; x < Q; ++x) pw[x] = f.pow(x, n);
    int rhs = one ? 1 : 0;
    for (int x = 1; x < Q; ++x)
        for (int y = 1; y < Q; ++y)
            if (f.add(pw[x], pw[y]) == rhs) ++total;
    return total;
}

long count_explicit(const AffineSpec& spec, const GF& f) {
    checked_points(f.q(), spec.nvars);
    long total = 0;
    for_each_point(f, spec.nvars, [&](const std::vector<int>& pt) {
        if (spec.contains(f, pt)) ++total;
    });
    return total;
}

}  // namespace

Int count_points(const Variety& X, long q, int m) {
    prime_power(q);
    if (m < 1) throw DomainError("extension degree must be positive");
    Int Q = field_size(q, m);
    switch (X.kind) {
        case VarKind::Affine: return ipow(Q, X.n);
        case VarKind::Projective: {
            Int s = 0;
            for (int i = 0; i <= X.n; ++i) s += ipow(Q, i);
            return s;
        }
        case VarKind::Gm: return Q - 1;
        case VarKind::Points: return X.count;
        case VarKind::TwoPoint: return 2;
        case VarKind::Curve:
        case VarKind::Elliptic: {
            if (q != X.q0) throw DomainError("curve is defined over F_" + std::to_string(X.q0));
            return Q + 1 - lpoly_power_sums(X.lpoly, m)[m];
        }
        case VarKind::Weierstrass: {
            PrimePower pp = prime_power(q);
            Int N1 = weierstrass_points(X.weier, *field(pp.p, pp.k));
            long a = Int(N1 - q - 1).get_si();
            return Q + 1 - lpoly_power_sums({1, a, q}, m)[m];
        }
        case VarKind::Fermat0: return fermat0_closed(X.n, Q);
        case VarKind::Fermat1:
            if (X.n == 1) return Q - 2;
            if (X.n == 2) {
                if (Q % 2 == 0) return Q - 2;
                return Q % 4 == 1 ? Q - 5 : Q - 3;
            }
            return count_fermat_brute(X.n, true, ext_field(q, m));
        case VarKind::Product: {
            Int r = 1;
            for (const auto& p : X.parts) r *= count_points(p, q, m);
            return r;
        }
        case VarKind::Union: {
            Int r = 0;
            for (const auto& p : X.parts) r += count_points(p, q, m);
            return r;
        }
        case VarKind::Explicit: return count_explicit(X.spec, ext_field(q, m));
    }
    throw DomainError("unknown variety");
}

Int brute_count(const Variety& X, long q, int m) {
    const GF& f = ext_field(q, m);
    long Q = f.q();
    switch (X.kind) {
        case VarKind::Affine: {
            long total = 0;
            checked_points(Q, X.n);
            for_each_point(f, X.n, [&](const std::vector<int>&) { ++total; });
            return total;
        }
        case VarKind::Projective: {
            long total = 0;
            checked_points(Q, X.n + 1);
            for_each_point(f, X.n + 1, [&](const std::vector<int>& v) {
                for (int c : v) {
                    if (c == 0) continue;
                    if (c == 1) ++total;
                    return;
                }
            });
            return total;
        }
        case VarKind::Gm: {
            long total = 0;
            for (int x = 0; x < Q; ++x)
                if (x != 0) ++total;
            return total;
        }
        case VarKind::Points: return X.count;
        case VarKind::TwoPoint: {
            long total = 0;
            for (int x = 0; x < Q; ++x)
                if (f.sub(f.mul(x, x), x) == 0) ++total;
            return total;
        }
        case VarKind::Curve: throw DomainError("no explicit model for a curve given by its L-polynomial");
        case VarKind::Elliptic: {
            if (q != X.q0) throw DomainError("curve is defined over F_" + std::to_string(X.q0));
            return weierstrass_points(find_weierstrass(X.q0, X.a), f);
        }
        case VarKind::Weierstrass: return weierstrass_points(X.weier, f);
        case VarKind::Fermat0: return count_fermat_brute(X.n, false, f);
        case VarKind::Fermat1: return count_fermat_brute(X.n, true, f);
        case VarKind::Product: {
            Int r = 1;
            for (const auto& p : X.parts) r *= brute_count(p, q, m);
            return r;
        }
        case VarKind::Union: {
            Int r = 0;
            for (const auto& p : X.parts) r += brute_count(p, q, m);
            return r;
        }
        case VarKind::Explicit: return count_explicit(X.spec, f);
    }
    throw DomainError("unknown variety");
}

std::vector<Int> census_from_counts(const std::vector<Int>& N) {
    int D = static_cast<int>(N.size()) - 1;
    std::vector<Int> a(D + 1, 0);
    for (int d = 1; d <= D; ++d) {
        Int s = 0;
        for (long e : divisors(d)) s += mobius(e) * N[d / e];
        if (s % d != 0) throw DomainError("point counts are not those of a variety");
        a[d] = s / d;
        if (a[d] < 0) throw DomainError("negative closed-point census");
    }
    return a;
}

std::vector<Int> census(const Variety& X, long q, int D) {
    std::vector<Int> N(D + 1, 0);
    for (int m = 1; m <= D; ++m) N[m] = count_points(X, q, m);
    return census_from_counts(N);
}

std::vector<Int> brute_census(const Variety& X, long q, int D) {
    std::vector<Int> N(D + 1, 0);
    for (int m = 1; m <= D; ++m) N[m] = brute_count(X, q, m);
    return census_from_counts(N);
}

Int cycles_of_degree(const std::vector<Int>& census, int n) {
    if (static_cast<int>(census.size()) <= n && n > 0) throw BoundsError("census shorter than the degree");
    std::vector<Int> poly(n + 1, 0);
    poly[0] = 1;
    for (int d = 1; d < static_cast<int>(census.size()) && d <= n; ++d) {
        std::vector<Int> next(n + 1, 0);
        for (int i = 0; i <= n; ++i) {
            if (poly[i] == 0) continue;
            for (int j = 0; i + d * j <= n; ++j) next[i + d * j] += poly[i] * multichoose(census[d], j);
        }
        poly = std::move(next);
    }
    return poly[n];
}

Cyclo exp_sum(const AffineSpec& X, const IntPoly& f, long q) {
    PrimePower pp = prime_power(q);
    const GF& F = *field(pp.p, pp.k);
    checked_points(F.q(), X.nvars);
    std::vector<long> by_trace(pp.p, 0);
    for_each_point(F, X.nvars, [&](const std::vector<int>& pt) {
        if (X.contains(F, pt)) by_trace[F.trace(f.eval(F, pt))]++;
    });
    Cyclo r(pp.p);
    for (int c = 0; c < pp.p; ++c) r.add_zeta(c, by_trace[c]);
    return r;
}

Rat eval_symmetric(const EPoly& f, const Rat& e1, const Rat& e2) {
    auto power_sum = [&](int k) {
        Rat s0 = 2, s1 = e1;
        if (k == 0) return s0;
        for (int i = 2; i <= k; ++i) {
            Rat s2 = e1 * s1 - e2 * s0;
            s0 = s1;
            s1 = s2;
        }
        return s1;
    };
    Rat r = 0;
    for (const auto& [key, c] : f.terms()) {
        auto [p, q] = key;
        if (p < q) continue;
        if (p == q) {
            r += Rat(c) * rpow(e2, p);
            continue;
        }
        if (f.coeff(q, p) != c) throw DomainError("E-polynomial is not symmetric in u and v");
        r += Rat(c) * rpow(e2, q) * power_sum(p - q);
    }
    return r;
}

}  // namespace mz
