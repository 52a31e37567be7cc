#include "mz/euler.hpp"

#include <functional>

#include "mz/partitions.hpp"

namespace mz {

namespace {

int max_bound(const Exps& b) {
    int m = 0;
    for (int x : b) m = std::max(m, x);
    return m;
}

void check_family(const Family& F) {
    Exps zero(F.factor.nvars(), 0);
    if (F.factor.nvars() == 0) throw DomainError("local factor without variables");
    if (F.factor.coeff(zero) != EPoly(1)) throw DomainError("generic local factor must have constant term 1");
    for (const auto& o : F.overrides)
        if (o.bound() != F.factor.bound()) throw DomainError("truncation inconsistency between local factors");
}

QSeries product_of(const std::vector<QSeries>& fs, const Exps& bound) {
    QSeries r = QSeries::constant(bound, 1);
    for (const auto& f : fs) r *= f;
    return r;
}

}  // namespace

QSeries at_uv(const ESeries& f, const Rat& Q) {
    return f.map([&](const Exps&, const EPoly& c) { return c.eval_uv(Q); });
}

ESeries euler_product_E(const Family& F) {
    check_family(F);
    EPoly X = hd_measure(F.base) - static_cast<long>(F.overrides.size());
    ESeries r = pexp(plog(F.factor).scaled(X));
    for (const auto& o : F.overrides) r *= o;
    return r;
}

QSeries euler_product_count(const Family& F, long q) {
    check_family(F);
    const Exps& bound = F.factor.bound();
    int D = max_bound(bound);
    std::vector<Int> a = census(F.base, q, std::max(D, 1));
    a[1] -= static_cast<long>(F.overrides.size());
    if (a[1] < 0) throw DomainError("more marked points than rational points on the base");
    QSeries r = QSeries::constant(bound, 1);
    for (int d = 1; d <= D; ++d) {
        if (a[d] == 0) continue;
        QSeries local = at_uv(F.factor, ipow(Int(q), d)).dilate(d);
        r *= power(local, a[d].get_ui());
    }
    for (const auto& o : F.overrides) r *= at_uv(o, q);
    return r;
}

std::vector<Int> closed_points(const Variety& base, long q, int D) {
    bool line = base.kind == VarKind::Affine && base.n == 1;
    bool proj = base.kind == VarKind::Projective && base.n == 1;
    bool torus = base.kind == VarKind::Gm;
    PrimePower pp = prime_power(q);
    if (!(line || proj || torus) || ipow(Int(q), D) > 4'000'000) return census(base, q, D);
    std::vector<Int> out(D + 1, 0);
    for (int d = 1; d <= D; ++d) {
        const GF& f = *field(pp.p, pp.k * d);
        long exact = 0;
        for (int x = torus ? 1 : 0; x < f.q(); ++x) {
            int j = 1;
            while (f.frobenius(x, pp.k * j) != x) ++j;
            if (j == d) ++exact;
        }
        out[d] = exact / d;
    }
    if (proj) out[1] += 1;
    return out;
}

OracleResult config_oracle(const Family& F, long q, const Exps& n, long cap) {
    check_family(F);
    if (static_cast<int>(n.size()) != F.factor.nvars()) throw DomainError("exponent vector of the wrong length");
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] < 0 || n[i] > F.factor.bound()[i]) throw BoundsError("exponent outside the truncation");
    int D = std::max(max_bound(n), 1);
    std::vector<Int> pts = closed_points(F.base, q, D);
    // Flat list of closed points: (degree, marked index or -1)
    struct Point {
        int deg;
        int marked;
    };
    std::vector<Point> points;
    long marked = static_cast<long>(F.overrides.size());
    if (pts[1] < marked) throw DomainError("more marked points than rational points on the base");
    for (int d = 1; d <= D; ++d)
        for (Int k = 0; k < pts[d]; ++k) {
            int m = -1;
            if (d == 1 && k < marked) m = static_cast<int>(k.get_si());
            points.push_back({d, m});
        }
    // Fibre values at a point of degree d: coefficient of the local factor at uv = q^d.
    std::map<std::pair<int, int>, QSeries> fibre;
    auto fibre_of = [&](const Point& p) -> const QSeries& {
        auto key = std::make_pair(p.deg, p.marked);
        auto it = fibre.find(key);
        if (it == fibre.end()) {
            const ESeries& src = p.marked >= 0 ? F.overrides[p.marked] : F.factor;
            it = fibre.emplace(key, at_uv(src, ipow(Int(q), p.deg))).first;
        }
        return it->second;
    };
    std::vector<Exps> labels;
    for (const Exps& e : exponent_box(F.factor.bound()))
        if (total_degree(e) > 0) labels.push_back(e);
    OracleResult res;
    res.value = 0;
    Exps rest = n;
    // Points not carrying a label contribute their constant term.
    std::vector<Rat> const_prefix(points.size() + 1, 1);
    Exps zero(n.size(), 0);
    for (size_t i = points.size(); i-- > 0;) const_prefix[i] = const_prefix[i + 1] * fibre_of(points[i]).coeff(zero);
    std::function<void(size_t, const Rat&)> rec = [&](size_t i, const Rat& acc) {
        if (acc == 0) return;
        if (total_degree(rest) == 0) {
            if (++res.configurations > cap) throw BoundsError("configuration count exceeds the cap");
            res.value += acc * const_prefix[i];
            return;
        }
        if (i == points.size()) return;
        const Point& p = points[i];
        const QSeries& fib = fibre_of(p);
        rec(i + 1, acc * fib.coeff(zero));
        for (const Exps& lab : labels) {
            bool fits = true;
            for (size_t k = 0; k < n.size(); ++k)
                if (lab[k] * p.deg > rest[k]) fits = false;
            if (!fits) continue;
            Rat v = fib.coeff(lab);
            if (v == 0) continue;
            for (size_t k = 0; k < n.size(); ++k) rest[k] -= lab[k] * p.deg;
            rec(i + 1, acc * v);
            for (size_t k = 0; k < n.size(); ++k) rest[k] += lab[k] * p.deg;
        }
    };
    rec(0, Rat(1));
    return res;
}

bool cut_and_paste_check(const ESeries& f, const Variety& X, const Variety& U, const Variety& Y, long q) {
    Family fx{X, f, {}}, fu{U, f, {}}, fy{Y, f, {}};
    bool count = euler_product_count(fx, q) == euler_product_count(fu, q) * euler_product_count(fy, q);
    bool hodge = euler_product_E(fx) == euler_product_E(fu) * euler_product_E(fy);
    return count && hodge;
}

namespace {

ESeries twist(const ESeries& f, const Exps& m) {
    return f.map([&](const Exps& e, const EPoly& c) {
        int w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += m[i] * e[i];
        return c * EPoly::L(w);
    });
}

}  // namespace

bool totaro_check(const Family& F, const Exps& m, long q) {
    if (static_cast<int>(m.size()) != F.factor.nvars()) throw DomainError("weight vector of the wrong length");
    Family G = F;
    G.factor = twist(F.factor, m);
    for (auto& o : G.overrides) o = twist(o, m);
    ESeries lhs_e = twist(euler_product_E(F), m);
    QSeries lhs_c = euler_product_count(F, q).map([&](const Exps& e, const Rat& c) -> Rat {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += m[i] * e[i];
        return c * rpow(Rat(q), w);
    });
    return lhs_e == euler_product_E(G) && lhs_c == euler_product_count(G, q);
}

bool mult_check(const Family& F, const Family& G, long q) {
    if (F.overrides.size() != G.overrides.size()) throw DomainError("families mark different point sets");
    Family H = F;
    H.factor = F.factor * G.factor;
    for (size_t i = 0; i < H.overrides.size(); ++i) H.overrides[i] = F.overrides[i] * G.overrides[i];
    bool hodge = euler_product_E(H) == euler_product_E(F) * euler_product_E(G);
    bool count = euler_product_count(H, q) == euler_product_count(F, q) * euler_product_count(G, q);
    return hodge && count;
}

std::vector<std::vector<std::vector<int>>> fibre_census(const Cover& c, long q, int D) {
    std::vector<std::vector<std::vector<int>>> out(D + 1);
    if (c.kind == CoverKind::Trivial) {
        if (c.sheets < 1) throw DomainError("a trivial cover needs at least one sheet");
        auto a = census(c.base, q, D);
        for (int d = 1; d <= D; ++d)
            for (Int k = 0; k < a[d]; ++k) out[d].push_back(std::vector<int>(c.sheets, 1));
        return out;
    }
    if (c.base.kind != VarKind::Gm) throw DomainError("the squaring cover is defined over Gm");
    PrimePower pp = prime_power(q);
    if (pp.p == 2) throw DomainError("the squaring cover needs odd characteristic");
    if (ipow(Int(q), D) > 4'000'000) throw BoundsError("field too large for the fibre census");
    for (int d = 1; d <= D; ++d) {
        const GF& f = *field(pp.p, pp.k * d);
        std::vector<char> seen(f.q(), 0);
        for (int a = 1; a < f.q(); ++a) {
            if (seen[a]) continue;
            int j = 0, x = a;
            do {
                seen[x] = 1;
                x = f.frobenius(x, pp.k);
                ++j;
            } while (x != a);
            if (j != d) continue;
            if (f.is_square(a))
                out[d].push_back({1, 1});
            else
                out[d].push_back({2});
        }
    }
    return out;
}

Variety total_space(const Cover& c) {
    if (c.kind == CoverKind::Trivial) return Variety::product({c.base, Variety::points(c.sheets)});
    return Variety::gm();
}

bool double_product_check(const Cover& c, const ESeries& f, long q) {
    Family whole{total_space(c), f, {}};
    QSeries rhs = euler_product_count(whole, q);
    const Exps& bound = f.bound();
    int D = std::max(max_bound(bound), 1);
    auto fib = fibre_census(c, q, D);
    std::vector<QSeries> locals;
    for (int d = 1; d <= D; ++d)
        for (const auto& fibre : fib[d]) {
            QSeries g = QSeries::constant(bound, 1);
            for (int rel : fibre) g *= at_uv(f, ipow(Int(q), d * rel)).dilate(rel);
            locals.push_back(g.dilate(d));
        }
    return product_of(locals, bound) == rhs;
}

bool sym_minus_check(const EPoly& Y, int m) {
    if (m < 0) throw DomainError("negative symmetric power");
    auto sig = sympow_all(Y, m);
    EPoly rhs;
    for (const auto& mu : compositions(m)) {
        EPoly term = (mu.size() % 2) ? EPoly(-1) : EPoly(1);
        for (int part : mu) term *= sig[part];
        rhs += term;
    }
    return sympow(-Y, m) == rhs;
}

ESeries const_term_product(const Family& F) {
    Family rest = F;
    rest.overrides.clear();
    Exps zero(F.factor.nvars(), 0);
    check_family(rest);
    EPoly X = hd_measure(F.base) - static_cast<long>(F.overrides.size());
    ESeries unmarked = pexp(plog(F.factor).scaled(X));
    const size_t k = F.overrides.size();
    if (k > 20) throw BoundsError("too many marked points");
    ESeries total(F.factor.bound());
    for (unsigned long E = 0; E < (1ul << k); ++E) {
        ESeries term = unmarked;
        for (size_t v = 0; v < k; ++v) {
            const ESeries& o = F.overrides[v];
            EPoly c0 = o.coeff(zero);
            if (E >> v & 1) {
                ESeries nonconst = o;
                nonconst.set(zero, EPoly());
                term *= nonconst;
            } else {
                term = term.scaled(c0);
            }
        }
        total += term;
    }
    return total;
}

ESeries geometric_factor(const Exps& bound) {
    ESeries r(bound);
    for (const Exps& e : exponent_box(bound)) r.set(e, EPoly(1));
    return r;
}

ESeries one_plus(const Exps& bound, const std::vector<std::pair<Exps, EPoly>>& terms) {
    ESeries r = ESeries::constant(bound, EPoly(1));
    for (const auto& [e, c] : terms) r.add(e, c);
    return r;
}

}  // namespace mz
