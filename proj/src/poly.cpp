#include "mz/poly.hpp"

#include <algorithm>
#include <map>

#include "mz/arith.hpp"

namespace mz {

int IntPoly::eval(const GF& f, const std::vector<int>& point) const {
    int acc = 0;
    for (const auto& t : terms) {
        int c = f.from_int(t.coeff);
        if (c == 0) continue;
        int v = c;
        for (int i = 0; i < nvars && v != 0; ++i)
            if (t.exps[i]) v = f.mul(v, f.pow(point[i], t.exps[i]));
        acc = f.add(acc, v);
    }
    return acc;
}

int IntPoly::degree() const {
    int d = -1;
    for (const auto& t : terms) {
        int s = 0;
        for (int e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool IntPoly::is_zero_mod(int p) const {
    std::map<std::vector<int>, long> acc;
    for (const auto& t : terms) acc[t.exps] = mod(acc[t.exps] + t.coeff, p);
    for (const auto& [e, c] : acc)
        if (c != 0) return false;
    return true;
}

IntPoly IntPoly::variable(int nvars, int i) {
    IntPoly r;
    r.nvars = nvars;
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    r.terms.push_back({1, e});
    return r;
}

IntPoly IntPoly::constant(int nvars, long c) {
    IntPoly r;
    r.nvars = nvars;
    r.terms.push_back({c, std::vector<int>(nvars, 0)});
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    r.nvars = std::max(a.nvars, b.nvars);
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) {
            std::vector<int> e(r.nvars, 0);
            for (int i = 0; i < a.nvars; ++i) e[i] += s.exps[i];
            for (int i = 0; i < b.nvars; ++i) e[i] += t.exps[i];
            r.terms.push_back({s.coeff * t.coeff, e});
        }
    return r;
}

bool AffineSpec::contains(const GF& f, const std::vector<int>& point) const {
    for (const auto& e : equations)
        if (e.eval(f, point) != 0) return false;
    for (const auto& g : inequations)
        if (g.eval(f, point) == 0) return false;
    return true;
}

}  // namespace mz
