#include "mz/epoly.hpp"

#include <sstream>

namespace mz {

EPoly::EPoly(long c) {
    if (c != 0) c_[{0, 0}] = c;
}

EPoly::EPoly(const Int& c) {
    if (c != 0) c_[{0, 0}] = c;
}

EPoly EPoly::monomial(int p, int q, const Int& c) {
    EPoly r;
    r.add_term(p, q, c);
    return r;
}

Int EPoly::coeff(int p, int q) const {
    auto it = c_.find({p, q});
    return it == c_.end() ? Int(0) : it->second;
}

void EPoly::add_term(int p, int q, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace({p, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

EPoly& EPoly::operator+=(const EPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k.first, k.second, c);
    return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k.first, k.second, -c);
    return *this;
}

EPoly EPoly::operator-() const {
    EPoly r = *this;
    for (auto& [k, c] : r.c_) c = -c;
    return r;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
    EPoly r;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

EPoly& EPoly::operator*=(const EPoly& o) { return *this = *this * o; }

EPoly EPoly::div_exact(const Int& n) const {
    EPoly r;
    for (const auto& [k, c] : c_) {
        if (c % n != 0) throw DomainError("inexact division of E-polynomial coefficient");
        r.c_[k] = c / n;
    }
    return r;
}

std::optional<int> EPoly::degree() const {
    std::optional<int> d;
    for (const auto& [k, c] : c_) {
        int w = k.first + k.second;
        if (!d || w > *d) d = w;
    }
    return d;
}

bool EPoly::uv_only() const {
    for (const auto& [k, c] : c_)
        if (k.first != k.second) return false;
    return true;
}

Rat EPoly::eval_uv(const Rat& Q) const {
    if (!uv_only()) throw DomainError("class is not a polynomial in uv: " + str());
    Rat s = 0;
    for (const auto& [k, c] : c_) s += Rat(c) * rpow(Q, k.first);
    return s;
}

Rat EPoly::eval(const Rat& x, const Rat& y) const {
    Rat s = 0;
    for (const auto& [k, c] : c_) s += Rat(c) * rpow(x, k.first) * rpow(y, k.second);
    return s;
}

std::string EPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [p, q] = it->first;
        Int c = it->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool unit = (p == 0 && q == 0);
        if (a != 1 || unit) os << a.get_str();
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            os << name;
            if (e != 1) os << "^" << e;
        };
        if (p == q && p != 0) {
            os << "(uv)";
            if (p != 1) os << "^" << p;
        } else {
            var("u", p);
            var("v", q);
        }
    }
    return os.str();
}

EPoly adams(const EPoly& f, int k) {
    if (k <= 0) throw DomainError("Adams operation requires k >= 1");
    EPoly r;
    for (const auto& [key, c] : f.terms()) r.add_term(k * key.first, k * key.second, c);
    return r;
}

EPoly pow(const EPoly& f, unsigned n) {
    EPoly r(1);
    EPoly b = f;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

}  // namespace mz
