#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mz/arith.hpp"

namespace mz {

using Exps = std::vector<int>;

template <class R>
bool is_zero_value(const R& r) {
    if constexpr (requires { r.is_zero(); })
        return r.is_zero();
    else
        return r == 0;
}

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

// All exponent vectors 0 <= e <= bound, ordered by total degree then lexicographically.
std::vector<Exps> exponent_box(const Exps& bound);

// Truncated power series in several variables; coefficients with some
// exponent above the per-variable bound are dropped.
template <class R>
class Series {
public:
    Series() = default;
    explicit Series(Exps bound) : bound_(std::move(bound)) {}

    static Series constant(Exps bound, const R& c) {
        Series s(std::move(bound));
        s.set(Exps(s.nvars(), 0), c);
        return s;
    }
    // Single-variable series from a coefficient list, truncated at prec.
    static Series univariate(int prec, const std::vector<R>& coeffs) {
        Series s(Exps{prec});
        for (int i = 0; i < static_cast<int>(coeffs.size()) && i <= prec; ++i) s.set({i}, coeffs[i]);
        return s;
    }

    int nvars() const { return static_cast<int>(bound_.size()); }
    const Exps& bound() const { return bound_; }
    const std::map<Exps, R>& terms() const { return c_; }

    bool in_range(const Exps& e) const {
        for (int i = 0; i < nvars(); ++i)
            if (e[i] < 0 || e[i] > bound_[i]) return false;
        return true;
    }

    R coeff(const Exps& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? R{} : it->second;
    }
    R operator[](int n) const { return coeff(Exps{n}); }

    void set(const Exps& e, const R& v) {
        if (!in_range(e)) return;
        if (is_zero_value(v))
            c_.erase(e);
        else
            c_[e] = v;
    }
    void add(const Exps& e, const R& v) {
        if (!in_range(e) || is_zero_value(v)) return;
        auto [it, fresh] = c_.try_emplace(e, v);
        if (!fresh) {
            it->second = it->second + v;
            if (is_zero_value(it->second)) c_.erase(it);
        }
    }

    Series& operator+=(const Series& o) {
        check(o);
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o);
        for (const auto& [e, v] : o.c_) add(e, R{} - v);
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series r(bound_);
        for (const auto& [e, v] : c_) r.set(e, R{} - v);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        a.check(b);
        Series r(a.bound_);
        Exps e(a.nvars());
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) {
                bool ok = true;
                for (int i = 0; i < a.nvars(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > a.bound_[i]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) r.add(e, va * vb);
            }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series scaled(const R& s) const {
        Series r(bound_);
        for (const auto& [e, v] : c_) r.set(e, s * v);
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.bound_ == b.bound_ && a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // t_i -> t_i^d for all i.
    Series dilate(int d) const {
        Series r(bound_);
        for (const auto& [e, v] : c_) {
            Exps f = e;
            for (auto& x : f) x *= d;
            r.set(f, v);
        }
        return r;
    }

    // Applies fn to every coefficient together with its exponent.
    template <class Fn>
    auto map(Fn&& fn) const {
        using S = decltype(fn(Exps{}, R{}));
        Series<S> r(bound_);
        for (const auto& [e, v] : c_) r.set(e, fn(e, v));
        return r;
    }

    Series truncated(const Exps& bound) const {
        Series r(bound);
        for (const auto& [e, v] : c_) r.set(e, v);
        return r;
    }

private:
    void check(const Series& o) const {
        if (bound_ != o.bound_) throw DomainError("truncation inconsistency between series");
    }
    Exps bound_;
    std::map<Exps, R> c_;
};

// Inverse of a series whose constant term is a unit; inv_const inverts it.
template <class R>
Series<R> inverse(const Series<R>& f, const std::function<R(const R&)>& inv_const) {
    Exps zero(f.nvars(), 0);
    R c0 = f.coeff(zero);
    R ic = inv_const(c0);
    Series<R> g(f.bound());
    for (const Exps& n : exponent_box(f.bound())) {
        if (n == zero) {
            g.set(n, ic);
            continue;
        }
        R acc{};
        for (const auto& [e, v] : f.terms()) {
            if (e == zero) continue;
            Exps d(n.size());
            bool ok = true;
            for (size_t i = 0; i < n.size(); ++i) {
                d[i] = n[i] - e[i];
                if (d[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) acc = acc + v * g.coeff(d);
        }
        g.set(n, R{} - ic * acc);
    }
    return g;
}

template <class R>
Series<R> power(const Series<R>& f, unsigned long n) {
    Series<R> r = Series<R>::constant(f.bound(), R(1));
    Series<R> b = f;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

}  // namespace mz
