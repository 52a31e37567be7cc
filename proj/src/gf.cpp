#include "mz/gf.hpp"

#include <map>
#include <mutex>

#include "mz/arith.hpp"

namespace mz {

namespace {

// Multiply the digit vector by x modulo the monic polynomial with lower
// coefficients `low` (x^k = -sum low[i] x^i).
void times_x(std::vector<int>& v, const std::vector<int>& low, int p) {
    int k = static_cast<int>(v.size());
    int top = v[k - 1];
    for (int i = k - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    for (int i = 0; i < k; ++i) v[i] = static_cast<int>(mod(v[i] - static_cast<long>(top) * low[i], p));
}

int encode(const std::vector<int>& v, int p) {
    int r = 0;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) r = r * p + v[i];
    return r;
}

}  // namespace

GF::GF(int p, int k) : p_(p), k_(k), q_(static_cast<int>(ipow_small(p, k))) {
    if (!is_prime(p) || k < 1) throw DomainError("invalid field parameters");
    if (q_ > (1 << 24)) throw BoundsError("field too large");
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    std::vector<int> low(k, 0);
    // Enumerate monic polynomials by their lower coefficients until one is primitive.
    for (long code = 1; code < q_; ++code) {
        long c = code;
        for (int i = 0; i < k; ++i) {
            low[i] = static_cast<int>(c % p);
            c /= p;
        }
        if (low[0] == 0) continue;
        std::vector<int> v(k, 0);
        v[0] = 1;
        std::vector<int> seen(q_, 0);
        bool ok = true;
        for (int i = 0; i < q_ - 1; ++i) {
            int e = encode(v, p);
            if (seen[e]) {
                ok = false;
                break;
            }
            seen[e] = 1;
            exp_[i] = e;
            times_x(v, low, p);
        }
        if (ok && encode(v, p) == 1) break;
        ok = false;
        if (code == q_ - 1) throw DomainError("no primitive polynomial found");
    }
    for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
    trace_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        int s = 0;
        int b = a;
        for (int i = 0; i < k_; ++i) {
            s = add(s, b);
            b = frobenius(b);
        }
        if (s >= p_) throw DomainError("trace left the prime field");
        trace_[a] = s;
    }
}

int GF::add(int a, int b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return (a + b) % p_;
    int r = 0, m = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * m;
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return r;
}

int GF::neg(int a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    int r = 0, m = 1;
    while (a) {
        int d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * m;
        a /= p_;
        m *= p_;
    }
    return r;
}

int GF::sub(int a, int b) const { return add(a, neg(b)); }

int GF::inv(int a) const {
    if (a == 0) throw DomainError("inverse of zero in finite field");
    int e = log_[a] == 0 ? 0 : q_ - 1 - log_[a];
    return exp_[e];
}

int GF::exp(long e) const { return exp_[mod(e, q_ - 1)]; }

int GF::pow(int a, long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DomainError("zero to a negative power");
        return 0;
    }
    return exp_[mod(static_cast<long>(log_[a]) * (e % (q_ - 1)), q_ - 1)];
}

int GF::from_int(long c) const { return static_cast<int>(mod(c, p_)); }

int GF::frobenius(int a, int j) const {
    if (a == 0) return 0;
    long e = log_[a];
    for (int i = 0; i < j; ++i) e = e * p_ % (q_ - 1);
    return exp_[e];
}

int GF::trace(int a) const { return trace_[a]; }

bool GF::is_square(int a) const {
    if (a == 0 || p_ == 2) return true;
    return log_[a] % 2 == 0;
}

std::shared_ptr<const GF> field(int p, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const GF>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const GF>(p, k);
    cache[key] = f;
    return f;
}

}  // namespace mz
