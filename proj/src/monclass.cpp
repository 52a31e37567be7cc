#include "mz/monclass.hpp"

#include <sstream>

namespace mz {

Rat reduce_alpha(const Rat& alpha) {
    // floor of alpha, then shift into (-1, 0]
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), alpha.get_num_mpz_t(), alpha.get_den_mpz_t());
    Rat r = alpha - Rat(fl);  // in [0, 1)
    if (r != 0) r -= 1;
    return r;
}

MonClass::MonClass(long c) : MonClass(EPoly(c)) {}

MonClass::MonClass(const EPoly& f) {
    if (!f.is_zero()) c_[Rat(0)] = f;
}

MonClass MonClass::at(const Rat& alpha, const EPoly& f) {
    MonClass m;
    m.add(alpha, f);
    return m;
}

EPoly MonClass::part(const Rat& alpha) const {
    auto it = c_.find(reduce_alpha(alpha));
    return it == c_.end() ? EPoly() : it->second;
}

EPoly MonClass::total() const {
    EPoly r;
    for (const auto& [a, f] : c_) r += f;
    return r;
}

void MonClass::add(const Rat& alpha, const EPoly& f) {
    if (f.is_zero()) return;
    Rat key = reduce_alpha(alpha);
    EPoly& slot = c_[key];
    slot += f;
    if (slot.is_zero()) c_.erase(key);
}

MonClass& MonClass::operator+=(const MonClass& o) {
    for (const auto& [a, f] : o.c_) add(a, f);
    return *this;
}

MonClass& MonClass::operator-=(const MonClass& o) {
    for (const auto& [a, f] : o.c_) add(a, -f);
    return *this;
}

MonClass MonClass::operator-() const {
    MonClass r;
    for (const auto& [a, f] : c_) r.c_[a] = -f;
    return r;
}

MonClass operator*(const MonClass& a, const MonClass& b) {
    MonClass r;
    for (const auto& [x, f] : a.c_)
        for (const auto& [y, g] : b.c_) r.add(x + y, f * g);
    return r;
}

std::string MonClass::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << "; ";
        first = false;
        os << "[" << it->first.get_str() << "] " << it->second.str();
    }
    return os.str();
}

MonClass twisted_product(const MonClass& a, const MonClass& b) {
    MonClass r;
    for (const auto& [alpha, f] : a.parts())
        for (const auto& [beta, g] : b.parts()) {
            EPoly prod = f * g;
            if (alpha == 0 || beta == 0) {
                r.add(alpha + beta, prod);
                continue;
            }
            Rat s = alpha + beta;
            int dp = 0, dq = 0;
            if (s > -1) {
                dq = 1;
            } else if (s == -1) {
                dp = 1;
                dq = 1;
            } else {
                dp = 1;
            }
            r.add(s, prod * EPoly::monomial(dp, dq));
        }
    return r;
}

std::optional<int> weight(const EPoly& a) { return a.degree(); }

std::optional<int> weight(const MonClass& a) {
    std::optional<int> w;
    for (const auto& [alpha, f] : a.parts()) {
        auto d = f.degree();
        if (!d) continue;
        int x = *d + (alpha == 0 ? 0 : 1);
        if (!w || x > *w) w = x;
    }
    return w;
}

}  // namespace mz
