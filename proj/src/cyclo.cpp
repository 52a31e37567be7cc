#include "mz/cyclo.hpp"

#include <mpfr.h>

#include <sstream>

namespace mz {

Cyclo::Cyclo(int p, const Rat& c) : p_(p), c_(p, Rat(0)) {
    if (p < 2) throw DomainError("cyclotomic order must be a prime");
    c_[0] = c;
}

Cyclo Cyclo::zeta_pow(int p, long e) {
    Cyclo z(p);
    z.add_zeta(e, 1);
    return z;
}

void Cyclo::normalize() {
    if (p_ == 0) return;
    Rat last = c_[p_ - 1];
    if (last != 0)
        for (auto& x : c_) x -= last;
}

void Cyclo::add_zeta(long e, const Rat& s) {
    if (s == 0) return;
    c_[mod(e, p_)] += s;
    normalize();
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.p_ == 0) return *this;
    if (p_ == 0) return *this = o;
    if (p_ != o.p_) throw DomainError("mismatched cyclotomic fields");
    for (int i = 0; i < p_; ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.p_ == 0 || b.p_ == 0) return Cyclo();
    if (a.p_ != b.p_) throw DomainError("mismatched cyclotomic fields");
    int p = a.p_;
    Cyclo r(p);
    for (int i = 0; i < p; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < p; ++j)
            if (b.c_[j] != 0) r.c_[(i + j) % p] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.p_ == 0 || b.p_ == 0) return a.is_zero() && b.is_zero();
    return a.p_ == b.p_ && a.c_ == b.c_;
}

Cyclo Cyclo::rotate(long e) const {
    if (p_ == 0) return *this;
    Cyclo r(p_);
    for (int i = 0; i < p_; ++i) r.c_[mod(i + e, p_)] = c_[i];
    r.normalize();
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (int i = 1; i < p_; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational: " + str());
    return p_ == 0 ? Rat(0) : c_[0];
}

Cyclo Cyclo::conj() const {
    if (p_ == 0) return *this;
    Cyclo r(p_);
    for (int i = 0; i < p_; ++i) r.c_[mod(-i, p_)] = c_[i];
    r.normalize();
    return r;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
    }
    return os.str();
}

namespace {

// Sign of sum_i w_i cos(2 pi i j / p), known to be a nonzero real.
int embedding_sign(const std::vector<Rat>& w, int p, int j) {
    for (mpfr_prec_t prec = 128; prec <= 8192; prec *= 2) {
        mpfr_t acc, term, ang, pi, err, c;
        mpfr_inits2(prec, acc, term, ang, pi, err, c, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(acc, 1);
        mpfr_set_zero(err, 1);
        mpfr_const_pi(pi, MPFR_RNDN);
        for (int i = 0; i < p; ++i) {
            if (w[i] == 0) continue;
            mpfr_mul_si(ang, pi, 2L * ((static_cast<long>(i) * j) % p), MPFR_RNDN);
            mpfr_div_si(ang, ang, p, MPFR_RNDN);
            mpfr_cos(c, ang, MPFR_RNDN);
            mpfr_set_q(term, w[i].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term, term, c, MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
            // Generous per-term error allowance: |w_i| * 2^(8 - prec).
            mpfr_set_q(term, w[i].get_mpq_t(), MPFR_RNDN);
            mpfr_abs(term, term, MPFR_RNDN);
            mpfr_mul_2si(term, term, 8 - static_cast<long>(prec), MPFR_RNDU);
            mpfr_add(err, err, term, MPFR_RNDU);
        }
        int s = 0;
        mpfr_abs(term, acc, MPFR_RNDN);
        if (mpfr_cmp(term, err) > 0) s = mpfr_sgn(acc);
        mpfr_clears(acc, term, ang, pi, err, c, static_cast<mpfr_ptr>(nullptr));
        if (s != 0) return s;
    }
    throw DomainError("could not certify the sign of an algebraic number");
}

}  // namespace

bool abs2_at_most(const Cyclo& z, const Rat& bound) {
    if (z.p() == 0) return bound >= 0;
    Cyclo w = Cyclo(z.p(), bound) - z.norm2();
    if (w.is_zero()) return true;
    for (int j = 1; j < z.p(); ++j)
        if (embedding_sign(w.coords(), z.p(), j) < 0) return false;
    return true;
}

}  // namespace mz
