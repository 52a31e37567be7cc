#pragma once

#include <vector>

#include "mz/epoly.hpp"
#include "mz/series.hpp"
#include "mz/variety.hpp"

namespace mz {

using ESeries = Series<EPoly>;
using ZSeries = Series<Int>;
using QSeries = Series<Rat>;

// sigma^n through n sigma^n = sum_{k=1}^n adams(a,k) sigma^(n-k).
EPoly sympow(const EPoly& a, int n);
// sigma^0 .. sigma^n in one pass.
std::vector<EPoly> sympow_all(const EPoly& a, int n);

// Adams operation on a series: acts on u, v and multiplies every t-exponent by k.
ESeries adams(const ESeries& f, int k);

// Plethystic exponential and logarithm: Exp(A) = exp(sum_k adams(A,k)/k) for A
// without constant term; Log is its inverse on series with constant term 1.
ESeries pexp(const ESeries& a);
ESeries plog(const ESeries& f);

ESeries kapranov_zeta(const EPoly& x, int prec);
// Counting side: exp(sum_m N_m t^m / m), checked to be integral.
ZSeries kapranov_zeta_count(const std::vector<Int>& N, int prec);
ZSeries kapranov_zeta_count(const Variety& X, long q, int prec);

// Ordinary exponential of a rational series without constant term.
QSeries exp_series(const QSeries& a);

// Expansion of a rational function num/den in one variable up to prec.
ZSeries rational_expansion(const std::vector<Int>& num, const std::vector<Int>& den, int prec);

}  // namespace mz
