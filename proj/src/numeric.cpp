#include "cppgen/numeric.hpp"

#include <cmath>
#include <limits>

#include "cppgen/errors.hpp"

namespace cppgen {

namespace {

constexpr int kExactBinomialLimit = 60;
__extension__ typedef unsigned __int128 uint128;
constexpr double kTailRelTol = 1e-18;
// Direct differences are accepted while they lose fewer than ~3 digits.
constexpr double kMaxCancellation = 1e3;

}  // namespace

double harmonic(int k) {
  if (k < 0) throw DomainError("harmonic: k >= 0 required");
  double h = 0.0;
  for (int j = 1; j <= k; ++j) h += 1.0 / j;
  return h;
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (n <= kExactBinomialLimit) {
    if (k > n - k) k = n - k;
    uint128 r = 1;
    for (int i = 1; i <= k; ++i) {
      r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<double>(r);
  }
  return std::exp(log_binomial(n, k));
}

double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return -std::numeric_limits<double>::infinity();
  }
  if (n <= kExactBinomialLimit) return std::log(binomial(n, k));
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_series_tail_naive(int k, double y, double one_minus_y) {
  double s = -std::log(one_minus_y);
  double yi = 1.0;
  for (int i = 1; i < k; ++i) {
    yi *= y;
    s -= yi / i;
  }
  return s;
}

double log_series_tail_series(int k, double y) {
  if (y == 0.0) return 0.0;
  double term_pow = std::pow(y, k);
  double sum = 0.0;
  for (long i = k;; ++i) {
    const double term = term_pow / static_cast<double>(i);
    sum += term;
    if (term <= kTailRelTol * sum || term == 0.0) break;
    term_pow *= y;
  }
  return sum;
}

double log_series_tail(int k, double y, double one_minus_y) {
  if (k < 1) throw DomainError("log_series_tail: k >= 1 required");
  if (!(y >= 0.0) || !(one_minus_y > 0.0)) {
    throw DomainError("log_series_tail: y in [0,1) required");
  }
  if (y == 0.0) return 0.0;
  // The direct difference loses about log10(total / difference) digits;
  // accept it while that factor stays below kMaxCancellation.
  const double total = -std::log(one_minus_y);
  const double direct = log_series_tail_naive(k, y, one_minus_y);
  if (direct * kMaxCancellation > total) return direct;
  return log_series_tail_series(k, y);
}

namespace {

void check_I_args(int k, int l, double x) {
  if (l < 0 || l > 2) throw DomainError("integral_I: l must be 0, 1 or 2");
  if (k < l || (l == 1 && k < 1) || (l == 2 && k < 2)) {
    throw DomainError("integral_I: unsupported (k, l)");
  }
  if (!(x >= 0.0)) throw DomainError("integral_I: x >= 0 required");
}

// sum_{i > k} (i-k)/i * y^i, the positive series for I_{k,0}.
double I0_series(int k, double y) {
  double yi = std::pow(y, k + 1);
  double sum = 0.0;
  for (long i = k + 1;; ++i) {
    const double term = yi * static_cast<double>(i - k) / static_cast<double>(i);
    sum += term;
    if (term <= kTailRelTol * sum || term == 0.0) break;
    yi *= y;
  }
  return sum;
}

}  // namespace

double integral_I_raw(int k, int l, double x) {
  check_I_args(k, l, x);
  const double lg = std::log1p(x);
  switch (l) {
    case 0: {
      double s = x - k * lg;
      for (int j = 1; j <= k - 1; ++j) {
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        s += sign / j * binomial(k, j + 1) * (1.0 - std::pow(1.0 + x, -j));
      }
      return s;
    }
    case 1: {
      double s = lg;
      for (int j = 1; j <= k - 1; ++j) {
        const double sign = (j % 2 == 1) ? -1.0 : 1.0;
        s += sign / j * binomial(k - 1, j) * (1.0 - std::pow(1.0 + x, -j));
      }
      return s;
    }
    default:
      return std::pow(x / (1.0 + x), k - 1) / (k - 1);
  }
}

// With y = t/(1+t): I_{k,2} = Y^{k-1}/(k-1), I_{k,1} = L_k(Y) and
// I_{k,0} = Y^k (1+x) - k L_k(Y) = sum_{i>k} (i-k)/i Y^i.
double integral_I(int k, int l, double x) {
  check_I_args(k, l, x);
  const double y = x / (1.0 + x);
  const double one_minus_y = 1.0 / (1.0 + x);
  switch (l) {
    case 0: {
      if (k == 0) return x;
      const double lead = std::pow(y, k) * (1.0 + x);
      const double diff = lead - k * log_series_tail(k, y, one_minus_y);
      if (diff * kMaxCancellation >= lead) return diff;
      return I0_series(k, y);
    }
    case 1:
      return log_series_tail(k, y, one_minus_y);
    default:
      return std::pow(y, k - 1) / (k - 1);
  }
}

ExtendedReal integral_J(int k, int l, double x) {
  if (k < l) throw DomainError("integral_J: k >= l required");
  if (!(x >= 0.0)) throw DomainError("integral_J: x >= 0 required");
  if (l < 2) return ExtendedReal::infinity();
  const double y = x / (1.0 + x);
  // coefficient c_j = (j+1)...(j+l-2) / ((k-1)...(k-l+1))
  double c = 1.0 / (k - l + 1);
  for (int m = 1; m <= l - 2; ++m) c *= static_cast<double>(m) / (k - m);
  double yj = 1.0;
  double sum = 0.0;
  for (int j = 0; j <= k - l; ++j) {
    sum += c * yj;
    c *= static_cast<double>(j + l - 1) / static_cast<double>(j + 1);
    yj *= y;
  }
  return ExtendedReal::finite(sum * std::pow(1.0 + x, 1 - l));
}

}  // namespace cppgen
