// Copyright 2026 The ovaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference implementations used only by tests. None of these call into the
// library's FFT, convolution or estimation code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace ovaug::testing {

using cplx = std::complex<double>;

inline std::vector<double> white_noise(std::size_t n, std::uint64_t seed, double sigma = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, sigma);
  std::vector<double> x(n);
  for (auto& v : x) v = dist(rng);
  return x;
}

inline std::vector<double> sine(std::size_t n, double freq, int rate, double amp = 1.0, double phase = 0.0) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = amp * std::sin(2.0 * std::numbers::pi * freq * static_cast<double>(i) / rate + phase);
  }
  return x;
}

/// One-sided DFT by direct summation, sum_n x[n] exp(-j 2 pi k n / N).
inline std::vector<cplx> naive_dft(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    cplx acc{};
    for (std::size_t i = 0; i < n; ++i) {
      const double a = -2.0 * std::numbers::pi * static_cast<double>((k * i) % n) / static_cast<double>(n);
      acc += x[i] * cplx(std::cos(a), std::sin(a));
    }
    out[k] = acc;
  }
  return out;
}

/// Frequency response of an FIR on an N-point grid, bins 0..N/2.
inline std::vector<cplx> fir_response(std::span<const double> h, std::size_t n_fft) {
  std::vector<cplx> out(n_fft / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    cplx acc{};
    for (std::size_t i = 0; i < h.size(); ++i) {
      const double a = -2.0 * std::numbers::pi * static_cast<double>(k * i) / static_cast<double>(n_fft);
      acc += h[i] * cplx(std::cos(a), std::sin(a));
    }
    out[k] = acc;
  }
  return out;
}

/// y[n] = sum_k h[k] x[n-k], n < x.size().
inline std::vector<double> direct_convolution(std::span<const double> x, std::span<const double> h) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t k = 0; k < h.size() && k <= n; ++k) y[n] += h[k] * x[n - k];
  }
  return y;
}

inline double relative_rms_error(std::span<const double> ref, std::span<const double> got, std::size_t from,
                                 std::size_t to) {
  double err = 0.0;
  double pow = 0.0;
  for (std::size_t i = from; i < to; ++i) {
    err += (ref[i] - got[i]) * (ref[i] - got[i]);
    pow += ref[i] * ref[i];
  }
  return std::sqrt(err / pow);
}

inline double correlation(std::span<const double> a, std::span<const double> b) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

inline double rms_of(std::span<const double> x, std::size_t from, std::size_t to) {
  double acc = 0.0;
  for (std::size_t i = from; i < to; ++i) acc += x[i] * x[i];
  return std::sqrt(acc / static_cast<double>(to - from));
}

/// One-sample Kolmogorov-Smirnov statistic against U[lo, hi].
inline double ks_statistic_uniform(std::vector<double> xs, double lo, double hi) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = std::clamp((xs[i] - lo) / (hi - lo), 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Asymptotic KS p-value, Q(sqrt(n) D) with the Stephens small-sample correction.
inline double ks_p_value(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = 2.0 * ((j % 2) ? 1.0 : -1.0) * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

/// Exact two-sided binomial test p-value (sum of outcomes no more likely than k).
inline double binomial_two_sided_p(std::size_t k, std::size_t n, double p) {
  auto log_pmf = [&](std::size_t i) {
    return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) + i * std::log(p) +
           (n - i) * std::log1p(-p);
  };
  const double ref = log_pmf(k);
  double total = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double lp = log_pmf(i);
    if (lp <= ref + 1e-9) total += std::exp(lp);
  }
  return std::min(1.0, total);
}

/// Upper-tail chi-square p-value via the regularized incomplete gamma function.
inline double chi_square_p_value(double stat, double dof) {
  // Q(a, x) with a = dof/2, x = stat/2, by series or continued fraction.
  const double a = dof / 2.0;
  const double x = stat / 2.0;
  if (x <= 0.0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  double b = x + 1.0 - a, c = 1.0 / 1e-300, d = 1.0 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

/// Decaying-cosine FIR used by the recovery tests: h[n] = 0.8^n cos(0.35 n).
inline std::vector<double> test_fir(std::size_t taps = 32, double decay = 0.8, double omega = 0.35) {
  std::vector<double> h(taps);
  for (std::size_t n = 0; n < taps; ++n) h[n] = std::pow(decay, static_cast<double>(n)) * std::cos(omega * n);
  return h;
}

inline double db(double ratio) { return 20.0 * std::log10(ratio); }

}  // namespace ovaug::testing
