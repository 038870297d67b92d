#pragma once

// Independent reference implementations used as test oracles. Everything here
// is deliberately written as plain double-precision loops, separate from the
// library code paths it checks.

#include "tabforecast/tensor.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

inline std::vector<double> random_vec(size_t n, uint64_t seed, double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

// --------------------------------------------------------------------------
// Central finite differences against an analytic gradient.
// f() must re-evaluate the scalar loss from the current contents of `param`.
// Returns the max relative error over all elements.
// --------------------------------------------------------------------------
inline double fd_max_rel_err(const std::function<double()>& f,
                             tabforecast::nn::Tensor<double>& param,
                             const std::vector<double>& analytic,
                             double h = 1e-5) {
    double worst = 0.0;
    double* p = param.data();
    for (size_t i = 0; i < param.size(); ++i) {
        const double keep = p[i];
        p[i] = keep + h;
        const double fp = f();
        p[i] = keep - h;
        const double fm = f();
        p[i] = keep;
        const double fd = (fp - fm) / (2.0 * h);
        const double g = analytic[i];
        const double denom = std::max({std::fabs(fd), std::fabs(g), 1e-6});
        worst = std::max(worst, std::fabs(fd - g) / denom);
    }
    return worst;
}

// --------------------------------------------------------------------------
// Direct O(T^2) DFT magnitudes for frequencies 1..T/2, averaged over the d
// columns of a [T,d] row-major buffer.
// --------------------------------------------------------------------------
inline std::vector<double> dft_amplitudes(const std::vector<double>& x, int T, int d) {
    std::vector<double> amp(static_cast<size_t>(T / 2), 0.0);
    for (int f = 1; f <= T / 2; ++f) {
        double acc = 0.0;
        for (int c = 0; c < d; ++c) {
            std::complex<double> s(0.0, 0.0);
            for (int t = 0; t < T; ++t)
                s += x[static_cast<size_t>(t) * d + c] *
                     std::polar(1.0, -2.0 * M_PI * f * t / T);
            acc += std::abs(s);
        }
        amp[f - 1] = acc / d;
    }
    return amp;
}

// Top-k frequency selection rule: amplitudes below `zero_thresh` count as
// zero; rank by amplitude descending, ties and zeros toward the lower
// frequency. amp[i] corresponds to frequency i+1.
inline std::vector<int> topk_frequencies(const std::vector<double>& amp, int k, double zero_thresh) {
    std::vector<int> order(amp.size());
    for (size_t i = 0; i < amp.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double aa = amp[a] <= zero_thresh ? 0.0 : amp[a];
        const double ab = amp[b] <= zero_thresh ? 0.0 : amp[b];
        if (aa != ab) return aa > ab;
        return a < b;
    });
    std::vector<int> freqs;
    for (int i = 0; i < k && i < static_cast<int>(order.size()); ++i)
        freqs.push_back(order[i] + 1);
    return freqs;
}

// --------------------------------------------------------------------------
// Double-loop fuzzy entropy, Chen-style: N-m templates for both m and m+1,
// each template mean-removed, Chebyshev distance, exp(-(d/r)^n) similarity.
// --------------------------------------------------------------------------
inline double fuzzy_entropy_brute(const std::vector<double>& u, int m, double r_frac, double n_exp) {
    const int N = static_cast<int>(u.size());
    double mean = 0.0;
    for (double x : u) mean += x;
    mean /= N;
    double var = 0.0;
    for (double x : u) var += (x - mean) * (x - mean);
    const double sd = std::sqrt(var / N);
    if (sd == 0.0) return 0.0;
    const double r = r_frac * sd;

    auto phi = [&](int k) {
        const int nt = N - m;  // same template count for both dimensions
        std::vector<std::vector<double>> tmpl(nt, std::vector<double>(k));
        for (int i = 0; i < nt; ++i) {
            double tm = 0.0;
            for (int j = 0; j < k; ++j) tm += u[i + j];
            tm /= k;
            for (int j = 0; j < k; ++j) tmpl[i][j] = u[i + j] - tm;
        }
        double acc = 0.0;
        long pairs = 0;
        for (int i = 0; i < nt; ++i)
            for (int j = i + 1; j < nt; ++j) {
                double d = 0.0;
                for (int q = 0; q < k; ++q) d = std::max(d, std::fabs(tmpl[i][q] - tmpl[j][q]));
                acc += std::exp(-std::pow(d / r, n_exp));
                ++pairs;
            }
        return acc / pairs;
    };
    return std::log(phi(m)) - std::log(phi(m + 1));
}

// --------------------------------------------------------------------------
// All-lags normalized cross-correlation scan. Means and norms are computed
// over the full signals; the sum runs over the overlapping region only.
// Ties keep the earliest lag in scan order (-max_lag upward).
// --------------------------------------------------------------------------
inline std::pair<double, int> xcorr_peak_brute(const std::vector<double>& x,
                                               const std::vector<double>& y, int max_lag) {
    const int n = static_cast<int>(x.size());
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double nx = 0, ny = 0;
    for (int i = 0; i < n; ++i) {
        nx += (x[i] - mx) * (x[i] - mx);
        ny += (y[i] - my) * (y[i] - my);
    }
    const double denom = std::sqrt(nx) * std::sqrt(ny);
    double best = -2.0;
    int best_lag = -max_lag;
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
        double s = 0.0;
        for (int t = 0; t < n; ++t) {
            const int u = t + lag;
            if (u < 0 || u >= n) continue;
            s += (x[t] - mx) * (y[u] - my);
        }
        const double c = s / denom;
        if (c > best) {
            best = c;
            best_lag = lag;
        }
    }
    return {best, best_lag};
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const int n = static_cast<int>(a.size());
    double ma = 0, mb = 0;
    for (int i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0, saa = 0, sbb = 0;
    for (int i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

inline double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / v.size();
}

inline double sample_sd(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / (v.size() - 1));
}

} // namespace oracles
