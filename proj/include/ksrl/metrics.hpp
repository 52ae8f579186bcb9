#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ksrl/errors.hpp"
#include "ksrl/transforms.hpp"

namespace ksrl {

// Reported image-quality metrics (PSNR/SSIM in their usual higher-is-better
// orientation).
enum class MetricKind { Mse, Nmse, Psnr, Ssim };

inline constexpr std::array<MetricKind, 4> kAllMetrics = {MetricKind::Mse, MetricKind::Nmse,
                                                          MetricKind::Psnr, MetricKind::Ssim};

inline std::string_view metric_name(MetricKind m) {
    switch (m) {
    case MetricKind::Mse: return "mse";
    case MetricKind::Nmse: return "nmse";
    case MetricKind::Psnr: return "psnr";
    case MetricKind::Ssim: return "ssim";
    }
    return "?";
}

// Acquisition costs: all lower-is-better (PSNR and SSIM enter negated).
enum class CostKind { Mse, Nmse, NegPsnr, NegSsim };

inline std::string_view cost_name(CostKind c) {
    switch (c) {
    case CostKind::Mse: return "mse";
    case CostKind::Nmse: return "nmse";
    case CostKind::NegPsnr: return "neg-psnr";
    case CostKind::NegSsim: return "neg-ssim";
    }
    return "?";
}

inline CostKind cost_from_name(const std::string& name) {
    if (name == "mse") return CostKind::Mse;
    if (name == "nmse") return CostKind::Nmse;
    if (name == "neg-psnr") return CostKind::NegPsnr;
    if (name == "neg-ssim") return CostKind::NegSsim;
    throw ConfigError("unknown cost metric '" + name + "' (expected mse, nmse, neg-psnr or neg-ssim)");
}

// Cost value of a metric curve point: negate the higher-is-better metrics.
inline double cost_of_metric(CostKind cost, double metric_value) {
    return (cost == CostKind::NegPsnr || cost == CostKind::NegSsim) ? -metric_value : metric_value;
}

inline MetricKind metric_of_cost(CostKind cost) {
    switch (cost) {
    case CostKind::Mse: return MetricKind::Mse;
    case CostKind::Nmse: return MetricKind::Nmse;
    case CostKind::NegPsnr: return MetricKind::Psnr;
    case CostKind::NegSsim: return MetricKind::Ssim;
    }
    return MetricKind::Mse;
}

struct MetricCurve {
    MetricKind kind = MetricKind::Mse;
    std::vector<double> values; // indexed by acquisition step 0..T
};

namespace detail {

inline void check_same_shape(const std::vector<double>& recon, const Image& truth) {
    if (recon.size() != truth.pixels.size())
        throw ShapeError("reconstruction and truth shapes differ");
}

} // namespace detail

inline double mse(const std::vector<double>& recon_magnitude, const Image& truth) {
    detail::check_same_shape(recon_magnitude, truth);
    double s = 0.0;
    for (std::size_t i = 0; i < recon_magnitude.size(); ++i) {
        const double d = recon_magnitude[i] - truth.pixels[i];
        s += d * d;
    }
    return s / static_cast<double>(recon_magnitude.size());
}

inline double nmse(const std::vector<double>& recon_magnitude, const Image& truth) {
    detail::check_same_shape(recon_magnitude, truth);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < recon_magnitude.size(); ++i) {
        const double d = recon_magnitude[i] - truth.pixels[i];
        num += d * d;
        den += truth.pixels[i] * truth.pixels[i];
    }
    if (den <= 0.0) throw DegenerateInputError("nmse: truth has zero norm");
    return num / den;
}

inline constexpr double kPsnrCap = 100.0;

// 10*log10(R^2/mse), capped at 100 dB when mse < R^2 * 1e-10.
inline double psnr(const std::vector<double>& recon_magnitude, const Image& truth, double data_range) {
    if (data_range <= 0.0) throw DegenerateInputError("psnr: data_range must be positive");
    const double e = mse(recon_magnitude, truth);
    const double r2 = data_range * data_range;
    if (e < r2 * 1e-10) return kPsnrCap;
    return 10.0 * std::log10(r2 / e);
}

inline constexpr int kSsimWindow = 7;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

// Mean local SSIM over all fully contained 7x7 windows. Uniform window,
// population moments, C1 = (K1*R)^2, C2 = (K2*R)^2.
inline double ssim(const std::vector<double>& recon_magnitude, const Image& truth, double data_range) {
    detail::check_same_shape(recon_magnitude, truth);
    if (data_range <= 0.0) throw DegenerateInputError("ssim: data_range must be positive");
    const int h = truth.height, w = truth.width;
    if (h < kSsimWindow || w < kSsimWindow)
        throw DegenerateInputError("ssim: image smaller than window");

    const std::vector<double>& a = recon_magnitude;
    const std::vector<double>& b = truth.pixels;

    // Integral images over a, b, a^2, b^2, a*b; the (h+1) x (w+1) layout keeps
    // window sums branch-free.
    const std::size_t pw = static_cast<std::size_t>(w) + 1;
    std::vector<double> sa(pw * (h + 1), 0.0), sb(pw * (h + 1), 0.0), saa(pw * (h + 1), 0.0),
        sbb(pw * (h + 1), 0.0), sab(pw * (h + 1), 0.0);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * w + j;
            const std::size_t p = static_cast<std::size_t>(i + 1) * pw + (j + 1);
            const std::size_t up = p - pw, left = p - 1, diag = up - 1;
            sa[p] = a[k] + sa[up] + sa[left] - sa[diag];
            sb[p] = b[k] + sb[up] + sb[left] - sb[diag];
            saa[p] = a[k] * a[k] + saa[up] + saa[left] - saa[diag];
            sbb[p] = b[k] * b[k] + sbb[up] + sbb[left] - sbb[diag];
            sab[p] = a[k] * b[k] + sab[up] + sab[left] - sab[diag];
        }
    }
    auto window_sum = [pw](const std::vector<double>& s, int i, int j) {
        const std::size_t p0 = static_cast<std::size_t>(i) * pw + j;
        const std::size_t p1 = static_cast<std::size_t>(i + kSsimWindow) * pw + (j + kSsimWindow);
        const std::size_t pr = static_cast<std::size_t>(i) * pw + (j + kSsimWindow);
        const std::size_t pb = static_cast<std::size_t>(i + kSsimWindow) * pw + j;
        return s[p1] - s[pr] - s[pb] + s[p0];
    };

    const double n = static_cast<double>(kSsimWindow) * kSsimWindow;
    const double c1 = (kSsimK1 * data_range) * (kSsimK1 * data_range);
    const double c2 = (kSsimK2 * data_range) * (kSsimK2 * data_range);
    double total = 0.0;
    int count = 0;
    for (int i = 0; i + kSsimWindow <= h; ++i) {
        for (int j = 0; j + kSsimWindow <= w; ++j) {
            const double ma = window_sum(sa, i, j) / n;
            const double mb = window_sum(sb, i, j) / n;
            const double va = window_sum(saa, i, j) / n - ma * ma;
            const double vb = window_sum(sbb, i, j) / n - mb * mb;
            const double cov = window_sum(sab, i, j) / n - ma * mb;
            const double num = (2.0 * ma * mb + c1) * (2.0 * cov + c2);
            const double den = (ma * ma + mb * mb + c1) * (va + vb + c2);
            total += num / den;
            ++count;
        }
    }
    return total / count;
}

inline double data_range_of(const Image& truth) {
    double mx = 0.0;
    for (double v : truth.pixels) mx = std::max(mx, v);
    return mx;
}

inline double metric_value(MetricKind kind, const std::vector<double>& recon_magnitude,
                           const Image& truth, double data_range) {
    switch (kind) {
    case MetricKind::Mse: return mse(recon_magnitude, truth);
    case MetricKind::Nmse: return nmse(recon_magnitude, truth);
    case MetricKind::Psnr: return psnr(recon_magnitude, truth, data_range);
    case MetricKind::Ssim: return ssim(recon_magnitude, truth, data_range);
    }
    throw InvalidInputError("unknown metric kind");
}

// data_range is max(truth), computed per image.
inline double cost_value(CostKind cost, const std::vector<double>& recon_magnitude, const Image& truth) {
    const double r = data_range_of(truth);
    return cost_of_metric(cost, metric_value(metric_of_cost(cost), recon_magnitude, truth, r));
}

// Trapezoidal integral over unit-spaced steps.
inline double auc(const std::vector<double>& curve) {
    if (curve.size() < 2) throw DegenerateInputError("auc: curve needs at least two points");
    double s = 0.0;
    for (std::size_t t = 0; t + 1 < curve.size(); ++t) s += 0.5 * (curve[t] + curve[t + 1]);
    return s;
}

inline double auc(const MetricCurve& curve) { return auc(curve.values); }

struct TTestResult {
    double t = 0.0;
    int dof = 0;
    bool degenerate = false; // zero variance of the paired differences
};

// Paired t over per-image values; sample sd (n-1 denominator).
inline TTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw PairingError("paired_t_test: length mismatch");
    const std::size_t n = a.size();
    if (n < 2) throw DegenerateInputError("paired_t_test: need n >= 2");
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = (a[i] - b[i]) - mean;
        ss += d * d;
    }
    const double var = ss / static_cast<double>(n - 1);
    TTestResult r;
    r.dof = static_cast<int>(n) - 1;
    if (var <= 0.0) {
        r.degenerate = true;
        return r;
    }
    r.t = mean / std::sqrt(var / static_cast<double>(n));
    return r;
}

struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0; // 1.96 * sd / sqrt(n)
};

inline MeanCi mean_ci95(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 2) throw DegenerateInputError("mean_ci95: need n >= 2");
    MeanCi r;
    for (double v : values) r.mean += v;
    r.mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - r.mean) * (v - r.mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    r.half_width = 1.96 * sd / std::sqrt(static_cast<double>(n));
    return r;
}

} // namespace ksrl
