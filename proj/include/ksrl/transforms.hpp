#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ksrl/errors.hpp"

namespace ksrl {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Real-valued ground-truth picture, row-major.
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> pixels;

    double& at(int i, int j) { return pixels[static_cast<std::size_t>(i) * width + j]; }
    double at(int i, int j) const { return pixels[static_cast<std::size_t>(i) * width + j]; }
};

inline Image make_image(int height, int width, double fill = 0.0) {
    Image img;
    img.height = height;
    img.width = width;
    img.pixels.assign(static_cast<std::size_t>(height) * width, fill);
    return img;
}

// H >= 8, W >= 8, W even, all entries finite.
inline void validate_image(const Image& img) {
    if (img.height < 8 || img.width < 8)
        throw InvalidInputError("image must be at least 8x8");
    if (img.width % 2 != 0)
        throw InvalidInputError("image width must be even");
    if (img.pixels.size() != static_cast<std::size_t>(img.height) * img.width)
        throw ShapeError("image pixel buffer does not match dimensions");
    for (double v : img.pixels)
        if (!std::isfinite(v)) throw InvalidInputError("image contains non-finite values");
}

// Complex frequency matrix, row-major, DC at (H/2, W/2).
struct KSpace {
    int height = 0;
    int width = 0;
    std::vector<Complex> data;

    Complex& at(int i, int j) { return data[static_cast<std::size_t>(i) * width + j]; }
    Complex at(int i, int j) const { return data[static_cast<std::size_t>(i) * width + j]; }
};

inline void validate_kspace(const KSpace& ks) {
    if (ks.height <= 0 || ks.width <= 0)
        throw InvalidInputError("kspace dimensions must be positive");
    if (ks.data.size() != static_cast<std::size_t>(ks.height) * ks.width)
        throw ShapeError("kspace buffer does not match dimensions");
    for (const Complex& c : ks.data)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidInputError("kspace contains non-finite values");
}

// Binary column selection over k-space. columns[j] == 1 means observed.
struct Mask {
    std::vector<std::uint8_t> columns;
    int low_freq_count = 0;

    int width() const { return static_cast<int>(columns.size()); }
    int observed_count() const {
        int n = 0;
        for (auto c : columns) n += (c != 0);
        return n;
    }
    bool observed(int j) const { return columns[static_cast<std::size_t>(j)] != 0; }
};

// The L centermost columns: W/2 - ceil(L/2) .. W/2 + floor(L/2) - 1.
// Odd L leans one column toward the lower indices.
inline Mask centered_mask(int width, int low_freq_count) {
    if (width <= 0 || width % 2 != 0)
        throw InvalidInputError("mask width must be positive and even");
    if (low_freq_count < 0 || low_freq_count > width)
        throw InvalidInputError("low frequency count out of range");
    Mask m;
    m.columns.assign(static_cast<std::size_t>(width), 0);
    m.low_freq_count = low_freq_count;
    const int lo = width / 2 - (low_freq_count + 1) / 2;
    const int hi = width / 2 + low_freq_count / 2; // exclusive
    for (int j = lo; j < hi; ++j) m.columns[static_cast<std::size_t>(j)] = 1;
    return m;
}

// Complex image plus its elementwise modulus.
struct Reconstruction {
    int height = 0;
    int width = 0;
    std::vector<Complex> complex_image;
    std::vector<double> magnitude;
};

inline Reconstruction make_reconstruction(int height, int width, std::vector<Complex> complex_image) {
    Reconstruction r;
    r.height = height;
    r.width = width;
    r.magnitude.resize(complex_image.size());
    for (std::size_t i = 0; i < complex_image.size(); ++i) r.magnitude[i] = std::abs(complex_image[i]);
    r.complex_image = std::move(complex_image);
    return r;
}

namespace detail {

// Unitary 1D DFT matrix with the centered frequency convention baked into the
// row index: row k corresponds to frequency (k - n/2) mod n.
struct DftTable {
    int n = 0;
    std::vector<Complex> forward; // forward[k*n + j] = exp(-2*pi*i*u_k*j/n) / sqrt(n)
    std::vector<Complex> inverse; // conjugates of forward
};

inline const DftTable& dft_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DftTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<DftTable>();
    t->n = n;
    t->forward.resize(static_cast<std::size_t>(n) * n);
    t->inverse.resize(static_cast<std::size_t>(n) * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        const int u = (k - n / 2 + n) % n;
        for (int j = 0; j < n; ++j) {
            const double angle = -2.0 * kPi * static_cast<double>((u * j) % n) / n;
            const Complex w = std::polar(scale, angle);
            t->forward[static_cast<std::size_t>(k) * n + j] = w;
            t->inverse[static_cast<std::size_t>(k) * n + j] = std::conj(w);
        }
    }
    const DftTable& ref = *t;
    cache.emplace(n, std::move(t));
    return ref;
}

} // namespace detail

// 2D unitary DFT (scale 1/sqrt(HW) overall), DC-centered output.
inline KSpace dft2_centered(const Image& image) {
    validate_image(image);
    const int h = image.height, w = image.width;
    const auto& tw = detail::dft_table(w);
    const auto& th = detail::dft_table(h);

    // Row pass: tmp[m][q] = sum_n x[m][n] * Fw[q][n]
    std::vector<Complex> tmp(static_cast<std::size_t>(h) * w);
    for (int m = 0; m < h; ++m) {
        const double* row = &image.pixels[static_cast<std::size_t>(m) * w];
        Complex* trow = &tmp[static_cast<std::size_t>(m) * w];
        for (int q = 0; q < w; ++q) {
            const Complex* wrow = &tw.forward[static_cast<std::size_t>(q) * w];
            double re = 0.0, im = 0.0;
            for (int n = 0; n < w; ++n) {
                re += row[n] * wrow[n].real();
                im += row[n] * wrow[n].imag();
            }
            trow[q] = Complex(re, im);
        }
    }
    // Column pass: out[p][q] = sum_m tmp[m][q] * Fh[p][m]
    KSpace out;
    out.height = h;
    out.width = w;
    out.data.assign(static_cast<std::size_t>(h) * w, Complex(0.0, 0.0));
    for (int p = 0; p < h; ++p) {
        const Complex* hrow = &th.forward[static_cast<std::size_t>(p) * h];
        Complex* orow = &out.data[static_cast<std::size_t>(p) * w];
        for (int m = 0; m < h; ++m) {
            const Complex f = hrow[m];
            const Complex* trow = &tmp[static_cast<std::size_t>(m) * w];
            for (int q = 0; q < w; ++q) orow[q] += f * trow[q];
        }
    }
    return out;
}

// Exact inverse of dft2_centered.
inline Reconstruction idft2_centered(const KSpace& kspace) {
    validate_kspace(kspace);
    const int h = kspace.height, w = kspace.width;
    const auto& tw = detail::dft_table(w);
    const auto& th = detail::dft_table(h);

    // Row pass over frequency columns: tmp[p][n] = sum_q Y[p][q] * Iw[q][n]
    std::vector<Complex> tmp(static_cast<std::size_t>(h) * w, Complex(0.0, 0.0));
    for (int p = 0; p < h; ++p) {
        const Complex* yrow = &kspace.data[static_cast<std::size_t>(p) * w];
        Complex* trow = &tmp[static_cast<std::size_t>(p) * w];
        for (int q = 0; q < w; ++q) {
            const Complex y = yrow[q];
            if (y.real() == 0.0 && y.imag() == 0.0) continue;
            const Complex* irow = &tw.inverse[static_cast<std::size_t>(q) * w];
            for (int n = 0; n < w; ++n) trow[n] += y * irow[n];
        }
    }
    // Column pass: x[m][n] = sum_p tmp[p][n] * Ih[p][m]
    std::vector<Complex> out(static_cast<std::size_t>(h) * w, Complex(0.0, 0.0));
    for (int m = 0; m < h; ++m) {
        Complex* orow = &out[static_cast<std::size_t>(m) * w];
        for (int p = 0; p < h; ++p) {
            const Complex f = th.inverse[static_cast<std::size_t>(p) * h + m];
            const Complex* trow = &tmp[static_cast<std::size_t>(p) * w];
            for (int n = 0; n < w; ++n) orow[n] += f * trow[n];
        }
    }
    return make_reconstruction(h, w, std::move(out));
}

// Keeps columns with mask[j] == 1, zeroes the rest. Idempotent.
inline KSpace apply_mask(const KSpace& kspace, const Mask& mask) {
    if (mask.width() != kspace.width)
        throw ShapeError("mask length does not match kspace width");
    KSpace out = kspace;
    for (int i = 0; i < out.height; ++i) {
        Complex* row = &out.data[static_cast<std::size_t>(i) * out.width];
        for (int j = 0; j < out.width; ++j)
            if (!mask.observed(j)) row[j] = Complex(0.0, 0.0);
    }
    return out;
}

inline Reconstruction zero_filled_recon(const KSpace& kspace, const Mask& mask) {
    return idft2_centered(apply_mask(kspace, mask));
}

inline double column_energy(const KSpace& kspace, int j) {
    if (j < 0 || j >= kspace.width) throw IndexError("column index out of range");
    double e = 0.0;
    for (int i = 0; i < kspace.height; ++i) e += std::norm(kspace.at(i, j));
    return e;
}

// Inverse transform of the single-column spectrum: a rank-one term
// a[m] * b[n], where a is the 1D inverse transform of the column and b the
// phase profile of the column index. Summing these over a mask's columns
// reproduces the zero-filled reconstruction.
inline std::vector<Complex> column_image_contribution(const KSpace& kspace, int j) {
    if (j < 0 || j >= kspace.width) throw IndexError("column index out of range");
    const int h = kspace.height, w = kspace.width;
    const auto& tw = detail::dft_table(w);
    const auto& th = detail::dft_table(h);

    std::vector<Complex> a(static_cast<std::size_t>(h), Complex(0.0, 0.0));
    for (int p = 0; p < h; ++p) {
        const Complex y = kspace.at(p, j);
        if (y.real() == 0.0 && y.imag() == 0.0) continue;
        const Complex* irow = &th.inverse[static_cast<std::size_t>(p) * h];
        for (int m = 0; m < h; ++m) a[static_cast<std::size_t>(m)] += y * irow[m];
    }
    std::vector<Complex> out(static_cast<std::size_t>(h) * w);
    const Complex* brow = &tw.inverse[static_cast<std::size_t>(j) * w];
    for (int m = 0; m < h; ++m) {
        const Complex am = a[static_cast<std::size_t>(m)];
        Complex* orow = &out[static_cast<std::size_t>(m) * w];
        for (int n = 0; n < w; ++n) orow[n] = am * brow[n];
    }
    return out;
}

inline double sum_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

inline double sum_abs2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return s;
}

// Mean over d x d cells that partition the image as evenly as possible.
inline std::vector<double> pool_average(const std::vector<double>& data, int h, int w, int d) {
    if (d <= 0 || h <= 0 || w <= 0) throw InvalidInputError("pool_average: bad dimensions");
    if (data.size() != static_cast<std::size_t>(h) * w)
        throw ShapeError("pool_average: buffer does not match dimensions");
    const int dh = std::min(d, h), dw = std::min(d, w);
    std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
    for (int a = 0; a < dh; ++a) {
        const int r0 = a * h / dh, r1 = (a + 1) * h / dh;
        for (int b = 0; b < dw; ++b) {
            const int c0 = b * w / dw, c1 = (b + 1) * w / dw;
            double s = 0.0;
            for (int i = r0; i < r1; ++i)
                for (int j = c0; j < c1; ++j) s += data[static_cast<std::size_t>(i) * w + j];
            out[static_cast<std::size_t>(a) * d + b] = s / (static_cast<double>(r1 - r0) * (c1 - c0));
        }
    }
    return out;
}

} // namespace ksrl
