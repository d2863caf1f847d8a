// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "ncqm/simd/kernels.hpp"

namespace ncqm::simd {

namespace {

// [re0, im0, re1, im1] * [sr0, sr0, sr1, sr1] + i[si..]
inline __m256d cmul_lanes(__m256d t, __m256d sr, __m256d si)
{
    __m256d swapped = _mm256_permute_pd(t, 0b0101);
    return _mm256_fmaddsub_pd(t, sr, _mm256_mul_pd(swapped, si));
}

void caxpy(std::size_t n, cplx a, cplx const* x, cplx* y)
{
    auto const* xp = reinterpret_cast<double const*>(x);
    auto* yp = reinterpret_cast<double*>(y);
    __m256d const ar = _mm256_set1_pd(a.real());
    __m256d const ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
    {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        yv = _mm256_add_pd(yv, cmul_lanes(xv, ar, ai));
        _mm256_storeu_pd(yp + 2 * i, yv);
    }
    for (; i < n; ++i)
        y[i] += a * x[i];
}

double weighted_abs2(std::size_t n, double const* w, cplx const* x)
{
    auto const* xp = reinterpret_cast<double const*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
    {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d wv = _mm256_castpd128_pd256(_mm_loadu_pd(w + i));
        wv = _mm256_permute4x64_pd(wv, 0b01010000);
        acc = _mm256_fmadd_pd(wv, _mm256_mul_pd(xv, xv), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i)
        total += w[i] * std::norm(x[i]);
    return total;
}

void hyp2f1_levels(cplx a, cplx c, cplx z, std::size_t count, cplx* out, double* maxterm)
{
    std::vector<cplx> term(count, cplx(1));
    // squared magnitudes, duplicated per re/im slot to match the complex layout
    std::vector<double> max2(2 * count, 1.0);
    for (std::size_t n = 0; n < count; ++n)
        out[n] = 1;
    auto* tp = reinterpret_cast<double*>(term.data());
    double* mp = max2.data();
    auto* op = reinterpret_cast<double*>(out);
    for (std::size_t m = 1; m < count; ++m)
    {
        double const mm = static_cast<double>(m);
        cplx const common = (a + (mm - 1)) * z / ((c + (mm - 1)) * mm);
        __m256d const cr = _mm256_set1_pd(common.real());
        __m256d const ci = _mm256_set1_pd(common.imag());
        std::size_t n = m;
        for (; n + 2 <= count; n += 2)
        {
            double const f0 = mm - 1 - static_cast<double>(n);
            __m256d f = _mm256_set_pd(f0 - 1, f0 - 1, f0, f0);
            __m256d t = _mm256_loadu_pd(tp + 2 * n);
            t = cmul_lanes(t, _mm256_mul_pd(cr, f), _mm256_mul_pd(ci, f));
            _mm256_storeu_pd(tp + 2 * n, t);
            _mm256_storeu_pd(op + 2 * n, _mm256_add_pd(_mm256_loadu_pd(op + 2 * n), t));
            __m256d sq = _mm256_mul_pd(t, t);
            sq = _mm256_hadd_pd(sq, sq);
            _mm256_storeu_pd(mp + 2 * n, _mm256_max_pd(_mm256_loadu_pd(mp + 2 * n), sq));
        }
        for (; n < count; ++n)
        {
            term[n] *= common * (mm - 1 - static_cast<double>(n));
            out[n] += term[n];
            mp[2 * n] = std::max(mp[2 * n], std::norm(term[n]));
        }
    }
    for (std::size_t n = 0; n < count; ++n)
        maxterm[n] = std::sqrt(mp[2 * n]);
}

}  // namespace

KernelTable const& avx2_table()
{
    static KernelTable const table{"avx2", caxpy, weighted_abs2, hyp2f1_levels};
    return table;
}

}  // namespace ncqm::simd
