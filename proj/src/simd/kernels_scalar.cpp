#include <algorithm>
#include <cmath>

#include "ncqm/simd/kernels.hpp"

namespace ncqm::simd {

namespace {

void caxpy(std::size_t n, cplx a, cplx const* x, cplx* y)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

double weighted_abs2(std::size_t n, double const* w, cplx const* x)
{
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += w[i] * std::norm(x[i]);
    return acc;
}

void hyp2f1_levels(cplx a, cplx c, cplx z, std::size_t count, cplx* out, double* maxterm)
{
    std::vector<cplx> term(count, cplx(1));
    std::vector<double> max2(count, 1.0);
    for (std::size_t n = 0; n < count; ++n)
        out[n] = 1;
    for (std::size_t m = 1; m < count; ++m)
    {
        double const mm = static_cast<double>(m);
        cplx const common = (a + (mm - 1)) * z / ((c + (mm - 1)) * mm);
        for (std::size_t n = m; n < count; ++n)
        {
            term[n] *= common * (mm - 1 - static_cast<double>(n));
            out[n] += term[n];
            max2[n] = std::max(max2[n], std::norm(term[n]));
        }
    }
    for (std::size_t n = 0; n < count; ++n)
        maxterm[n] = std::sqrt(max2[n]);
}

}  // namespace

KernelTable const& scalar_kernels()
{
    static KernelTable const table{"scalar", caxpy, weighted_abs2, hyp2f1_levels};
    return table;
}

}  // namespace ncqm::simd
