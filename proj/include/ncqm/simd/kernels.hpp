#pragma once

// Data-parallel inner loops with a scalar reference and runtime-selected
// vector variants. Every variant must agree with the scalar one to rounding.

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ncqm::simd {

using cplx = std::complex<double>;

struct KernelTable
{
    char const* name;
    //! y[i] += a * x[i]
    void (*caxpy)(std::size_t n, cplx a, cplx const* x, cplx* y);
    //! Σ w[i] |x[i]|²
    double (*weighted_abs2)(std::size_t n, double const* w, cplx const* x);
    //! out[N] = ₂F₁(a, -N; c; z) for N < count; maxterm[N] = max_m |term_m|
    void (*hyp2f1_levels)(
        cplx a, cplx c, cplx z, std::size_t count, cplx* out, double* maxterm);
};

KernelTable const& scalar_kernels();

//! Null when the variant was not compiled in or the CPU lacks it
KernelTable const* avx2_kernels();

//! Table in use; first call honours NCQM_SIMD=scalar|avx2|auto
KernelTable const& active();

//! Select a variant by name; false if unavailable
bool set_active(std::string_view name);

std::vector<std::string> available();

}  // namespace ncqm::simd
