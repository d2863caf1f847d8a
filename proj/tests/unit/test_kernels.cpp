#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ncqm/simd/kernels.hpp"

using namespace ncqm::simd;

namespace {

std::vector<cplx> ramp(std::size_t n, double phase)
{
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = cplx(std::cos(phase * i) * (1 + 0.1 * i), std::sin(1.3 * phase * i) - 0.5);
    return v;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scalar table is always available")
{
    auto const names = available();
    CHECK(std::find(names.begin(), names.end(), "scalar") != names.end());
    CHECK(set_active("scalar"));
    CHECK(std::string(active().name) == "scalar");
    CHECK_FALSE(set_active("no-such-variant"));
}

TEST_CASE("vector variant agrees with the scalar reference")
{
    KernelTable const* v = avx2_kernels();
    if (!v)
    {
        MESSAGE("AVX2 variant not available on this build or CPU");
        return;
    }
    KernelTable const& s = scalar_kernels();

    // lengths straddling the vector width, including empty
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 16u, 33u, 250u})
    {
        INFO("n = " << n);
        auto const x = ramp(n, 0.37);
        auto ys = ramp(n, 0.11), yv = ys;
        cplx const a(0.8, -1.7);
        s.caxpy(n, a, x.data(), ys.data());
        v->caxpy(n, a, x.data(), yv.data());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(rel(yv[i], ys[i]) < 1e-15);

        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = 1.0 + i % 5;
        double const ws = s.weighted_abs2(n, w.data(), x.data());
        double const wv = v->weighted_abs2(n, w.data(), x.data());
        CHECK(std::abs(wv - ws) <= 1e-14 * std::max(1.0, ws));
    }

    struct Case
    {
        cplx a, c, z;
    };
    for (Case const& k : {Case{{1.3, -0.4}, {4.0, 0.0}, {0.6, 0.9}}, Case{{-2.5, 0.0}, {3.0, 0.0}, {-1.5, 0.0}},
                          Case{{0.5, 2.0}, {2.0, 0.0}, {0.0, 3.0}}})
    {
        std::size_t const count = 45;
        std::vector<cplx> os(count), ov(count);
        std::vector<double> ms(count), mv(count);
        s.hyp2f1_levels(k.a, k.c, k.z, count, os.data(), ms.data());
        v->hyp2f1_levels(k.a, k.c, k.z, count, ov.data(), mv.data());
        for (std::size_t N = 0; N < count; ++N)
        {
            // agreement to rounding measured against the largest term
            CHECK(std::abs(ov[N] - os[N]) <= 1e-14 * std::max(1.0, ms[N]));
            CHECK(mv[N] == doctest::Approx(ms[N]).epsilon(1e-14));
        }
    }

    CHECK(set_active("avx2"));
    CHECK(std::string(active().name) == "avx2");
    CHECK(set_active("scalar"));
}
