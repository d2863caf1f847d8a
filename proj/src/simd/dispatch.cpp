#include <atomic>
#include <cstdlib>

#include "ncqm/simd/kernels.hpp"

namespace ncqm::simd {

#if NCQM_HAVE_AVX2
KernelTable const& avx2_table();
#endif

KernelTable const* avx2_kernels()
{
#if NCQM_HAVE_AVX2
    static bool const supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

KernelTable const* best()
{
    if (auto const* t = avx2_kernels())
        return t;
    return &scalar_kernels();
}

KernelTable const* lookup(std::string_view name)
{
    if (name == "scalar")
        return &scalar_kernels();
    if (name == "avx2")
        return avx2_kernels();
    if (name == "auto")
        return best();
    return nullptr;
}

std::atomic<KernelTable const*>& slot()
{
    static std::atomic<KernelTable const*> current = [] {
        char const* env = std::getenv("NCQM_SIMD");
        KernelTable const* chosen = env ? lookup(env) : nullptr;
        return chosen ? chosen : best();
    }();
    return current;
}

}  // namespace

KernelTable const& active()
{
    return *slot().load(std::memory_order_acquire);
}

bool set_active(std::string_view name)
{
    KernelTable const* t = lookup(name);
    if (!t)
        return false;
    slot().store(t, std::memory_order_release);
    return true;
}

std::vector<std::string> available()
{
    std::vector<std::string> names{"scalar"};
    if (avx2_kernels())
        names.emplace_back("avx2");
    return names;
}

}  // namespace ncqm::simd
