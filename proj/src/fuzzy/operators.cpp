#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "ncqm/fuzzy.hpp"
#include "ncqm/simd/kernels.hpp"

namespace ncqm {

namespace {

// k!/(k-m)! as a double, 0 when m > k.
double falling(unsigned k, unsigned m)
{
    if (m > k)
        return 0;
    double p = 1;
    for (unsigned i = 0; i < m; ++i)
        p *= k - i;
    return p;
}

double factorial(unsigned n)
{
    return falling(n, n);
}

}  // namespace

WaveOperator build_psi_jm(unsigned j, int m, RadialSeq const& radial, FuzzySpace const& space,
                          Params const& params)
{
    params.validate();
    if (m < -int(j) || m > int(j))
        throw PreconditionError("build_psi_jm: |m| > j");
    auto const& fock = *space.fock();
    unsigned const top = fock.n_max();
    if (top >= j && radial.values.size() < top - j + 1)
        throw PreconditionError("build_psi_jm: radial sequence needs " + std::to_string(top - j + 1)
                                + " levels, got " + std::to_string(radial.values.size()));

    WaveOperator psi{OperatorMatrix(space.fock()), j, m};
    double const scale = std::pow(params.lambda, int(j));
    // m2 creation quanta in mode 2 pair with n2 = m2 + m annihilations in mode 2.
    int const m2_lo = std::max(0, -m);
    int const m2_hi = std::min(int(j), int(j) - m);
    for (std::size_t col = 0; col < fock.dim(); ++col)
    {
        unsigned const n = fock.level(col);
        if (n < j)
            continue;
        cplx const r = radial.values[n - j] * scale;
        if (r == cplx(0))
            continue;
        unsigned const k1 = fock.n1(col), k2 = fock.n2(col);
        for (int m2 = m2_lo; m2 <= m2_hi; ++m2)
        {
            unsigned const m1 = j - m2, n2 = m2 + m, n1 = j - n2;
            if (n1 > k1 || n2 > k2)
                continue;
            unsigned const l1 = k1 - n1, l2 = k2 - n2;
            double amp = std::sqrt(falling(k1, n1) * falling(k2, n2) * falling(l1 + m1, m1)
                                   * falling(l2 + m2, m2))
                         / (factorial(m1) * factorial(m2) * factorial(n1) * factorial(n2));
            if (n2 % 2)
                amp = -amp;
            psi.op(TruncatedFock::index(l1 + m1, l2 + m2), col) += amp * r;
        }
    }
    return psi;
}

std::vector<cplx> radial_from_psi_jj(OperatorMatrix const& psi, unsigned j, Params const& params)
{
    unsigned const top = psi.space()->n_max();
    std::vector<cplx> out;
    if (top < j)
        return out;
    double const jf = factorial(j);
    double const pre = std::pow(params.lambda, int(j)) / (jf * jf) * (j % 2 ? -1.0 : 1.0);
    for (unsigned n = 0; n + j <= top; ++n)
    {
        double const amp = pre * std::sqrt(jf * falling(n + j, j));
        out.push_back(psi(TruncatedFock::index(j, n), TruncatedFock::index(0, n + j)) / amp);
    }
    return out;
}

OperatorMatrix double_commutator(OperatorMatrix const& psi, FuzzySpace const& space)
{
    auto const& l = space.ladder();
    OperatorMatrix out(psi.space());
    for (auto [down, up] : {std::pair{&l.a1, &l.a1_dag}, std::pair{&l.a2, &l.a2_dag}})
    {
        OperatorMatrix const inner = commutator(*down, psi);
        multiply_add(out, *up, inner, 1.0);
        multiply_add(out, inner, *up, -1.0);
    }
    return out;
}

WaveOperator laplacian_apply(WaveOperator const& psi, FuzzySpace const& space,
                             Params const& params)
{
    params.validate();
    double const l2 = params.lambda * params.lambda;
    WaveOperator out{double_commutator(psi.op, space), psi.j, psi.m};
    out.op.scale_rows_by_level([&](unsigned n) { return -1.0 / (l2 * (n + 1)); });
    return out;
}

WaveOperator hamiltonian_apply(WaveOperator const& psi, FuzzySpace const& space,
                               Params const& params)
{
    params.validate();
    double const lam = params.lambda;
    WaveOperator out{double_commutator(psi.op, space), psi.j, psi.m};
    out.op.scale_rows_by_level([&](unsigned n) { return 1.0 / (2 * lam * lam * (n + 1)); });
    OperatorMatrix pot = psi.op;
    pot.scale_rows_by_level([&](unsigned n) { return params.alpha / (lam * (n + 1)); });
    out.op -= pot;
    return out;
}

double hs_norm_sq_levels(OperatorMatrix const& psi, Params const& params, unsigned max_level)
{
    auto const& fock = *psi.space();
    std::vector<double> w(fock.dim());
    for (std::size_t c = 0; c < w.size(); ++c)
        w[c] = fock.level(c) <= max_level ? fock.level(c) + 1.0 : 0.0;
    auto const kernel = simd::active().weighted_abs2;
    double sum = 0;
    for (std::size_t r = 0; r < fock.dim(); ++r)
        sum += kernel(fock.dim(), w.data(), psi.row(r));
    return 4 * std::numbers::pi * std::pow(params.lambda, 3) * sum;
}

HsNorm hs_norm_sq(WaveOperator const& psi, Params const& params)
{
    unsigned const top = psi.op.space()->n_max();
    HsNorm result;
    result.norm_sq = hs_norm_sq_levels(psi.op, params, top);
    result.last_level =
        top == 0 ? result.norm_sq
                 : result.norm_sq - hs_norm_sq_levels(psi.op, params, top - 1);
    return result;
}

RadialSeq laplace_potential(unsigned n_max, Params const& params)
{
    params.validate();
    RadialSeq v{0, std::vector<cplx>(n_max + 1), RadialSource::Potential};
    v.values[0] = params.q0 - params.alpha / params.lambda;
    // The first integral (M+1)V(M) - M V(M-1) = q0 fixes V(1); the
    // second-order recurrence carries the rest.
    if (n_max >= 1)
        v.values[1] = (params.q0 + v.values[0]) / 2.0;
    for (unsigned n = 1; n < n_max; ++n)
        v.values[n + 1] = (2.0 * (n + 1) * v.values[n] - double(n) * v.values[n - 1]) / double(n + 2);
    return v;
}

std::vector<Rational> laplace_potential_exact(unsigned n_max, Rational const& q,
                                              Rational const& lambda, Rational const& q0)
{
    if (lambda <= 0)
        throw PreconditionError("laplace_potential_exact: lambda must be positive");
    std::vector<Rational> v(n_max + 1);
    v[0] = q0 - q / lambda;
    if (n_max >= 1)
        v[1] = (q0 + v[0]) / 2;
    for (unsigned n = 1; n < n_max; ++n)
        v[n + 1] = (2 * (n + 1) * v[n] - n * v[n - 1]) / (n + 2);
    return v;
}

double ball_volume(unsigned n, Params const& params)
{
    params.validate();
    // Σ (k+1)² for k = 0..n
    double const m = n + 1.0;
    return 4 * std::numbers::pi * std::pow(params.lambda, 3) * m * (m + 1) * (2 * m + 1) / 6;
}

namespace {

RadialStencil compute_stencil(unsigned j, unsigned levels)
{
    // Probe sequences supported on N = s mod 3 keep the three stencil
    // columns apart; λ drops out of the stencil, so λ = 1.
    FuzzySpace space(levels + j + 1);
    Params unit{1.0, 0.0, 0.0};
    Coordinates const x = coordinates(space, unit);
    RadialStencil st;
    st.j = j;
    st.lower.assign(levels, 0);
    st.diag.assign(levels, 0);
    st.upper.assign(levels, 0);
    st.r_over_lambda.assign(levels, 0);
    for (unsigned s = 0; s < 3; ++s)
    {
        RadialSeq probe{j, std::vector<cplx>(levels + 2), RadialSource::User};
        for (unsigned n = s; n < probe.values.size(); n += 3)
            probe.values[n] = 1;
        WaveOperator psi = build_psi_jm(j, int(j), probe, space, unit);
        auto const t = radial_from_psi_jj(double_commutator(psi.op, space), j, unit);
        auto const rt = radial_from_psi_jj(x.r * psi.op, j, unit);
        for (unsigned n = 0; n < levels; ++n)
        {
            if (n % 3 == s)
            {
                st.diag[n] = t[n].real();
                st.r_over_lambda[n] = rt[n].real();
            }
            else if ((n + 1) % 3 == s)
                st.upper[n] = t[n].real();
            else if (n > 0)
                st.lower[n] = t[n].real();
        }
    }
    return st;
}

}  // namespace

RadialStencil const& radial_stencil(unsigned j, unsigned levels)
{
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<RadialStencil const>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.lower_bound({j, levels});
    if (it != cache.end() && it->first.first == j)
        return *it->second;
    auto [pos, _] = cache.emplace(std::pair{j, levels},
                                  std::make_unique<RadialStencil const>(compute_stencil(j, levels)));
    return *pos->second;
}

BigInt binomial_convolution(unsigned n, unsigned j)
{
    BigInt sum = 0;
    if (n < j)
        return sum;
    for (unsigned k = 0; k <= n - j; ++k)
        sum += binomial_exact(k + j, j) * binomial_exact(n - k, j);
    return sum;
}

}  // namespace ncqm
