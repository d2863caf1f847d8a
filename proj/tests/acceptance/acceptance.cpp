// One line per acceptance criterion; exit status 0 only if all of them pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ncqm/fuzzy.hpp"
#include "ncqm/radial.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/spectrum.hpp"
#include "ncqm/verify.hpp"

using namespace ncqm;

namespace {

struct Outcome
{
    bool pass = false;
    std::string summary;
};

std::string fmt(char const* f, double a, double b = 0, double c = 0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double slope(std::vector<double> const& x, std::vector<double> const& y)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double const n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double op_rel(OperatorMatrix const& a, OperatorMatrix const& b, unsigned exclude)
{
    return a.max_abs_diff(b, exclude) / b.max_abs(exclude);
}

Outcome eigen_oracle()
{
    unsigned const top = 60;
    Params const p{0.2, 1.0, 0.0};
    FuzzySpace const space(top);
    double worst = 0;
    for (unsigned j = 0; j <= 2; ++j)
        for (auto const& lv : bound_energies_I(p, j, 3))
        {
            RadialSeq const r = bound_wavefunction(lv, top - j);
            for (int m = -int(j); m <= int(j); ++m)
            {
                WaveOperator const psi = build_psi_jm(j, m, r, space, p);
                WaveOperator h = hamiltonian_apply(psi, space, p);
                h.op -= lv.E * psi.op;
                double const res = std::sqrt(hs_norm_sq_levels(h.op, p, top - h.op.pollution())
                                             / hs_norm_sq(psi, p).norm_sq);
                worst = std::max(worst, res);
            }
        }
    return {worst < 1e-10, fmt("n_max = 60, all m: max |HΨ - EΨ|/|Ψ| = %.2e (< 1e-10)", worst)};
}

Outcome closed_forms()
{
    double worst = 0;
    for (auto [alpha, lambda] : std::vector<std::pair<double, double>>{{1.0, 0.2}, {0.5, 1.0}, {2.0, 0.05}})
    {
        Params const p{lambda, alpha, 0.0};
        auto const roots = termination_roots(0, p, 3);
        auto const closed = bound_energies_I(p, 0, 3);
        if (roots.size() != 3)
            return {false, "termination_roots returned the wrong number of levels"};
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, std::abs(roots[i].E - closed[i].E) / std::abs(closed[i].E));
    }
    double const E1 = termination_roots(0, {0.2, 1.0, 0.0}, 1)[0].E;
    bool const ok = worst < 1e-12 && std::abs(E1 + 0.49509757) < 1e-8;
    return {ok, fmt("9 combinations: max rel %.2e (< 1e-12); E(α=1, λ=0.2, n=1) = %.10f", worst, E1)};
}

Outcome commutative_spectrum()
{
    double worst = 0;
    for (unsigned n = 1; n <= 3; ++n)
    {
        double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0;
        for (double lam : {1e-1, 1e-2, 1e-3})
        {
            double const E = bound_energies_I({lam, 1.0, 0.0}, n - 1, 1)[0].E;
            double const y = (E - bohr_energy(n, 1.0)) / (lam * lam), x = lam * lam;
            s11 += 1;
            s12 += x;
            s22 += x * x;
            t1 += y;
            t2 += x * y;
        }
        double const C = (t1 * s22 - t2 * s12) / (s11 * s22 - s12 * s12);
        double const want = bohr_lambda2_coefficient(n, 1.0);
        worst = std::max(worst, std::abs(C - want) / want);
    }
    return {worst < 1e-2, fmt("fitted λ² coefficient vs α⁴/(8n⁴), n = 1..3: max rel %.2e (< 1e-2)", worst)};
}

Outcome mirror_exact()
{
    unsigned cases = 0;
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned j = 0; j <= 2 && j < n; ++j)
        {
            if (!mirror_check(n, j, Rational(3, 4), 40).equal)
                return {false, "rational mismatch at n = " + std::to_string(n) + ", j = " + std::to_string(j)};
            ++cases;
        }
    return {true, "κ = 3/4, " + std::to_string(cases) + " (n, j) pairs, N <= 40: exact equality"};
}

Outcome smatrix_properties()
{
    double unit = 0, pole = 0;
    double const lambda = 0.2, crit = 2 / (lambda * lambda);
    for (unsigned j = 0; j <= 4; ++j)
        for (unsigned i = 1; i <= 100; ++i)
            unit = std::max(unit, std::abs(std::abs(smatrix_nc(j, crit * i / 101.0, {lambda, 1.0, 0.0}).S) - 1));
    for (double alpha : {1.0, -1.0})
        for (unsigned j = 0; j <= 2; ++j)
        {
            Params const p{lambda, alpha, 0.0};
            auto const poles = pole_energies(j, p, 3);
            auto const levels = bound_energies(p, j, 3);
            for (int i = 0; i < 3; ++i)
                pole = std::max(pole, std::abs(poles[i] - levels[i].E) / std::abs(levels[i].E));
        }
    std::vector<double> lams{1e-1, 1e-2, 1e-3}, dev;
    for (double lam : lams)
        dev.push_back(std::abs(smatrix_nc(0, 0.7, {lam, 1.0, 0.0}).phase_shift - smatrix_qm(0, 0.7, 1.0).phase_shift));
    double const order = slope(lams, dev);
    bool const ok = unit < 1e-12 && pole < 1e-12 && order >= 1.8 && order <= 2.2;
    return {ok, fmt("||S|-1| = %.1e, pole rel %.1e, phase order %.3f", unit, pole, order)};
}

Outcome normal_ordering()
{
    unsigned const top = 20;
    Params const p{0.3, 1.0, 0.0};
    FuzzySpace const space(top);
    std::vector<cplx> const betas{0.7, -0.4, cplx(1.3, 0.5), 2.5, cplx(0, 0.05)};
    double exp_dev = 0, pow_dev = 0;
    auto const& f = *space.fock();
    for (cplx b : betas)
    {
        exp_dev = std::max(exp_dev, op_rel(normal_ordered_exp_series(b, space, p), normal_ordered_exp(b, space, p), 0));
        for (int n : {1, 2, 3, -1, -2, -3})
        {
            auto const m = normal_power_exp_series(n, b, space, p);
            double dev = 0, scale = 0;
            for (std::size_t i = 0; i < f.dim(); ++i)
            {
                if (f.level(i) + m.pollution() > top)
                    continue;
                cplx const want = normal_power_exp_closed(n, b, f.level(i), p.lambda);
                dev = std::max(dev, std::abs(m(i, i) - want));
                scale = std::max(scale, std::abs(want));
            }
            pow_dev = std::max(pow_dev, dev / scale);
        }
    }
    return {exp_dev < 1e-13 && pow_dev < 1e-12,
            fmt(":e^{βϱ}: vs series %.1e (< 1e-13); :ϱ^{±n} e^{βϱ}: vs matrices %.1e (< 1e-12)", exp_dev, pow_dev)};
}

Outcome asymptotic_closure()
{
    Params const p{0.5, 1.0, 0.0};
    double closure = 0, prefactor = 0;
    for (double lp = 0.6; lp <= 0.9 + 1e-12; lp += 0.05)
        for (bool lower : {false, true})
        {
            double const s = std::sqrt(1 - lp * lp);
            double const E = (1 + (lower ? s : -s)) / (p.lambda * p.lambda);
            for (unsigned j = 0; j <= 2; ++j)
            {
                auto const R = radial_closed_form(j, E, p, 40);
                for (unsigned n = 20; n <= 40; ++n)
                {
                    auto const t = asymptotic_decomposition(j, E, p, n);
                    closure = std::max(closure, std::abs(t.term_in + t.term_out - R.values[n]) / std::abs(R.values[n]));
                }
                auto const c = prefactor_via_lngamma(j, E, p, 40);
                prefactor = std::max(prefactor, std::abs(c.bernoulli - c.exact) / std::abs(c.exact));
            }
        }
    return {closure < 1e-8 && prefactor < 1e-8,
            fmt("closure max rel %.1e (< 1e-8); Bernoulli vs Γ-ratio prefactor %.1e (< 1e-8)", closure, prefactor)};
}

Outcome self_energy()
{
    auto const s = self_energy_trace(2000, {1.0, 1.0, 0.0});
    double const gap = std::abs(s.trace - s.target) / s.target;
    auto const l0 = lambda0_estimate(load_constants());
    double const off = std::abs(l0.lambda0 / 1.06e-15 - 1);
    return {gap < 1e-3 && off < 1e-2, fmt("trace rel gap %.2e (< 1e-3); λ₀ = %.4e m (%.2e from 1.06 fm)", gap, l0.lambda0, off)};
}

Outcome angular()
{
    unsigned const top = 12;
    Params const p{0.4, 1.0, 0.0};
    FuzzySpace const space(top);
    double worst = 0;
    for (unsigned j = 0; j <= 3; ++j)
    {
        RadialSeq r{j, std::vector<cplx>(top - j + 1), RadialSource::User};
        for (unsigned N = 0; N < r.values.size(); ++N)
            r.values[N] = cplx(std::exp(-0.25 * N), 0.1 * N);
        for (int m = -int(j); m <= int(j); ++m)
        {
            WaveOperator const psi = build_psi_jm(j, m, r, space, p);
            double const scale = psi.op.max_abs(0);
            worst = std::max(worst, angular_momentum_sq_apply(psi, space).op.max_abs_diff(double(j * (j + 1)) * psi.op, 0) / scale);
            worst = std::max(worst, angular_momentum_apply(psi, 3, space).op.max_abs_diff(double(m) * psi.op, 0) / scale);
        }
    }
    return {worst < 1e-12, fmt("j <= 3, all m, n_max = 12: max deviation %.2e (< 1e-12)", worst)};
}

Outcome norms()
{
    unsigned const top = 14;
    FuzzySpace const space(top);
    struct Case
    {
        unsigned j;
        int m;
        double lambda;
    };
    Case const cases[] = {{0, 0, 0.3}, {0, 0, 1.7}, {1, 1, 0.5}, {1, -1, 0.5}, {1, 0, 2.0},
                          {2, 2, 0.4}, {2, -1, 0.9}, {3, 0, 0.6}, {3, -3, 1.2}, {5, 2, 0.8}};
    double worst = 0;
    for (auto const& c : cases)
    {
        Params const p{c.lambda, 1.0, 0.0};
        RadialSeq r{c.j, std::vector<cplx>(top - c.j + 1), RadialSource::User};
        for (unsigned N = 0; N < r.values.size(); ++N)
            r.values[N] = std::exp(cplx(-0.2 * N, 0.4 * N + c.m));
        double const hs = hs_norm_sq(build_psi_jm(c.j, c.m, r, space, p), p).norm_sq;
        worst = std::max(worst, std::abs(hs - radial_norm_sq(c.j, c.m, r, p).value) / hs);
    }
    bool identity = true;
    for (unsigned j = 0; j <= 6; ++j)
        for (unsigned n = j; n <= 40; ++n)
            identity = identity && binomial_convolution(n, j) == binomial_exact(n + j + 1, 2 * j + 1);
    return {worst < 1e-12 && identity,
            fmt("10 Ψ_jm: trace vs radial sum %.2e (< 1e-12); ", worst)
                + (identity ? "binomial identity exact for j <= 6, n <= 40" : "binomial identity FAILED")};
}

Outcome potential()
{
    auto const v = laplace_potential_exact(100, Rational(3, 7), Rational(2, 5), Rational(5, 4));
    for (unsigned N = 0; N <= 100; ++N)
        if (v[N] != Rational(5, 4) - Rational(3, 7) / (Rational(2, 5) * (N + 1)))
            return {false, "mismatch at N = " + std::to_string(N)};
    return {true, "q = 3/7, λ = 2/5, q0 = 5/4, N <= 100: exact equality"};
}

Outcome verify_runtime()
{
    VerifyReport const rep = run_verify({});
    long failed = std::count_if(rep.checks.begin(), rep.checks.end(), [](auto const& c) { return !c.pass; });
    for (auto const& c : rep.checks)
        if (!c.pass)
            std::fprintf(stderr, "  verify failure: %s / %s %s\n", c.suite.c_str(), c.name.c_str(), c.detail.c_str());
    return {rep.seconds < 300 && failed == 0,
            fmt("%.0f checks, %.0f failed, %.1f s (< 300 s)", double(rep.checks.size()), double(failed), rep.seconds)};
}

}  // namespace

int main()
{
    struct Criterion
    {
        char const* title;
        std::function<Outcome()> run;
    };
    Criterion const criteria[] = {
        {"eigen-equation oracle", eigen_oracle},
        {"bound-state closed forms", closed_forms},
        {"commutative limit of the spectrum", commutative_spectrum},
        {"exact mirror symmetry", mirror_exact},
        {"S-matrix properties", smatrix_properties},
        {"normal-ordering identities", normal_ordering},
        {"asymptotic decomposition closure", asymptotic_closure},
        {"self-energy and λ₀", self_energy},
        {"angular structure", angular},
        {"norm consistency", norms},
        {"potential from the recurrence", potential},
        {"full verify runtime", verify_runtime},
    };

    int failed = 0, index = 0;
    for (auto const& c : criteria)
    {
        ++index;
        auto const t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (std::exception const& e)
        {
            o = {false, std::string("threw: ") + e.what()};
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("AC%02d %s  %s: %s [%.1f s]\n", index, o.pass ? "PASS" : "FAIL", c.title, o.summary.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed ? 1 : 0;
}
