#include "ncqm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "ncqm/radial.hpp"

namespace ncqm {

std::string_view to_string(BoundBranch b)
{
    return b == BoundBranch::I ? "I" : "II";
}

namespace {

EnergyLevel make_level(BoundBranch branch, unsigned n, unsigned j, Params const& params)
{
    EnergyLevel lv;
    lv.branch = branch;
    lv.n = n;
    lv.j = j;
    lv.lambda = params.lambda;
    lv.alpha = params.alpha;
    lv.kappa = params.lambda * params.alpha / n;
    double const c = std::hypot(1.0, lv.kappa);
    double const l2 = params.lambda * params.lambda;
    // c - |κ| written without cancellation
    lv.omega = 1 / (c + std::abs(lv.kappa));
    if (branch == BoundBranch::I)
        lv.E = -(params.alpha * params.alpha / (double(n) * n)) / (1 + c);
    else
        lv.E = (1 + c) / l2;
    return lv;
}

}  // namespace

std::vector<EnergyLevel> bound_energies_I(Params const& params, unsigned j, unsigned n_count)
{
    params.validate();
    if (!(params.alpha > 0))
        throw PreconditionError("bound_energies_I: needs alpha > 0");
    std::vector<EnergyLevel> out;
    for (unsigned n = j + 1; n <= j + n_count; ++n)
        out.push_back(make_level(BoundBranch::I, n, j, params));
    return out;
}

std::vector<EnergyLevel> bound_energies_II(Params const& params, unsigned j, unsigned n_count)
{
    params.validate();
    if (!(params.alpha < 0))
        throw PreconditionError("bound_energies_II: needs alpha < 0");
    std::vector<EnergyLevel> out;
    for (unsigned n = j + 1; n <= j + n_count; ++n)
        out.push_back(make_level(BoundBranch::II, n, j, params));
    return out;
}

std::vector<EnergyLevel> bound_energies(Params const& params, unsigned j, unsigned n_count)
{
    if (params.alpha == 0)
        throw PreconditionError("bound_energies: alpha = 0 has no bound states");
    return params.alpha > 0 ? bound_energies_I(params, j, n_count)
                            : bound_energies_II(params, j, n_count);
}

double bohr_energy(unsigned n, double alpha)
{
    return -alpha * alpha / (2.0 * n * n);
}

double bohr_lambda2_coefficient(unsigned n, double alpha)
{
    double const n2 = double(n) * n;
    return std::pow(alpha, 4) / (8 * n2 * n2);
}

std::vector<EnergyLevel> termination_roots(unsigned j, Params const& params, unsigned n_count)
{
    params.validate();
    if (params.alpha == 0)
        throw PreconditionError("termination_roots: alpha = 0 has no bound states");
    bool const attractive = params.alpha > 0;
    double const lam = params.lambda;
    double const crit = 2 / (lam * lam);

    std::vector<EnergyLevel> out;
    for (auto const& guess : bound_energies(params, j, n_count))
    {
        unsigned const n = guess.n;
        // n - αλ/(2ηs): the first 2F1 parameter j+1-αλ/(2ηs) equals j+1-n
        auto g = [&](double E) {
            double const h = lam * std::sqrt(std::abs(2 * E)) / 2;
            double const s = attractive ? std::sqrt(h * h + 1) : std::sqrt(h * h - 1);
            return attractive ? n - params.alpha * lam / (2 * h * s)
                              : n + params.alpha * lam / (2 * h * s);
        };
        double lo = attractive ? 1.1 * guess.E : std::max(0.9 * guess.E, crit * (1 + 1e-12));
        double hi = attractive ? 0.9 * guess.E : 1.1 * guess.E;
        double glo = g(lo), ghi = g(hi);
        if (!(glo * ghi < 0))
            throw NoRootError("termination_roots: no sign change for n = " + std::to_string(n));

        auto const [a, b] = boost::math::tools::bisect(
            g, lo, hi, boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 3));
        // secant polish from the final bracket, kept inside it
        double x0 = a, x1 = b, g0 = g(a), g1 = g(b);
        for (int it = 0; it < 4 && g1 != g0 && g1 != 0; ++it)
        {
            double const x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
            if (!(x2 >= std::min(a, b) && x2 <= std::max(a, b)))
                break;
            x0 = x1;
            g0 = g1;
            x1 = x2;
            g1 = g(x1);
        }
        EnergyLevel lv = guess;
        lv.E = std::abs(g1) <= std::abs(g(a)) ? x1 : a;
        out.push_back(lv);
    }
    return out;
}

RadialSeq bound_wavefunction(EnergyLevel const& level, unsigned n_max)
{
    if (level.n < level.j + 1)
        throw PreconditionError("bound_wavefunction: needs n >= j + 1");
    bool const one = level.branch == BoundBranch::I;
    double const base = one ? level.omega : -level.omega;
    double const z = (one ? -2 : 2) * level.kappa / level.omega;
    RadialSeq out{level.j, {}, one ? RadialSource::BoundI : RadialSource::BoundII};
    out.values = gauss_2f1_levels(cplx(double(level.j + 1) - level.n), cplx(2.0 * level.j + 2),
                                  cplx(z), n_max + 1)
                     .values;
    double power = 1;
    for (auto& v : out.values)
    {
        v *= power;
        power *= base;
    }
    return out;
}

std::vector<Rational> bound_wavefunction_exact(BoundBranch branch, unsigned n, unsigned j,
                                               Rational const& kappa, unsigned n_max)
{
    if (n < j + 1)
        throw PreconditionError("bound_wavefunction_exact: needs n >= j + 1");
    bool const one = branch == BoundBranch::I;
    if (one ? kappa <= 0 : kappa >= 0)
        throw PreconditionError("bound_wavefunction_exact: kappa sign does not match the branch");
    auto c = exact_sqrt(1 + kappa * kappa);
    if (!c)
        throw PreconditionError("bound_wavefunction_exact: 1 + kappa² is not a rational square");
    Rational const omega = *c - abs(kappa);
    Rational const base = one ? omega : Rational(-omega);
    Rational const z = (one ? -2 : 2) * kappa / omega;
    Rational const a = Rational(j + 1) - n;
    std::vector<Rational> out(n_max + 1);
    Rational power = 1;
    for (unsigned N = 0; N <= n_max; ++N)
    {
        out[N] = power * gauss_2f1_exact(a, N, Rational(2 * j + 2), z);
        power *= base;
    }
    return out;
}

MirrorReport mirror_check(unsigned n, unsigned j, Rational const& kappa, unsigned n_max)
{
    if (kappa <= 0)
        throw PreconditionError("mirror_check: needs kappa > 0");
    auto c = exact_sqrt(1 + kappa * kappa);
    if (!c)
        throw PreconditionError("mirror_check: 1 + kappa² is not a rational square");
    Rational const lambda = 1;
    Rational const alpha = kappa * n / lambda;
    Rational const e1 = (1 - *c) / (lambda * lambda);
    Rational const e2 = (1 + *c) / (lambda * lambda);
    auto const r1 = radial_closed_form_exact(j, e1, lambda, alpha, n_max, Branch::Plus);
    auto const r2 = radial_closed_form_exact(j, e2, lambda, -alpha, n_max, Branch::Plus);
    MirrorReport rep{true, 0};
    for (unsigned N = 0; N <= n_max; ++N)
        if (r2[N] != (N % 2 ? Rational(-r1[N]) : r1[N]))
            rep.equal = false;
    if (!rep.equal)
        rep.max_deviation = std::numeric_limits<double>::infinity();
    return rep;
}

MirrorReport mirror_check(unsigned n, unsigned j, double kappa, unsigned n_max)
{
    if (!(kappa > 0))
        throw PreconditionError("mirror_check: needs kappa > 0");
    double const c = std::hypot(1.0, kappa);
    Params one{1.0, kappa * n, 0.0};
    Params two{1.0, -kappa * n, 0.0};
    auto const r1 = radial_closed_form(j, -kappa * kappa / (1 + c), one, n_max);
    auto const r2 = radial_closed_form(j, 1 + c, two, n_max);
    double scale = 0, dev = 0;
    for (unsigned N = 0; N <= n_max; ++N)
    {
        scale = std::max(scale, std::abs(r1.values[N]));
        dev = std::max(dev, std::abs(r2.values[N] - (N % 2 ? -r1.values[N] : r1.values[N])));
    }
    MirrorReport rep;
    rep.max_deviation = scale > 0 ? dev / scale : dev;
    rep.equal = rep.max_deviation < 1e-12;
    return rep;
}

RadialNorm radial_norm_sq(unsigned j, RadialSeq const& radial, Params const& params)
{
    return radial_norm_sq(j, int(j), radial, params);
}

RadialNorm radial_norm_sq(unsigned j, int m, RadialSeq const& radial, Params const& params)
{
    params.validate();
    if (m < -int(j) || m > int(j))
        throw PreconditionError("radial_norm_sq: |m| > j");
    double const jf = std::tgamma(j + 1.0);
    double const pre = 4 * std::numbers::pi * std::pow(params.lambda, 3 + 2 * int(j)) / (jf * jf)
                       * binomial_exact(2 * j, j - m).convert_to<double>();

    RadialNorm out;
    double sum = 0, prev = 0, ratio = 0;
    unsigned const k = 2 * j + 1;
    for (std::size_t N = 0; N < radial.values.size(); ++N)
    {
        // C(N+k, k) by its product, exact for the sizes used here
        double binom = 1;
        for (unsigned i = 1; i <= k; ++i)
            binom = binom * double(N + i) / i;
        double const term = (N + j + 1.0) * binom * std::norm(radial.values[N]);
        sum += term;
        ++out.terms;
        if (N > 0 && prev > 0)
            ratio = term / prev;
        prev = term;
        if (N >= 2 && ratio < 1 && term < 1e-16 * sum && term * ratio / (1 - ratio) < 1e-14 * sum)
        {
            out.converged = true;
            break;
        }
    }
    out.value = pre * sum;
    if (out.converged || ratio < 1)
        out.tail = pre * prev * ratio / (1 - ratio);
    else
        out.tail = std::numeric_limits<double>::infinity();
    if (!out.converged && ratio < 1 && out.tail < 1e-14 * out.value)
        out.converged = true;
    return out;
}

SelfEnergy self_energy_trace(unsigned n_max, Params const& params)
{
    params.validate();
    if (n_max < 2)
        throw PreconditionError("self_energy_trace: needs n_max >= 2");
    double const lam = params.lambda, q = params.alpha;
    double const l3 = lam * lam * lam;
    SelfEnergy out;
    // Smallest terms first keeps the rounding below the tail.
    for (unsigned n = n_max; n >= 1; --n)
    {
        // Σ_j Σ_k |(x_j)_{k,i}|² over the level: x₁, x₂ move one quantum
        // between the modes, x₃ is diagonal.
        double xsq = 0;
        for (unsigned n1 = 0; n1 <= n; ++n1)
        {
            double const n2 = n - n1;
            xsq += 2 * ((n1 + 1.0) * n2 + n1 * (n2 + 1.0)) + (n1 - n2) * (n1 - n2);
        }
        xsq *= lam * lam;
        double const denom = double(n) * (n + 1.0) * (n + 2.0);
        double const field_sq = q * q / (l3 * l3) * xsq / (denom * denom);
        out.trace += l3 / 2 * (n + 1.0) * field_sq;
    }
    out.target = 3 * q * q / (8 * lam);
    out.tail = q * q / (4 * lam) * (1.0 / (n_max + 1.0) + 1.0 / (n_max + 2.0));
    return out;
}

}  // namespace ncqm
