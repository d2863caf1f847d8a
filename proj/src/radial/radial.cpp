#include "ncqm/radial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ncqm {

std::string_view to_string(RadialSource s)
{
    switch (s)
    {
    case RadialSource::NegativeE: return "negative-energy";
    case RadialSource::LowScattering: return "low-scattering";
    case RadialSource::EtaZero: return "eta-zero";
    case RadialSource::EtaOne: return "eta-one";
    case RadialSource::UltraHigh: return "ultra-high";
    case RadialSource::BoundI: return "bound-I";
    case RadialSource::BoundII: return "bound-II";
    case RadialSource::Recurrence: return "recurrence";
    case RadialSource::Potential: return "potential";
    case RadialSource::User: return "user";
    }
    return "?";
}

std::string_view to_string(Regime r)
{
    switch (r)
    {
    case Regime::NegativeE: return "NegativeE";
    case Regime::LowScattering: return "LowScattering";
    case Regime::EtaZero: return "EtaZero";
    case Regime::EtaOne: return "EtaOne";
    case Regime::UltraHigh: return "UltraHigh";
    }
    return "?";
}

EnergyContext classify(double E, Params const& params)
{
    params.validate();
    if (!std::isfinite(E))
        throw PreconditionError("classify: energy must be finite");
    double const lam = params.lambda;
    double const crit = 2 / (lam * lam);
    double const tol = 1e-14 * crit;

    EnergyContext ctx;
    ctx.E = E;
    ctx.k = std::sqrt(cplx(2 * E));
    ctx.eta = ctx.k * lam / 2.0;
    if (std::abs(E) <= tol)
    {
        ctx.regime = Regime::EtaZero;
        ctx.eta = 0;
    }
    else if (std::abs(E - crit) <= tol)
    {
        ctx.regime = Regime::EtaOne;
        ctx.eta = 1;
    }
    else if (E < 0)
        ctx.regime = Regime::NegativeE;
    else if (E < crit)
        ctx.regime = Regime::LowScattering;
    else
        ctx.regime = Regime::UltraHigh;
    return ctx;
}

Regime classify_exact(Rational const& E, Rational const& lambda)
{
    if (lambda <= 0)
        throw PreconditionError("classify_exact: lambda must be positive");
    Rational const crit = 2 / (lambda * lambda);
    if (E == 0)
        return Regime::EtaZero;
    if (E == crit)
        return Regime::EtaOne;
    if (E < 0)
        return Regime::NegativeE;
    return E < crit ? Regime::LowScattering : Regime::UltraHigh;
}

OdeCoefficients ode_coefficients(unsigned j, double E, Params const& params)
{
    params.validate();
    double const k2 = 2 * E;
    double const lam = params.lambda;
    OdeCoefficients c;
    c.a0 = 1;
    c.a1 = lam * k2;
    c.a2 = k2;
    c.b0 = 0;
    c.b1 = 2.0 * (j + 1);
    c.b2 = lam * k2 * (j + 1) + 2 * params.alpha;
    c.D_sq = c.a1 * c.a1 - 4.0 * c.a0 * c.a2;
    return c;
}

namespace {

RadialSeq geometric_times_levels(unsigned j, cplx w, cplx a, cplx z, unsigned n_max,
                                 RadialSource source)
{
    RadialSeq out{j, {}, source};
    LevelSums f = gauss_2f1_levels(a, cplx(2.0 * j + 2), z, n_max + 1);
    out.values = std::move(f.values);
    cplx power = 1;
    for (unsigned n = 0; n <= n_max; ++n)
    {
        out.values[n] *= power;
        power *= w;
    }
    return out;
}

RadialSource source_of(Regime r)
{
    switch (r)
    {
    case Regime::NegativeE: return RadialSource::NegativeE;
    case Regime::LowScattering: return RadialSource::LowScattering;
    case Regime::EtaZero: return RadialSource::EtaZero;
    case Regime::EtaOne: return RadialSource::EtaOne;
    case Regime::UltraHigh: return RadialSource::UltraHigh;
    }
    return RadialSource::User;
}

cplx degenerate_prefactor(unsigned j, double alpha)
{
    return -std::pow(cplx(2 * alpha), j + 0.5) / std::tgamma(2.0 * j + 2);
}

RadialSeq degenerate(unsigned j, Params const& params, unsigned n_max, bool eta_one)
{
    params.validate();
    double const x = 2 * params.alpha * params.lambda * (eta_one ? -1 : 1);
    cplx const pre = degenerate_prefactor(j, params.alpha);
    cplx const c(2.0 * j + 2);
    RadialSeq out{j, std::vector<cplx>(n_max + 1),
                  eta_one ? RadialSource::EtaOne : RadialSource::EtaZero};
    for (unsigned n = 0; n <= n_max; ++n)
    {
        cplx v = pre * kummer_1f1(cplx(-double(n)), c, cplx(x));
        out.values[n] = eta_one && n % 2 ? -v : v;
    }
    return out;
}

double max_abs(std::vector<cplx> const& v)
{
    double m = 0;
    for (auto const& x : v)
        m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

RadialSeq radial_eta_zero(unsigned j, Params const& params, unsigned n_max)
{
    return degenerate(j, params, n_max, false);
}

RadialSeq radial_eta_one(unsigned j, Params const& params, unsigned n_max)
{
    return degenerate(j, params, n_max, true);
}

RadialSeq radial_generic(unsigned j, cplx eta, Params const& params, unsigned n_max,
                         Branch branch)
{
    params.validate();
    double const sigma = branch == Branch::Plus ? 1 : -1;
    cplx const t = eta * std::sqrt(eta * eta - 1.0);
    if (t == cplx(0))
        throw RegimeError("radial_generic: η = 0 or η = 1 has no two-sign form");
    cplx const w = 1.0 + 2 * sigma * t - 2.0 * eta * eta;
    cplx const a = double(j + 1) + sigma * params.alpha * params.lambda / (2.0 * t);
    cplx const z = 4 * sigma * t / w;
    EnergyContext ctx = classify((2.0 * eta * eta / (params.lambda * params.lambda)).real(), params);
    return geometric_times_levels(j, w, a, z, n_max, source_of(ctx.regime));
}

RadialSeq radial_closed_form(unsigned j, double E, Params const& params, unsigned n_max,
                             Branch branch)
{
    EnergyContext const ctx = classify(E, params);
    double const lam = params.lambda;
    double const alpha = params.alpha;

    switch (ctx.regime)
    {
    case Regime::EtaZero: return radial_eta_zero(j, params, n_max);
    case Regime::EtaOne: return radial_eta_one(j, params, n_max);
    default: break;
    }

    double const near = 1e-8;
    double const eta_abs = std::abs(ctx.eta);
    bool const near_zero = eta_abs < near;
    bool const near_one = std::abs(eta_abs - 1) < near;
    if (near_zero || near_one)
    {
        RadialSeq gen = radial_generic(j, ctx.eta, params, n_max, branch);
        RadialSeq deg = near_zero ? radial_eta_zero(j, params, n_max)
                                  : radial_eta_one(j, params, n_max);
        cplx const pre = degenerate_prefactor(j, alpha);
        double dev = 0;
        for (unsigned n = 0; n <= n_max; ++n)
            dev = std::max(dev, std::abs(gen.values[n] * pre - deg.values[n]));
        // The general form differs from its limit by first order in the
        // small parameter (η, or √(η²-1) near η = 1), growing with N.
        double const small =
            near_zero ? eta_abs : std::sqrt(std::abs(ctx.eta * ctx.eta - 1.0));
        double const scale = std::max(max_abs(deg.values), 1e-300);
        if (dev > 10 * (n_max + 1) * (n_max + 1) * small * scale + 1e-10 * scale)
            throw ConvergenceError("radial_closed_form: general and degenerate forms disagree by "
                                   + std::to_string(dev / scale) + " near a regime boundary");
        return deg;
    }

    if (branch == Branch::Minus)
        return radial_generic(j, ctx.eta, params, n_max, Branch::Minus);

    switch (ctx.regime)
    {
    case Regime::NegativeE:
    {
        double const h = lam * std::sqrt(-2 * E) / 2;
        double const q = std::sqrt(1 + h * h);
        // 1 - 2hq + 2h² = (q - h)², written without cancellation
        double const w = 1 / ((q + h) * (q + h));
        return geometric_times_levels(j, w, double(j + 1) - alpha * lam / (2 * h * q),
                                      -4 * h * q / w, n_max, RadialSource::NegativeE);
    }
    case Regime::UltraHigh:
    {
        double const h = lam * std::sqrt(2 * E) / 2;
        double const s = std::sqrt(h * h - 1);
        // 1 + 2hs - 2h² = -(h - s)²
        double const w = -1 / ((h + s) * (h + s));
        return geometric_times_levels(j, w, double(j + 1) + alpha * lam / (2 * h * s),
                                      4 * h * s / w, n_max, RadialSource::UltraHigh);
    }
    case Regime::LowScattering:
    {
        double const p = std::sqrt(2 * E * (1 - lam * lam * E / 2));
        cplx const w = cplx(p, lam * E) / cplx(p, -lam * E);
        return geometric_times_levels(j, w, cplx(j + 1, -alpha / p), cplx(0, 2 * lam * p) / w,
                                      n_max, RadialSource::LowScattering);
    }
    default: break;
    }
    throw RegimeError("radial_closed_form: unhandled regime");
}

std::vector<Rational> radial_closed_form_exact(unsigned j, Rational const& E,
                                               Rational const& lambda, Rational const& alpha,
                                               unsigned n_max, Branch branch)
{
    Regime const regime = classify_exact(E, lambda);
    if (regime != Regime::NegativeE && regime != Regime::UltraHigh)
        throw RegimeError("radial_closed_form_exact: needs E < 0 or E > 2/λ²");
    Rational const eta2 = E * lambda * lambda / 2;
    auto root = exact_sqrt(eta2 * (eta2 - 1));
    if (!root)
        throw PreconditionError("radial_closed_form_exact: η²(η²-1) is not a rational square");
    // ηs with the principal root: negative below zero energy, positive above 2/λ²
    Rational const t = regime == Regime::NegativeE ? Rational(-*root) : *root;
    int const sigma = branch == Branch::Plus ? 1 : -1;
    Rational const w = 1 + 2 * sigma * t - 2 * eta2;
    Rational const a = Rational(j + 1) + sigma * alpha * lambda / (2 * t);
    Rational const z = 4 * sigma * t / w;
    Rational const c(2 * j + 2);

    std::vector<Rational> out(n_max + 1);
    Rational power = 1;
    for (unsigned n = 0; n <= n_max; ++n)
    {
        out[n] = power * gauss_2f1_exact(a, n, c, z);
        power *= w;
    }
    return out;
}

cplx commutative_radial(unsigned j, double E, double alpha, double r)
{
    if (!(E > 0))
        throw PreconditionError("commutative_radial: needs E > 0");
    double const k = std::sqrt(2 * E);
    return std::exp(cplx(0, k * r))
           * kummer_1f1(cplx(j + 1, -alpha / k), cplx(2.0 * j + 2), cplx(0, -2 * k * r));
}

double commutative_bound_radial(unsigned n, unsigned j, double alpha, double r)
{
    if (n < j + 1)
        throw PreconditionError("commutative_bound_radial: needs n >= j + 1");
    double const x = alpha * r / n;
    return std::exp(-x)
           * kummer_1f1(cplx(double(j + 1) - n), cplx(2.0 * j + 2), cplx(2 * x)).real();
}

RadialSeq radial_from_recurrence(unsigned j, double E, Params const& params, unsigned n_max)
{
    params.validate();
    if (n_max < 1)
        throw PreconditionError("radial_from_recurrence: needs n_max >= 1");
    RadialStencil const& st = radial_stencil(j, n_max);
    double const lam = params.lambda;

    RadialSeq out{j, std::vector<cplx>(n_max + 1), RadialSource::Recurrence};
    out.values[0] = radial_closed_form(j, E, params, 0).values[0];
    for (unsigned n = 0; n < n_max; ++n)
    {
        if (st.upper[n] == 0)
            throw BreakdownError("radial_from_recurrence: leading coefficient vanished", n);
        cplx const prev = n > 0 ? out.values[n - 1] : cplx(0);
        cplx const rhs = lam * (2 * params.alpha + 2 * E * lam * st.r_over_lambda[n]) * out.values[n]
                         - st.lower[n] * prev - st.diag[n] * out.values[n];
        out.values[n + 1] = rhs / st.upper[n];
    }
    return out;
}

std::vector<double> recurrence_residual(RadialSeq const& radial, double E, Params const& params)
{
    params.validate();
    std::vector<double> res;
    if (radial.values.size() < 2)
        return res;
    unsigned const levels = unsigned(radial.values.size() - 1);
    RadialStencil const& st = radial_stencil(radial.j, levels);
    double const lam = params.lambda;
    auto const& R = radial.values;
    for (unsigned n = 0; n < levels; ++n)
    {
        cplx const terms[] = {
            n > 0 ? st.lower[n] * R[n - 1] / lam : cplx(0),
            st.diag[n] * R[n] / lam,
            st.upper[n] * R[n + 1] / lam,
            -(2 * params.alpha + 2 * E * lam * st.r_over_lambda[n]) * R[n],
        };
        cplx sum = 0;
        double scale = 0;
        for (auto t : terms)
        {
            sum += t;
            scale = std::max(scale, std::abs(t));
        }
        res.push_back(scale > 0 ? std::abs(sum) / scale : 0.0);
    }
    return res;
}

}  // namespace ncqm
