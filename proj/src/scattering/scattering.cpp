#include "ncqm/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ncqm/bernoulli.hpp"
#include "ncqm/radial.hpp"

namespace ncqm {

namespace {

constexpr cplx I(0, 1);
constexpr double pi = std::numbers::pi;

cplx lgam(cplx z)
{
    return log_gamma<double>(z);
}

}  // namespace

std::string_view to_string(Edge e)
{
    switch (e)
    {
    case Edge::Upper: return "upper";
    case Edge::Lower: return "lower";
    case Edge::OffCut: return "off-cut";
    }
    return "?";
}

Momentum p_of_E(double E, Params const& params)
{
    params.validate();
    double const l2 = params.lambda * params.lambda;
    double const f = E * (2 - l2 * E);
    Momentum m;
    if (f >= 0)
    {
        m.p = std::sqrt(f);
        m.edge = E * l2 <= 1 ? Edge::Upper : Edge::Lower;
    }
    else
    {
        // E + i0 below zero lands on +i|p|, above 2/λ² on -i|p|
        m.p = cplx(0, E < 0 ? std::sqrt(-f) : -std::sqrt(-f));
        m.edge = Edge::OffCut;
    }
    return m;
}

Momentum p_of_E(cplx E, Params const& params)
{
    if (E.imag() == 0)
        return p_of_E(E.real(), params);
    params.validate();
    double const l2 = params.lambda * params.lambda;
    return {std::sqrt(E * (2.0 - l2 * E)), Edge::OffCut};
}

cplx E_of_p(Momentum const& m, Params const& params)
{
    params.validate();
    double const l2 = params.lambda * params.lambda;
    cplx const s = std::sqrt(l2 * m.p * m.p - 1.0);
    cplx const cand[2] = {(1.0 + I * s) / l2, (1.0 - I * s) / l2};

    double const tol = 1e-13 / l2;
    if (std::abs(cand[0].imag() - cand[1].imag()) > tol)
        return cand[0].imag() > cand[1].imag() ? cand[0] : cand[1];

    // Both real: keep the one whose momentum and edge reproduce the input.
    int best = 0;
    double best_score = INFINITY;
    for (int k = 0; k < 2; ++k)
    {
        Momentum const back = p_of_E(cand[k].real(), params);
        double score = std::abs(back.p - m.p);
        if (m.edge != Edge::OffCut && back.edge != m.edge)
            score += 1;
        if (score < best_score)
        {
            best_score = score;
            best = k;
        }
    }
    return cand[best].real();
}

SMatrixValue smatrix_at_momentum(unsigned j, cplx p, double alpha)
{
    if (alpha == 0)
        return {1.0, 0.0};
    if (p == cplx(0))
        throw PreconditionError("smatrix: p = 0 with alpha != 0");
    cplx const a = alpha / p;
    cplx const lower = double(j + 1) - I * a;
    cplx const upper = double(j + 1) + I * a;
    long k = 0;
    if (is_nonpositive_integer(lower, &k))
        throw PoleError("smatrix: pole at j+1-iα/p = -" + std::to_string(k));
    if (is_nonpositive_integer(upper))
        return {0.0, 0.0};
    cplx const lg = lgam(lower) - lgam(upper);
    return {std::exp(lg), lg.imag() / 2};
}

SMatrixValue smatrix_nc(unsigned j, cplx E, Params const& params)
{
    return smatrix_at_momentum(j, p_of_E(E, params).p, params.alpha);
}

SMatrixValue smatrix_qm(unsigned j, double E, double alpha)
{
    if (!(E > 0))
        throw PreconditionError("smatrix_qm: needs E > 0");
    return smatrix_at_momentum(j, std::sqrt(2 * E), alpha);
}

PhaseSweep unwrap_phases(std::vector<SMatrixValue> values)
{
    PhaseSweep out;
    double offset = 0, previous = values.empty() ? 0 : values[0].phase_shift;
    for (std::size_t i = 1; i < values.size(); ++i)
    {
        double const raw = values[i].phase_shift;
        double const shift = std::round((raw - previous) / pi);
        previous = raw;
        if (shift != 0)
        {
            offset -= shift * pi;
            out.flagged.push_back(i);
        }
        values[i].phase_shift += offset;
    }
    out.values = std::move(values);
    return out;
}

PhaseSweep smatrix_sweep_nc(unsigned j, std::vector<double> const& energies, Params const& params)
{
    std::vector<SMatrixValue> v;
    for (double E : energies)
        v.push_back(smatrix_nc(j, E, params));
    return unwrap_phases(std::move(v));
}

PhaseSweep smatrix_sweep_qm(unsigned j, std::vector<double> const& energies, double alpha)
{
    std::vector<SMatrixValue> v;
    for (double E : energies)
        v.push_back(smatrix_qm(j, E, alpha));
    return unwrap_phases(std::move(v));
}

std::vector<double> pole_energies(unsigned j, Params const& params, unsigned count)
{
    params.validate();
    if (params.alpha == 0)
        throw PreconditionError("pole_energies: alpha = 0 has no poles");
    std::vector<double> out;
    for (unsigned n = j + 1; n <= j + count; ++n)
        out.push_back(E_of_p({cplx(0, params.alpha / n), Edge::OffCut}, params).real());
    return out;
}

namespace {

struct Kinematics
{
    double p;  // signed
    double a;  // α/p
    cplx u;    // (p - iλE)/(p + iλE)
    double ratio;
};

Kinematics kinematics(double E, Params const& params, char const* who, bool series)
{
    params.validate();
    double const lam = params.lambda;
    if (!(E > 0 && E * lam * lam < 2))
        throw RegimeError(std::string(who) + ": needs 0 < E < 2/λ²");
    Momentum const m = p_of_E(E, params);
    double const p = m.edge == Edge::Lower ? -m.p.real() : m.p.real();
    Kinematics k{p, params.alpha / p, cplx(p, -lam * E) / cplx(p, lam * E),
                 1 / (2 * lam * std::abs(p))};
    // The series converge geometrically with ratio |z|; past 0.95 they need
    // thousands of terms and lose the accuracy the closure test relies on.
    if (series && !(k.ratio < 0.95))
        throw ConvergenceError(std::string(who) + ": 2F1 argument |z| = " + std::to_string(k.ratio)
                               + " is outside the monitored region |z| < 0.95");
    return k;
}

// Log of the Γ-ratio prefactor multiplying the incoming 2F1 at level n.
cplx log_prefactor_in(unsigned j, Kinematics const& k, double lam, unsigned n)
{
    double const jp = j + 1.0;
    cplx const lead = I * pi * (jp + I * k.a) + lgam(2 * jp) + lgam(n + 1.0)
                      - lgam(jp - I * k.a) - lgam(jp + 1 + I * k.a + double(n));
    return lead + (-jp - I * k.a) * std::log(2.0 * I * lam * k.p / k.u);
}

}  // namespace

AsymptoticTerms asymptotic_decomposition(unsigned j, double E, Params const& params, unsigned n)
{
    Kinematics const k = kinematics(E, params, "asymptotic_decomposition", true);
    double const lam = params.lambda;
    double const jp = j + 1.0;
    cplx const ia = I * k.a;

    cplx const un = std::pow(k.u, int(n));
    cplx const z_in = -k.u / (2.0 * I * lam * k.p);
    cplx const z_out = 1.0 / (2.0 * I * lam * k.p * k.u);
    cplx const f_in = gauss_2f1<double>(jp + ia, -double(j) + ia, double(n) + jp + 1 + ia, z_in);
    cplx const f_out = gauss_2f1<double>(jp - ia, -double(j) - ia, double(n) + jp + 1 - ia, z_out);

    cplx const log_out = I * pi * (-jp + ia) + lgam(2 * jp) + lgam(n + 1.0) - lgam(jp + ia)
                         - lgam(jp + 1 - ia + double(n))
                         + (-jp + ia) * std::log(-2.0 * I * lam * k.p * k.u);

    AsymptoticTerms t;
    t.term_in = std::exp(log_prefactor_in(j, k, lam, n)) * un * f_in;
    t.term_out = std::exp(log_out) / un * f_out;
    cplx const common = (j % 2 ? 1.0 : -1.0) * std::exp(-pi * k.a / 2 + lgam(2 * jp));
    t.coeff_in = common * std::pow(I, -int(j) - 1) * std::exp(-lgam(jp - ia));
    t.coeff_out = common * std::pow(I, int(j) + 1) * std::exp(-lgam(jp + ia));
    t.p = k.p;
    t.series_ratio = k.ratio;
    return t;
}

PrefactorComparison prefactor_via_lngamma(unsigned j, double E, Params const& params, unsigned n,
                                          unsigned max_terms)
{
    Kinematics const k = kinematics(E, params, "prefactor_via_lngamma", false);
    double const lam = params.lambda;
    double const jp = j + 1.0;
    double const r = lam * (n + 1.0);
    cplx const ia = I * k.a;
    cplx const A = jp + ia;

    // Σ (-1)^{m+1} (λ/r)^m (B_{m+1}(A) - B_{m+1}(0))/(m(m+1)), cut at its smallest term
    auto const& bern = BernoulliTable::instance();
    unsigned const cap = std::min(max_terms, bern.max_degree() - 1);
    cplx bsum = 0;
    double x = 1, last = INFINITY;
    PrefactorComparison out;
    out.truncation = 0;
    for (unsigned m = 1; m <= cap + 1; ++m)
    {
        x *= lam / r;
        if (m + 1 > bern.max_degree())
            break;
        cplx const term = (m % 2 ? 1.0 : -1.0) * x
                          * (bern.evaluate<double>(m + 1, A) - bern.number(m + 1).convert_to<double>())
                          / (double(m) * (m + 1));
        if (m > cap || std::abs(term) > last)
        {
            out.truncation = std::abs(term);
            break;
        }
        bsum += term;
        last = std::abs(term);
        out.terms = m;
    }
    // Stopped by the table size: the next term is about λ/r of the last.
    if (out.truncation == 0 && out.terms > 0)
        out.truncation = last * lam / r;

    cplx const sign = (j % 2 ? 1.0 : -1.0) * std::pow(I, -int(j) - 1);
    cplx log_b = -pi * k.a / 2 + lgam(2 * jp) - lgam(jp - ia) - ia * std::log(cplx(2 * k.p * r))
                 - (r / lam + double(j) + ia) * std::log(1.0 / k.u) - bsum;
    out.bernoulli = sign * std::exp(log_b) / std::pow(cplx(2 * k.p * r), int(j) + 1);
    out.exact = std::exp(log_prefactor_in(j, k, lam, n)) * std::pow(k.u, int(n));
    return out;
}

ScatteringMirror scattering_mirror_check(unsigned j, double eps, Params const& params,
                                         unsigned n_max)
{
    params.validate();
    double const lam = params.lambda;
    double const mid = 1 / (lam * lam);
    if (!(eps > 0 && eps < mid))
        throw PreconditionError("scattering_mirror_check: needs 0 < eps < 1/λ²");
    double const e1 = mid - eps, e2 = mid + eps;
    double const p1 = p_of_E(e1, params).p.real();
    double const p2 = -p_of_E(e2, params).p.real();

    RadialSeq const r1 = radial_closed_form(j, e1, params, n_max);
    // the repulsive partner at the signed momentum of the lower edge
    cplx const w2 = cplx(p2, lam * e2) / cplx(p2, -lam * e2);
    auto r2 = gauss_2f1_levels(double(j + 1) + I * params.alpha / p2, 2.0 * j + 2,
                               2.0 * I * lam * p2 / w2, n_max + 1)
                  .values;

    ScatteringMirror out;
    double scale = 0, dev = 0;
    cplx power = 1;
    for (unsigned N = 0; N <= n_max; ++N)
    {
        cplx const v2 = power * r2[N];
        power *= w2;
        cplx const v1 = N % 2 ? -r1.values[N] : r1.values[N];
        scale = std::max(scale, std::abs(v1));
        dev = std::max(dev, std::abs(v2 - v1));
    }
    out.max_deviation = scale > 0 ? dev / scale : dev;
    cplx const w1 = cplx(p1, lam * e1) / cplx(p1, -lam * e1);
    out.prefactor_deviation = std::abs(w1 + w2);
    return out;
}

}  // namespace ncqm
