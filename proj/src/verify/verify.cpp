#include "ncqm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "ncqm/bernoulli.hpp"
#include "ncqm/exact.hpp"
#include "ncqm/fuzzy.hpp"
#include "ncqm/radial.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/special.hpp"
#include "ncqm/spectrum.hpp"

namespace ncqm {

Precision parse_precision(std::string_view text)
{
    if (text == "double")
        return Precision::Double;
    if (text == "extended")
        return Precision::Extended;
    if (text == "rational")
        return Precision::Rational;
    throw PreconditionError("precision must be double, extended or rational, got "
                            + std::string(text));
}

std::string_view to_string(Precision p)
{
    switch (p)
    {
    case Precision::Double: return "double";
    case Precision::Extended: return "extended";
    case Precision::Rational: return "rational";
    }
    return "?";
}

bool VerifyReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.pass; });
}

namespace {

constexpr cplx I(0, 1);

struct Context
{
    Precision precision;
    unsigned n_max;

    bool floats() const { return precision != Precision::Rational; }
};

class Recorder
{
  public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void within(std::string name, double measured, double tolerance, std::string detail = {})
    {
        bool const ok = std::isfinite(measured) && measured < tolerance;
        out_.push_back({suite_, std::move(name), ok, measured, tolerance, std::move(detail)});
    }

    void exact(std::string name, bool equal, std::string detail = {})
    {
        out_.push_back({suite_, std::move(name), equal, equal ? 0.0 : 1.0, 0.0, std::move(detail)});
    }

    // A check whose body throws is a failure carrying the message.
    void guard(std::string const& name, std::function<void()> const& body)
    {
        try
        {
            body();
        }
        catch (std::exception const& e)
        {
            out_.push_back({suite_, name, false, INFINITY, 0.0, std::string("threw: ") + e.what()});
        }
    }

    std::vector<CheckResult> take() { return std::move(out_); }

  private:
    std::string suite_;
    std::vector<CheckResult> out_;
};

template<class V>
double max_rel_diff(V const& a, V const& b)
{
    double dev = 0, scale = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        dev = std::max<double>(dev, std::abs(a[i] - b[i]));
        scale = std::max<double>(scale, std::abs(b[i]));
    }
    return scale > 0 ? dev / scale : dev;
}

double rel_op_diff(OperatorMatrix const& a, OperatorMatrix const& b, unsigned exclude)
{
    double const scale = b.max_abs(exclude);
    double const dev = a.max_abs_diff(b, exclude);
    return scale > 0 ? dev / scale : dev;
}

std::string label(char const* fmt, double a, double b = 0, double c = 0)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

// Least-squares slope of log y against log x.
double fitted_order(std::vector<double> const& x, std::vector<double> const& y)
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

// ---------------------------------------------------------------- special

template<class T>
void special_float(Recorder& rec, char const* tag)
{
    using C = Complex<T>;
    std::string const suffix = std::string(" [") + tag + "]";
    rec.guard("euler identity" + suffix, [&] {
        double worst = 0;
        for (C a : {C(0.3), C(1.2, 0.5)})
            for (C b : {C(-0.7), C(2.1)})
                for (C c : {C(1.5), C(3.2, -0.4)})
                    for (C x : {C(-0.4), C(0.3), C(0.2, 0.2)})
                    {
                        C const lhs = gauss_2f1<T>(a, b, c, x);
                        C const rhs = std::pow(T(1) - x, -b) * gauss_2f1<T>(c - a, b, c, x / (x - T(1)));
                        worst = std::max(worst, double(std::abs(lhs - rhs) / std::abs(lhs)));
                    }
        rec.within("euler identity" + suffix, worst, 1e-12);
    });
    rec.guard("kummer transform" + suffix, [&] {
        double worst = 0;
        for (C a : {C(0.5), C(-1.5, 1), C(2)})
            for (C c : {C(1.5), C(3)})
                for (C z : {C(-2), C(0.7), C(1, 2)})
                {
                    C const lhs = kummer_1f1<T>(a, c, z);
                    C const rhs = std::exp(z) * kummer_1f1<T>(c - a, c, -z);
                    worst = std::max(worst, double(std::abs(lhs - rhs) / std::abs(lhs)));
                }
        rec.within("kummer transform" + suffix, worst, 1e-12);
    });
    rec.guard("log gamma functional equation" + suffix, [&] {
        double worst = 0;
        for (T re : {T(0.3), T(1.7), T(5.5), T(-2.5)})
            for (T im : {T(0), T(0.8), T(-3)})
            {
                C const z(re, im);
                C const r = std::exp(log_gamma<T>(z + T(1)) - log_gamma<T>(z)) - z;
                worst = std::max(worst, double(std::abs(r)));
            }
        rec.within("log gamma functional equation" + suffix, worst, 1e-13);
    });
}

std::vector<CheckResult> suite_special(Context const& ctx)
{
    Recorder rec("special");
    if (ctx.floats())
    {
        special_float<double>(rec, "double");
        if (ctx.precision == Precision::Extended)
            special_float<long double>(rec, "extended");
        rec.guard("terminating 2F1 against rational", [&] {
            Rational const a(1, 3), c(5, 2), z(-3, 7);
            double worst = 0;
            for (unsigned n = 0; n <= 20; ++n)
            {
                double const ex = gauss_2f1_exact(a, n, c, z).convert_to<double>();
                cplx const fl = gauss_2f1<double>(1.0 / 3, -double(n), 2.5, -3.0 / 7);
                worst = std::max(worst, std::abs(fl - ex) / std::abs(ex));
            }
            rec.within("terminating 2F1 against rational", worst, 1e-13);
        });
    }
    rec.guard("bernoulli derivative and mean", [&] {
        auto const& t = BernoulliTable::instance();
        bool ok = true;
        for (unsigned n = 1; n <= t.max_degree(); ++n)
        {
            auto const& p = t.coefficients(n);
            auto const& q = t.coefficients(n - 1);
            Rational integral = 0;
            for (unsigned k = 0; k <= n; ++k)
            {
                integral += p[k] / (k + 1);
                if (k >= 1 && p[k] * k != q[k - 1] * n)
                    ok = false;
            }
            ok = ok && integral == 0;
        }
        rec.exact("bernoulli derivative and mean", ok);
    });
    rec.guard("pochhammer recurrence", [&] {
        bool ok = true;
        for (Rational a : {Rational(-7, 3), Rational(5, 2), Rational(-4)})
            for (unsigned m = 0; m < 12; ++m)
                ok = ok && pochhammer_exact(a, m + 1) == pochhammer_exact(a, m) * (a + m);
        rec.exact("pochhammer recurrence", ok);
    });
    return rec.take();
}

// ---------------------------------------------------------------- fuzzy

// Level values of the normal-ordered symbol Σ c_k ϱ^k: Σ c_k λ^k N!/(N-k)!.
std::vector<cplx> normal_symbol_levels(std::vector<double> const& c, double lambda, unsigned count)
{
    std::vector<cplx> v(count);
    for (unsigned N = 0; N < count; ++N)
        for (std::size_t k = 0; k < c.size(); ++k)
            v[N] += c[k] * std::pow(lambda, int(k)) * normal_power_apply(int(k), N);
    return v;
}

std::vector<double> derivative(std::vector<double> const& c)
{
    std::vector<double> d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
    for (std::size_t k = 1; k < c.size(); ++k)
        d[k - 1] = k * c[k];
    return d;
}

std::vector<double> times_rho(std::vector<double> const& c)
{
    std::vector<double> d(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
        d[k + 1] = c[k];
    return d;
}

std::vector<double> add(std::vector<double> a, std::vector<double> const& b, double s)
{
    a.resize(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < b.size(); ++k)
        a[k] += s * b[k];
    return a;
}

std::vector<CheckResult> suite_fuzzy(Context const& ctx)
{
    Recorder rec("fuzzy");
    if (!ctx.floats())
        return rec.take();
    unsigned const top = 10;
    Params const prm{0.3, 1.0, 0.0};
    FuzzySpace const space(top);
    auto const& l = space.ladder();
    auto const id = OperatorMatrix::identity(space.fock());

    rec.guard("canonical commutators", [&] {
        double worst = std::max(rel_op_diff(commutator(l.a1, l.a1_dag), id, 1),
                                rel_op_diff(commutator(l.a2, l.a2_dag), id, 1));
        OperatorMatrix const zero(space.fock());
        worst = std::max(worst, commutator(l.a1, l.a2_dag).max_abs_diff(zero, 1));
        rec.within("canonical commutators", worst, 1e-14);
    });

    Coordinates const x = coordinates(space, prm);
    rec.guard("[x1, x2] = 2iλ x3", [&] {
        rec.within("[x1, x2] = 2iλ x3",
                   rel_op_diff(commutator(x.x1, x.x2), cplx(0, 2 * prm.lambda) * x.x3, 0), 1e-13);
    });
    rec.guard("r² - x·x = λ²", [&] {
        OperatorMatrix lhs = x.r * x.r;
        lhs -= x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
        rec.within("r² - x·x = λ²", rel_op_diff(lhs, prm.lambda * prm.lambda * id, 0), 1e-13);
    });

    RadialSeq wiggle{1, std::vector<cplx>(top), RadialSource::User};
    for (unsigned N = 0; N < top; ++N)
        wiggle.values[N] = cplx(std::exp(-0.3 * N), 0.1 * N);
    rec.guard("angular momentum algebra", [&] {
        WaveOperator const psi = build_psi_jm(1, 0, wiggle, space, prm);
        WaveOperator lhs = angular_momentum_apply(angular_momentum_apply(psi, 2, space), 1, space);
        lhs.op -= angular_momentum_apply(angular_momentum_apply(psi, 1, space), 2, space).op;
        OperatorMatrix const rhs = I * angular_momentum_apply(psi, 3, space).op;
        rec.within("angular momentum algebra", rel_op_diff(lhs.op, rhs, 0), 1e-13);
    });

    rec.guard("psi vanishes below level j", [&] {
        double worst = 0;
        RadialSeq r3{3, std::vector<cplx>(top - 2, 1.0), RadialSource::User};
        WaveOperator const psi = build_psi_jm(3, -1, r3, space, prm);
        auto const& f = *space.fock();
        for (std::size_t a = 0; a < f.dim(); ++a)
            for (std::size_t b = 0; b < f.dim(); ++b)
                if (f.level(a) < 3 || f.level(b) < 3)
                    worst = std::max(worst, std::abs(psi.op(a, b)));
        rec.within("psi vanishes below level j", worst, 1e-300);
    });

    rec.guard("laplacian of constant and of ϱ", [&] {
        RadialSeq one{0, std::vector<cplx>(top + 1, 1.0), RadialSource::User};
        RadialSeq rho{0, std::vector<cplx>(top + 1), RadialSource::User};
        for (unsigned N = 0; N <= top; ++N)
            rho.values[N] = prm.lambda * N;
        auto const l1 = laplacian_apply(build_psi_jm(0, 0, one, space, prm), space, prm);
        auto const l2 = laplacian_apply(build_psi_jm(0, 0, rho, space, prm), space, prm);
        auto const two_over_r = OperatorMatrix::level_diagonal(
            space.fock(), [&](unsigned n) { return 2 / (prm.lambda * (n + 1)); });
        OperatorMatrix const zero(space.fock());
        double const worst = std::max(l1.op.max_abs_diff(zero, 2), rel_op_diff(l2.op, two_over_r, 2));
        rec.within("laplacian of constant and of ϱ", worst, 1e-13);
    });

    rec.guard("laplacian annihilates the potential", [&] {
        Params const q{0.3, 1.7, 0.4};
        auto const v = laplace_potential(top, q);
        WaveOperator const psi = build_psi_jm(0, 0, v, space, q);
        // level 0 carries the point source; levels 1 .. n_max-2 must vanish
        auto const lap = laplacian_apply(psi, space, q).op;
        auto const& f = *space.fock();
        double worst = 0;
        for (std::size_t a = 0; a < f.dim(); ++a)
            for (std::size_t b = 0; b < f.dim(); ++b)
                if (f.level(a) >= 1 && f.level(b) >= 1 && f.level(a) + 2 <= top && f.level(b) + 2 <= top)
                    worst = std::max(worst, std::abs(lap(a, b)));
        double const scale = psi.op.max_abs(0) / (q.lambda * q.lambda);
        rec.within("laplacian annihilates the potential", worst / scale, 1e-13);
    });

    // Polynomial radial symbols: the double commutator and r act on Ψ_jm
    // through the symbol calculus of the level recurrence.
    std::vector<double> const poly{1.0, 0.8, -0.3, 0.05};
    rec.guard("double commutator from symbol derivatives", [&] {
        double worst = 0;
        for (unsigned j = 0; j <= 2; ++j)
        {
            unsigned const count = top - j + 1;
            RadialSeq const r{j, normal_symbol_levels(poly, prm.lambda, count), RadialSource::User};
            // -λϱR'' - 2(j+1)λR'
            auto const d1 = derivative(poly);
            auto s = add({}, times_rho(derivative(d1)), -prm.lambda);
            s = add(s, d1, -2.0 * (j + 1) * prm.lambda);
            RadialSeq const rs{j, normal_symbol_levels(s, prm.lambda, count), RadialSource::User};
            for (int m = -int(j); m <= int(j); ++m)
            {
                auto const lhs = double_commutator(build_psi_jm(j, m, r, space, prm).op, space);
                auto const rhs = build_psi_jm(j, m, rs, space, prm).op;
                worst = std::max(worst, rel_op_diff(lhs, rhs, 2));
            }
        }
        rec.within("double commutator from symbol derivatives", worst, 1e-12);
    });
    rec.guard("r Ψ from symbol product", [&] {
        double worst = 0;
        for (unsigned j = 0; j <= 2; ++j)
        {
            unsigned const count = top - j + 1;
            RadialSeq const r{j, normal_symbol_levels(poly, prm.lambda, count), RadialSource::User};
            // (ϱ + λj + λ)R + λϱR'
            auto s = add(times_rho(poly), poly, prm.lambda * (j + 1));
            s = add(s, times_rho(derivative(poly)), prm.lambda);
            RadialSeq const rs{j, normal_symbol_levels(s, prm.lambda, count), RadialSource::User};
            for (int m = -int(j); m <= int(j); ++m)
            {
                auto const lhs = x.r * build_psi_jm(j, m, r, space, prm).op;
                auto const rhs = build_psi_jm(j, m, rs, space, prm).op;
                worst = std::max(worst, rel_op_diff(lhs, rhs, 0));
            }
        }
        rec.within("r Ψ from symbol product", worst, 1e-12);
    });

    rec.guard("normal powers against ladder products", [&] {
        double worst = 0;
        auto const& f = *space.fock();
        for (int k = 0; k <= 4; ++k)
        {
            auto const m = normal_power_matrix(k, space);
            for (std::size_t i = 0; i < f.dim(); ++i)
                worst = std::max(worst, std::abs(m(i, i) - normal_power_apply(k, f.level(i))));
        }
        rec.within("normal powers against ladder products", worst, 1e-9);
    });

    rec.guard("ball volume", [&] {
        Params const unit{1.0, 0.0, 0.0};
        double const pi = std::numbers::pi;
        double const v0 = ball_volume(0, unit) / (4 * pi), v1 = ball_volume(1, unit) / (20 * pi);
        unsigned const n = 1000;
        double const ratio = ball_volume(n, unit) / (4 * pi / 3 * std::pow(n + 1.0, 3));
        // ratio - 1 = 3λ/(2r) + λ²/(2r²)
        double const lead = (ratio - 1) * (n + 1);
        double const worst =
            std::max({std::abs(v0 - 1), std::abs(v1 - 1), std::abs(lead - 1.5 - 0.5 / (n + 1))});
        rec.within("ball volume", worst, 1e-10);
    });
    return rec.take();
}

// ----------------------------------------------------------------- normal exp

std::vector<CheckResult> suite_normal_exp(Context const& ctx)
{
    Recorder rec("normalexp");
    if (!ctx.floats())
        return rec.take();
    unsigned const top = 20;
    Params const prm{0.3, 1.0, 0.0};
    FuzzySpace const space(top);
    // Negative β makes the series alternate; its cancellation grows like
    // ((1 + λ|β|)/(1 - λ|β|))^N, so the grid keeps λ|β| small on that side.
    std::vector<cplx> const betas{0.7, -0.4, cplx(1.3, 0.5), 2.5, cplx(0, 0.05)};

    rec.guard(":e^{βϱ}: against its series", [&] {
        double worst = 0;
        for (cplx b : betas)
            worst = std::max(worst, rel_op_diff(normal_ordered_exp_series(b, space, prm),
                                                normal_ordered_exp(b, space, prm), 0));
        rec.within(":e^{βϱ}: against its series", worst, 1e-13);
    });
    rec.guard(":e^{-2ϱ/λ}: = (-1)^N", [&] {
        auto const sign = OperatorMatrix::level_diagonal(
            space.fock(), [](unsigned n) { return n % 2 ? -1.0 : 1.0; });
        rec.within(":e^{-2ϱ/λ}: = (-1)^N",
                   rel_op_diff(normal_ordered_exp(-2 / prm.lambda, space, prm), sign, 0), 1e-15);
    });
    auto power_check = [&](int n) {
        std::string const name = ":ϱ^{" + std::to_string(n) + "} e^{βϱ}: closed form";
        rec.guard(name, [&] {
            auto const& f = *space.fock();
            double worst = 0;
            for (cplx b : betas)
            {
                auto const m = normal_power_exp_series(n, b, space, prm);
                unsigned const clean = top - m.pollution();
                double dev = 0, scale = 0;
                for (std::size_t i = 0; i < f.dim(); ++i)
                {
                    if (f.level(i) > clean)
                        continue;
                    cplx const want = normal_power_exp_closed(n, b, f.level(i), prm.lambda);
                    dev = std::max(dev, std::abs(m(i, i) - want));
                    scale = std::max(scale, std::abs(want));
                }
                worst = std::max(worst, dev / scale);
            }
            rec.within(name, worst, 1e-12);
        });
    };
    for (int n : {1, 2, 3, -1, -2})
        power_check(n);
    return rec.take();
}

// ---------------------------------------------------------------- potential

std::vector<CheckResult> suite_potential(Context const& ctx)
{
    Recorder rec("potential");
    struct Case
    {
        Rational q, lambda, q0;
    };
    rec.guard("recurrence equals -q/(λ(N+1)) + q0", [&] {
        bool ok = true;
        for (Case const& c : {Case{1, 1, 0}, Case{Rational(3, 7), Rational(2, 5), 0},
                              Case{-2, Rational(1, 3), Rational(5, 4)}})
        {
            auto const v = laplace_potential_exact(100, c.q, c.lambda, c.q0);
            for (unsigned N = 0; N <= 100; ++N)
                ok = ok && v[N] == -c.q / (c.lambda * (N + 1)) + c.q0;
        }
        rec.exact("recurrence equals -q/(λ(N+1)) + q0", ok, "N <= 100, three (q, λ, q0)");
    });
    if (ctx.floats())
        rec.guard("float recurrence", [&] {
            Params const p{0.7, 1.3, -0.2};
            auto const v = laplace_potential(100, p);
            double worst = 0;
            for (unsigned N = 0; N <= 100; ++N)
                worst = std::max(worst, std::abs(v.values[N] - (p.q0 - p.alpha / (p.lambda * (N + 1)))));
            rec.within("float recurrence", worst, 1e-13);
        });
    return rec.take();
}

// ---------------------------------------------------------------- angular

std::vector<CheckResult> suite_angular(Context const& ctx)
{
    Recorder rec("angular");
    if (!ctx.floats())
        return rec.take();
    unsigned const top = 12;
    Params const prm{0.4, 1.0, 0.0};
    FuzzySpace const space(top);
    for (unsigned j = 0; j <= 3; ++j)
    {
        RadialSeq r{j, std::vector<cplx>(top - j + 1), RadialSource::User};
        for (unsigned N = 0; N < r.values.size(); ++N)
            r.values[N] = std::exp(-0.2 * N) * (1 + 0.5 * N);
        std::string const name = "L² and L₃ eigenvalues, j = " + std::to_string(j);
        rec.guard(name, [&] {
            double worst = 0;
            for (int m = -int(j); m <= int(j); ++m)
            {
                WaveOperator const psi = build_psi_jm(j, m, r, space, prm);
                auto const l2 = angular_momentum_sq_apply(psi, space);
                auto const l3 = angular_momentum_apply(psi, 3, space);
                // absolute deviation against |Ψ| so that eigenvalue 0 is covered too
                double const scale = psi.op.max_abs(0);
                worst = std::max(worst, l2.op.max_abs_diff(double(j * (j + 1)) * psi.op, 0) / scale);
                worst = std::max(worst, l3.op.max_abs_diff(double(m) * psi.op, 0) / scale);
            }
            rec.within(name, worst, 1e-12);
        });
    }
    return rec.take();
}

// ---------------------------------------------------------------- norms

std::vector<CheckResult> suite_norms(Context const& ctx)
{
    Recorder rec("norms");
    if (ctx.floats())
        rec.guard("trace norm equals radial sum", [&] {
            unsigned const top = 14;
            FuzzySpace const space(top);
            struct Case
            {
                unsigned j;
                int m;
                double lambda, decay;
            };
            std::vector<Case> const cases{{0, 0, 1.0, 0.3}, {0, 0, 0.2, 0.05}, {1, 1, 0.5, 0.2},
                                          {1, 0, 0.5, 0.2}, {1, -1, 2.0, 0.4}, {2, 2, 0.3, 0.1},
                                          {2, 1, 0.3, 0.1}, {2, 0, 1.1, 0.25}, {3, -2, 0.7, 0.15},
                                          {4, 4, 0.6, 0.3}};
            double worst = 0;
            for (auto const& c : cases)
            {
                Params const p{c.lambda, 1.0, 0.0};
                RadialSeq r{c.j, std::vector<cplx>(top - c.j + 1), RadialSource::User};
                for (unsigned N = 0; N < r.values.size(); ++N)
                    r.values[N] = std::exp(cplx(-c.decay * N, 0.3 * N)) * (1.0 + 0.2 * N);
                double const hs = hs_norm_sq(build_psi_jm(c.j, c.m, r, space, p), p).norm_sq;
                double const rad = radial_norm_sq(c.j, c.m, r, p).value;
                worst = std::max(worst, std::abs(hs - rad) / hs);
            }
            rec.within("trace norm equals radial sum", worst, 1e-12, "10 assorted Ψ_jm");
        });
    rec.guard("binomial convolution identity", [&] {
        bool ok = true;
        for (unsigned j = 0; j <= 6; ++j)
            for (unsigned n = j; n <= 40; ++n)
                ok = ok && binomial_convolution(n, j) == binomial_exact(n + j + 1, 2 * j + 1);
        rec.exact("binomial convolution identity", ok, "j <= 6, n <= 40");
    });
    return rec.take();
}

// ---------------------------------------------------------------- eigen

std::vector<CheckResult> suite_eigen(Context const& ctx)
{
    Recorder rec("eigen");
    if (!ctx.floats())
        return rec.take();
    unsigned const top = ctx.n_max;
    FuzzySpace const space(top);
    auto residual = [&](EnergyLevel const& lv, int m, Params const& p) {
        RadialSeq const r = bound_wavefunction(lv, top - lv.j);
        WaveOperator const psi = build_psi_jm(lv.j, m, r, space, p);
        WaveOperator h = hamiltonian_apply(psi, space, p);
        h.op -= lv.E * psi.op;
        return std::sqrt(hs_norm_sq_levels(h.op, p, top - h.op.pollution())
                         / hs_norm_sq(psi, p).norm_sq);
    };
    Params const attractive{0.2, 1.0, 0.0};
    for (unsigned j = 0; j <= 2; ++j)
        for (auto const& lv : bound_energies_I(attractive, j, 3))
        {
            std::string const name = "branch I j=" + std::to_string(j) + " n=" + std::to_string(lv.n);
            rec.guard(name, [&] { rec.within(name, residual(lv, int(j), attractive), 1e-10); });
        }
    Params const repulsive{0.2, -1.0, 0.0};
    for (auto const& lv : bound_energies_II(repulsive, 1, 2))
    {
        std::string const name = "branch II j=1 m=0 n=" + std::to_string(lv.n);
        rec.guard(name, [&] { rec.within(name, residual(lv, 0, repulsive), 1e-10); });
    }
    return rec.take();
}

// ---------------------------------------------------------------- radial

std::vector<CheckResult> suite_radial(Context const& ctx)
{
    Recorder rec("radial");
    Params const prm{0.5, 1.0, 0.0};
    unsigned const top = 30;
    struct Case
    {
        char const* regime;
        double E;
    };
    std::vector<Case> const cases{{"NegativeE", -0.7}, {"LowScattering", 1.3}, {"EtaZero", 0.0},
                                  {"EtaOne", 8.0},     {"UltraHigh", 11.0}};
    if (ctx.floats())
    {
        for (auto const& c : cases)
        {
            std::string const name = std::string("recurrence oracle, ") + c.regime;
            rec.guard(name, [&] {
                double worst = 0, resid = 0;
                for (unsigned j = 0; j <= 3; ++j)
                {
                    auto const closed = radial_closed_form(j, c.E, prm, top);
                    auto const rec_seq = radial_from_recurrence(j, c.E, prm, top);
                    worst = std::max(worst, max_rel_diff(rec_seq.values, closed.values));
                    auto const res = recurrence_residual(closed, c.E, prm);
                    for (unsigned n = 0; n + 2 <= top; ++n)
                        resid = std::max(resid, res[n]);
                }
                rec.within(name, std::max(worst, resid), 1e-11, "j <= 3, levels <= 30");
            });
        }
        rec.guard("plus and minus branches agree", [&] {
            double worst = 0;
            for (double E : {-0.7, -3.0, 1.3, 5.0, 11.0, 20.0})
                for (unsigned j = 0; j <= 2; ++j)
                    worst = std::max(worst, max_rel_diff(radial_closed_form(j, E, prm, top, Branch::Minus).values,
                                                         radial_closed_form(j, E, prm, top).values));
            rec.within("plus and minus branches agree", worst, 1e-10);
        });
        rec.guard("η = 1 mirrors η = 0", [&] {
            Params const neg{prm.lambda, -prm.alpha, 0.0};
            double worst = 0;
            for (unsigned j = 0; j <= 2; ++j)
            {
                auto const one = radial_eta_one(j, prm, top);
                auto const zero = radial_eta_zero(j, neg, top);
                cplx const k = one.values[0] / zero.values[0];
                std::vector<cplx> scaled(top + 1);
                for (unsigned N = 0; N <= top; ++N)
                    scaled[N] = (N % 2 ? -k : k) * zero.values[N];
                worst = std::max(worst, max_rel_diff(scaled, one.values));
            }
            rec.within("η = 1 mirrors η = 0", worst, 1e-13);
        });
        rec.guard("ODE coefficients", [&] {
            Params const unit{1.0, 1.0, 0.0};
            auto const c = ode_coefficients(0, 1.0, unit);
            auto const at_one = ode_coefficients(2, 2.0 / (prm.lambda * prm.lambda), prm);
            double const worst = std::max(std::abs(c.b2 - 4.0), std::abs(at_one.D_sq));
            rec.within("ODE coefficients", worst, 1e-12, "b2 = 4 at k² = 2; D² = 0 at η = 1");
        });
        rec.guard("commutative limit", [&] {
            double const E = 0.7, rmax = 3.0;
            std::vector<double> lams{1e-1, 1e-2, 1e-3}, devs;
            for (double lam : lams)
            {
                Params const p{lam, 1.0, 0.0};
                unsigned const levels = unsigned(rmax / lam);
                auto const r = radial_closed_form(0, E, p, levels);
                double dev = 0;
                for (unsigned N = 0; N <= levels; ++N)
                    dev = std::max(dev, std::abs(r.values[N] - commutative_radial(0, E, 1.0, lam * N)));
                devs.push_back(dev);
            }
            double const order = fitted_order(lams, devs);
            rec.within("commutative limit", std::abs(order - 1), 0.2,
                       label("fitted order %.3f, deviations %.2e .. %.2e", order, devs[0], devs[2]));
        });
    }
    rec.guard("plus and minus branches agree exactly", [&] {
        bool ok = true;
        for (Rational E : {Rational(-1, 4), Rational(9, 4)})
            for (Rational alpha : {Rational(1), Rational(3, 2), Rational(-2, 3)})
                for (unsigned j = 0; j <= 2; ++j)
                    ok = ok && radial_closed_form_exact(j, E, 1, alpha, 20, Branch::Plus)
                                   == radial_closed_form_exact(j, E, 1, alpha, 20, Branch::Minus);
        rec.exact("plus and minus branches agree exactly", ok, "E = -1/4, 9/4 at λ = 1");
    });
    return rec.take();
}

// ---------------------------------------------------------------- spectrum

std::vector<CheckResult> suite_spectrum(Context const& ctx)
{
    Recorder rec("spectrum");
    if (!ctx.floats())
        return rec.take();
    rec.guard("termination roots", [&] {
        double worst = 0;
        std::vector<std::pair<double, double>> const combos{{1.0, 0.2}, {0.5, 1.0}, {2.0, 0.05},
                                                            {-1.0, 0.2}, {-0.5, 1.0}, {-2.0, 0.05}};
        for (auto [alpha, lambda] : combos)
        {
            Params const p{lambda, alpha, 0.0};
            auto const closed = bound_energies(p, 0, 3);
            auto const roots = termination_roots(0, p, 3);
            if (roots.size() != closed.size())
                throw NoRootError("termination_roots returned the wrong count");
            for (std::size_t i = 0; i < roots.size(); ++i)
                worst = std::max(worst, std::abs(roots[i].E - closed[i].E) / std::abs(closed[i].E));
        }
        rec.within("termination roots", worst, 1e-12, "18 (α, λ, n) combinations");
    });
    rec.guard("ground state value", [&] {
        double const E = bound_energies_I({0.2, 1.0, 0.0}, 0, 1)[0].E;
        rec.within("ground state value", std::abs(E + 0.49509757), 1e-8, label("E = %.12g", E));
    });
    rec.guard("spectral mirror", [&] {
        double worst = 0;
        for (double lambda : {0.2, 1.0, 3.0})
        {
            auto const one = bound_energies_I({lambda, 1.3, 0.0}, 1, 5);
            auto const two = bound_energies_II({lambda, -1.3, 0.0}, 1, 5);
            double const crit = 2 / (lambda * lambda);
            for (std::size_t i = 0; i < one.size(); ++i)
                worst = std::max(worst, std::abs(one[i].E + two[i].E - crit) / crit);
        }
        rec.within("spectral mirror", worst, 1e-14);
    });
    rec.guard("small-λ coefficient", [&] {
        double worst = 0;
        for (unsigned n = 1; n <= 3; ++n)
        {
            // (E - E_Bohr)/λ² = C + Dλ², least squares over three λ
            double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0;
            for (double lam : {1e-1, 1e-2, 1e-3})
            {
                Params const p{lam, 1.0, 0.0};
                double const E = bound_energies_I(p, n - 1, 1)[0].E;
                double const y = (E - bohr_energy(n, 1.0)) / (lam * lam);
                double const x = lam * lam;
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
        rec.within("small-λ coefficient", worst, 1e-2, "fit against α⁴/(8n⁴)");
    });
    rec.guard("levels increase with n", [&] {
        auto const lv = termination_roots(1, {0.3, 1.0, 0.0}, 6);
        bool ok = lv.size() == 6;
        for (std::size_t i = 1; i < lv.size(); ++i)
            ok = ok && lv[i].E > lv[i - 1].E && lv[i].E < 0;
        rec.exact("levels increase with n", ok);
    });
    rec.guard("geometric decay ratio", [&] {
        double worst = 0;
        for (auto const& lv : bound_energies_I({0.05, 1.0, 0.0}, 0, 3))
        {
            unsigned const N = 2000;
            auto const r = bound_wavefunction(lv, N);
            double const ratio = std::abs(r.values[N] / r.values[N - 1]);
            worst = std::max(worst, std::abs(ratio / lv.omega - 1) * N / (lv.n + 1.0));
        }
        rec.within("geometric decay ratio", worst, 1.0, "|ratio/Ω - 1| scaled by N/(n+1)");
    });
    rec.guard("Ω form equals the energy closed form", [&] {
        double worst = 0;
        for (double alpha : {1.0, -1.0})
            for (unsigned j = 0; j <= 2; ++j)
                for (auto const& lv : bound_energies({0.4, alpha, 0.0}, j, 3))
                    worst = std::max(worst, max_rel_diff(radial_closed_form(j, lv.E, {0.4, alpha, 0.0}, 40).values,
                                                         bound_wavefunction(lv, 40).values));
        rec.within("Ω form equals the energy closed form", worst, 1e-10);
    });
    rec.guard("branch norms agree", [&] {
        double worst = 0;
        for (unsigned j = 0; j <= 2; ++j)
        {
            auto const one = bound_energies_I({1.0, 1.0, 0.0}, j, 2);
            auto const two = bound_energies_II({1.0, -1.0, 0.0}, j, 2);
            for (std::size_t i = 0; i < one.size(); ++i)
            {
                auto const a = radial_norm_sq(j, bound_wavefunction(one[i], 400), {1.0, 1.0, 0.0});
                auto const b = radial_norm_sq(j, bound_wavefunction(two[i], 400), {1.0, -1.0, 0.0});
                if (!a.converged || !b.converged)
                    throw ConvergenceError("bound-state norm did not converge");
                worst = std::max(worst, std::abs(a.value - b.value) / a.value);
            }
        }
        rec.within("branch norms agree", worst, 1e-12);
    });
    return rec.take();
}

// ---------------------------------------------------------------- mirror

std::vector<CheckResult> suite_mirror(Context const& ctx)
{
    Recorder rec("mirror");
    rec.guard("bound-state mirror, exact", [&] {
        bool ok = true;
        for (unsigned n = 1; n <= 4; ++n)
            for (unsigned j = 0; j <= 2 && j < n; ++j)
                ok = ok && mirror_check(n, j, Rational(3, 4), 40).equal;
        rec.exact("bound-state mirror, exact", ok, "κ = 3/4, n <= 4, j <= 2, N <= 40");
    });
    rec.guard("Ω forms, exact", [&] {
        bool ok = true;
        for (unsigned n = 1; n <= 4; ++n)
            for (unsigned j = 0; j < n && j <= 2; ++j)
            {
                auto const one = bound_wavefunction_exact(BoundBranch::I, n, j, Rational(3, 4), 40);
                auto const two = bound_wavefunction_exact(BoundBranch::II, n, j, Rational(-3, 4), 40);
                auto const closed = radial_closed_form_exact(j, Rational(-1, 4), 1, Rational(3 * n, 4), 40,
                                                             Branch::Plus);
                for (unsigned N = 0; N <= 40; ++N)
                    ok = ok && one[N] == closed[N] && two[N] == (N % 2 ? Rational(-one[N]) : one[N]);
            }
        rec.exact("Ω forms, exact", ok);
    });
    if (ctx.floats())
    {
        rec.guard("bound-state mirror, float", [&] {
            auto const r = mirror_check(2, 0, 0.37, 40);
            rec.within("bound-state mirror, float", r.max_deviation, 1e-12, "κ = 0.37");
        });
        rec.guard("scattering mirror", [&] {
            double worst = 0, pref = 0;
            for (double lambda : {0.5, 1.0})
                for (unsigned j = 0; j <= 2; ++j)
                {
                    Params const p{lambda, 1.0, 0.0};
                    auto const m = scattering_mirror_check(j, 0.3 / (lambda * lambda), p, 40);
                    worst = std::max(worst, m.max_deviation);
                    pref = std::max(pref, m.prefactor_deviation);
                }
            rec.within("scattering mirror", worst, 1e-11);
            rec.within("scattering mirror prefactor", pref, 1e-14);
        });
    }
    return rec.take();
}

// ---------------------------------------------------------------- smatrix

std::vector<CheckResult> suite_smatrix(Context const& ctx)
{
    Recorder rec("smatrix");
    if (!ctx.floats())
        return rec.take();
    Params const prm{0.2, 1.0, 0.0};
    double const crit = 2 / (prm.lambda * prm.lambda);
    rec.guard("unitarity", [&] {
        double worst = 0;
        for (double alpha : {1.0, -1.0, 3.0})
            for (unsigned j = 0; j <= 4; ++j)
                for (unsigned i = 1; i <= 100; ++i)
                {
                    double const E = crit * i / 101.0;
                    worst = std::max(worst, std::abs(std::abs(smatrix_nc(j, E, {prm.lambda, alpha, 0.0}).S) - 1));
                }
        rec.within("unitarity", worst, 1e-12, "100-point grids, j <= 4");
    });
    rec.guard("poles match the spectra", [&] {
        double worst = 0;
        for (double alpha : {1.0, -1.0})
            for (unsigned j = 0; j <= 1; ++j)
            {
                Params const p{prm.lambda, alpha, 0.0};
                auto const poles = pole_energies(j, p, 3);
                auto const levels = bound_energies(p, j, 3);
                for (std::size_t i = 0; i < poles.size(); ++i)
                {
                    worst = std::max(worst, std::abs(poles[i] - levels[i].E) / std::abs(levels[i].E));
                    // step off the pole by a fraction of its distance to the threshold
                    double const gap = std::min(std::abs(levels[i].E), std::abs(levels[i].E - crit));
                    if (std::abs(smatrix_nc(j, levels[i].E + 1e-9 * gap, p).S) < 1e5)
                        throw PreconditionError("|S| not large at a bound energy");
                }
            }
        rec.within("poles match the spectra", worst, 1e-12);
    });
    rec.guard("pole raised at p = iα/n", [&] {
        bool raised = false;
        try
        {
            smatrix_at_momentum(1, cplx(0, 1.0 / 3), 1.0);
        }
        catch (PoleError const&)
        {
            raised = true;
        }
        rec.exact("pole raised at p = iα/n", raised);
    });
    rec.guard("commutative phase order", [&] {
        double lo = INFINITY, hi = -INFINITY;
        for (unsigned j = 0; j <= 2; ++j)
            for (double E : {0.3, 0.7, 2.0})
            {
                std::vector<double> lams{1e-1, 1e-2, 1e-3}, devs;
                for (double lam : lams)
                    devs.push_back(std::abs(smatrix_nc(j, E, {lam, 1.0, 0.0}).phase_shift
                                            - smatrix_qm(j, E, 1.0).phase_shift));
                double const order = fitted_order(lams, devs);
                lo = std::min(lo, order);
                hi = std::max(hi, order);
            }
        rec.within("commutative phase order", std::max(std::abs(lo - 2), std::abs(hi - 2)), 0.2,
                   label("fitted orders in [%.3f, %.3f]", lo, hi));
    });
    rec.guard("S = 1 without charge", [&] {
        double worst = 0;
        for (double E : {0.5, 30.0})
            worst = std::max(worst, std::abs(smatrix_nc(2, E, {prm.lambda, 0.0, 0.0}).S - 1.0));
        rec.within("S = 1 without charge", worst, 1e-300);
    });
    rec.guard("edges of the cut", [&] {
        double const mid = 1 / (prm.lambda * prm.lambda);
        auto const below = p_of_E(mid * 0.99, prm), above = p_of_E(mid * 1.01, prm);
        auto const a = p_of_E(1e-3, prm), b = p_of_E(crit - 1e-3, prm);
        bool const tags = below.edge == Edge::Upper && above.edge == Edge::Lower
                          && a.edge == Edge::Upper && b.edge == Edge::Lower;
        double const dev = std::max(std::abs(a.p - b.p) / std::abs(a.p),
                                    std::abs(p_of_E(mid, prm).p - 1 / prm.lambda) * prm.lambda);
        rec.within("edges of the cut", tags ? dev : INFINITY, 1e-10);
    });
    rec.guard("momentum round trip", [&] {
        double worst = 0;
        for (double re : {0.3, 1.0, 4.0, 12.0})
            for (double im : {-2.0, -0.5, 0.5, 2.0})
            {
                cplx const p(re, im);
                worst = std::max(worst, std::abs(p_of_E(E_of_p({p, Edge::OffCut}, prm), prm).p - p) / std::abs(p));
            }
        rec.within("momentum round trip", worst, 1e-13);
    });
    rec.guard("phase sweep is continuous", [&] {
        std::vector<double> grid;
        for (unsigned i = 1; i <= 200; ++i)
            grid.push_back(crit * i / 201.0);
        auto const sweep = smatrix_sweep_nc(0, grid, prm);
        double step = 0;
        for (std::size_t i = 1; i < sweep.values.size(); ++i)
            step = std::max(step, std::abs(sweep.values[i].phase_shift - sweep.values[i - 1].phase_shift));
        rec.within("phase sweep is continuous", step, 0.25,
                   std::to_string(sweep.flagged.size()) + " branch jumps of log Γ removed");
    });
    return rec.take();
}

// ----------------------------------------------------------------- asymptotic

double energy_at(double lambda_p, double lambda, bool lower)
{
    // p² = 2E - λ²E² solved for E on the chosen edge
    double const s = std::sqrt(1 - lambda_p * lambda_p);
    return (1 + (lower ? s : -s)) / (lambda * lambda);
}

std::vector<CheckResult> suite_asymptotic(Context const& ctx)
{
    Recorder rec("asymptotic");
    rec.guard("Bernoulli differences vanish at α = 0", [&] {
        auto const& t = BernoulliTable::instance();
        bool ok = true;
        for (unsigned n = 1; n + 1 <= t.max_degree(); ++n)
        {
            Rational at_one = 0;
            for (auto const& c : t.coefficients(n + 1))
                at_one += c;
            ok = ok && at_one - t.number(n + 1) == 0;
        }
        rec.exact("Bernoulli differences vanish at α = 0", ok, "B_{n+1}(1) - B_{n+1}(0) = 0, n >= 1");
    });
    if (!ctx.floats())
        return rec.take();
    Params const prm{0.5, 1.0, 0.0};
    rec.guard("term sum equals the closed form", [&] {
        double worst = 0, conj = 0, smat = 0;
        for (double lp : {0.6, 0.7, 0.8, 0.9})
            for (bool lower : {false, true})
                for (unsigned j = 0; j <= 2; ++j)
                {
                    double const E = energy_at(lp, prm.lambda, lower);
                    auto const closed = radial_closed_form(j, E, prm, 40);
                    for (unsigned n = 20; n <= 40; ++n)
                    {
                        auto const t = asymptotic_decomposition(j, E, prm, n);
                        cplx const R = closed.values[n];
                        worst = std::max(worst, std::abs(t.term_in + t.term_out - R) / std::abs(R));
                        conj = std::max(conj, std::abs(t.term_in - std::conj(t.term_out)) / std::abs(t.term_in));
                        if (n == 20)
                        {
                            cplx const S = (j % 2 ? 1.0 : -1.0) * t.coeff_out / t.coeff_in;
                            smat = std::max(smat, std::abs(S - smatrix_at_momentum(j, t.p, prm.alpha).S));
                        }
                    }
                }
        rec.within("term sum equals the closed form", worst, 1e-8, "λp in [0.6, 0.9], n in [20, 40]");
        rec.within("terms are complex conjugates", conj, 1e-10);
        rec.within("prefactor ratio is the S-matrix", smat, 1e-12);
    });
    rec.guard("Bernoulli prefactor equals Γ ratio", [&] {
        double worst = 0;
        for (unsigned j = 0; j <= 2; ++j)
        {
            auto const c = prefactor_via_lngamma(j, energy_at(0.5, prm.lambda, false), prm, 50);
            worst = std::max(worst, std::abs(c.bernoulli - c.exact) / std::abs(c.exact));
        }
        rec.within("Bernoulli prefactor equals Γ ratio", worst, 1e-8, "n = 50, λp = 0.5");
    });
    rec.guard("series outside the monitored region is refused", [&] {
        bool raised = false;
        try
        {
            asymptotic_decomposition(0, energy_at(0.5, prm.lambda, false), prm, 20);
        }
        catch (ConvergenceError const&)
        {
            raised = true;
        }
        rec.exact("series outside the monitored region is refused", raised, "λp = 0.5 gives |z| = 1");
    });
    return rec.take();
}

// ---------------------------------------------------------------- self-energy

std::vector<CheckResult> suite_selfenergy(Context const& ctx)
{
    Recorder rec("selfenergy");
    rec.guard("level sum telescopes", [&] {
        bool ok = true;
        for (unsigned M : {2u, 10u, 57u})
        {
            Rational s = 0;
            for (unsigned n = 1; n <= M; ++n)
                s += Rational(1, n * (n + 2));
            ok = ok && s == Rational(3, 4) - Rational(1, 2) * (Rational(1, M + 1) + Rational(1, M + 2));
        }
        rec.exact("level sum telescopes", ok, "Σ 1/(n(n+2)) partial sums");
    });
    if (!ctx.floats())
        return rec.take();
    rec.guard("trace approaches 3q²/(8λ)", [&] {
        auto const s = self_energy_trace(2000, {1.0, 1.0, 0.0});
        rec.within("trace approaches 3q²/(8λ)", std::abs(s.trace - s.target) / s.target, 1e-3,
                   label("trace %.12g", s.trace));
        rec.within("trace plus tail is exact", std::abs(s.trace + s.tail - s.target) / s.target, 1e-12);
        auto const scaled = self_energy_trace(2000, {0.5, 2.0, 0.0});
        rec.within("trace scales as q²/λ", std::abs(scaled.trace / 8 - s.trace) / s.trace, 1e-13);
    });
    rec.guard("λ₀ estimate", [&] {
        auto const l0 = lambda0_estimate(load_constants());
        rec.within("λ₀ estimate", std::abs(l0.lambda0 / 1.06e-15 - 1), 1e-2,
                   label("λ₀ = %.6g m", l0.lambda0));
        rec.within("λ₀/r₀ = 3/8", std::abs(l0.lambda0 / l0.classical_radius - 0.375), 1e-15);
    });
    return rec.take();
}

using SuiteFn = std::vector<CheckResult> (*)(Context const&);

struct Suite
{
    std::string name;
    SuiteFn run;
};

std::vector<Suite> const& suite_table()
{
    static std::vector<Suite> const table{
        {"special", suite_special},     {"fuzzy", suite_fuzzy},
        {"angular", suite_angular},     {"norms", suite_norms},
        {"potential", suite_potential}, {"normalexp", suite_normal_exp},
        {"radial", suite_radial},       {"eigen", suite_eigen},
        {"spectrum", suite_spectrum},   {"mirror", suite_mirror},
        {"smatrix", suite_smatrix},     {"asymptotic", suite_asymptotic},
        {"selfenergy", suite_selfenergy},
    };
    return table;
}

}  // namespace

std::vector<std::string> const& verify_suites()
{
    static std::vector<std::string> const names = [] {
        std::vector<std::string> v;
        for (auto const& s : suite_table())
            v.push_back(s.name);
        return v;
    }();
    return names;
}

VerifyReport run_verify(VerifyConfig const& config)
{
    auto const start = std::chrono::steady_clock::now();
    auto const& table = suite_table();
    std::vector<Suite const*> selected;
    if (config.suites.empty())
        for (auto const& s : table)
            selected.push_back(&s);
    for (auto const& name : config.suites)
    {
        auto it = std::find_if(table.begin(), table.end(), [&](auto const& s) { return s.name == name; });
        if (it == table.end())
            throw PreconditionError("unknown verify suite: " + name);
        selected.push_back(&*it);
    }
    if (config.n_max < 8)
        throw PreconditionError("verify: n_max must be at least 8");

    Context const ctx{config.precision, config.n_max};
    std::vector<std::vector<CheckResult>> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < selected.size();)
        {
            try
            {
                results[i] = selected[i]->run(ctx);
            }
            catch (std::exception const& e)
            {
                results[i] = {{selected[i]->name, "suite", false, INFINITY, 0.0, e.what()}};
            }
        }
    };
    unsigned workers = config.workers;
    if (workers == 0)
        workers = std::clamp(std::thread::hardware_concurrency(), 1u, 4u);
    workers = std::min<unsigned>(workers, unsigned(selected.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    VerifyReport report;
    for (auto& r : results)
        for (auto& c : r)
            report.checks.push_back(std::move(c));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ncqm
