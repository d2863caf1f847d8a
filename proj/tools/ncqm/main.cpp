#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grid.hpp"
#include "ncqm/radial.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/spectrum.hpp"
#include "ncqm/verify.hpp"
#include "table.hpp"

namespace {

using namespace ncqm;
using namespace ncqm::cli;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

constexpr char const* unit_note = "units: hbar = m = 1, so alpha equals the charge q";

struct Common
{
    std::string format = "csv";
    std::string output;
    std::string precision = "double";
};

struct Physics
{
    std::string lambda = "1";
    std::string alpha = "1";
    unsigned j = 0;

    Params params() const
    {
        Params p{parse_rational(lambda).convert_to<double>(), parse_rational(alpha).convert_to<double>(), 0.0};
        p.validate();
        return p;
    }
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", c.output, "Write to this file instead of stdout");
    cmd->add_option("--precision", c.precision, "double, extended or rational")
        ->check(CLI::IsMember({"double", "extended", "rational"}));
}

void add_physics(CLI::App* cmd, Physics& p)
{
    cmd->add_option("--lambda", p.lambda, "Non-commutativity length λ > 0 (decimal or p/q)");
    cmd->add_option("--alpha", p.alpha, "Coupling α = q (decimal or p/q)");
    cmd->add_option("--j", p.j, "Angular momentum");
}

int emit(Table const& t, Common const& c)
{
    std::ostringstream buf;
    if (c.format == "json")
        t.write_json(buf);
    else
        t.write_csv(buf);
    if (c.output.empty())
    {
        std::cout << buf.str();
        return exit_ok;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!(out << buf.str()))
    {
        std::cerr << "ncqm: cannot write " << c.output << '\n';
        return exit_usage;
    }
    return exit_ok;
}

void echo(Table& t, Physics const& p)
{
    t.config.emplace_back("lambda", p.lambda);
    t.config.emplace_back("alpha", p.alpha);
    t.config.emplace_back("j", std::to_string(p.j));
}

void require_double(Common const& c, char const* cmd)
{
    if (parse_precision(c.precision) != Precision::Double)
        throw PreconditionError(std::string(cmd) + ": only --precision double is available here");
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs
{
    Common common;
    Physics phys;
    unsigned count = 3;
};

int cmd_spectrum(SpectrumArgs const& a)
{
    require_double(a.common, "spectrum");
    Params const p = a.phys.params();
    if (p.alpha == 0)
        throw PreconditionError("spectrum: alpha = 0 has no bound states");
    if (a.count == 0)
        throw PreconditionError("spectrum: --count must be at least 1");

    Table t;
    t.config.emplace_back("command", "spectrum");
    echo(t, a.phys);
    t.config.emplace_back("count", std::to_string(a.count));
    t.notes.emplace_back(unit_note);
    t.notes.emplace_back("E_commutative: Bohr level for branch I, its mirror 2/lambda^2 - E_Bohr for branch II");
    t.columns = {{"branch", ""},           {"n", ""},
                 {"j", ""},                {"E", "energy"},
                 {"kappa", "dimensionless"}, {"omega", "dimensionless"},
                 {"E_commutative", "energy"}, {"delta_E", "energy"}};
    double const crit = 2 / (p.lambda * p.lambda);
    for (auto const& lv : bound_energies(p, a.phys.j, a.count))
    {
        double const bohr = bohr_energy(lv.n, p.alpha);
        double const ref = lv.branch == BoundBranch::I ? bohr : crit - bohr;
        t.rows.push_back({std::string(to_string(lv.branch)), (long long)lv.n, (long long)lv.j, lv.E,
                          lv.kappa, lv.omega, ref, lv.E - ref});
    }
    return emit(t, a.common);
}

// ---------------------------------------------------------------- wavefn

struct WavefnArgs
{
    Common common;
    Physics phys;
    unsigned n = 0;
    std::string energy;
    unsigned n_max = 40;
};

int cmd_wavefn(WavefnArgs const& a)
{
    Precision const prec = parse_precision(a.common.precision);
    if (prec == Precision::Extended)
        throw PreconditionError("wavefn: precision must be double or rational");
    if ((a.n == 0) == a.energy.empty())
        throw PreconditionError("wavefn: give exactly one of --n (bound state) or --energy");
    Params const p = a.phys.params();
    unsigned const j = a.phys.j;

    Table t;
    t.config.emplace_back("command", "wavefn");
    echo(t, a.phys);
    t.config.emplace_back(a.n ? "n" : "energy", a.n ? std::to_string(a.n) : a.energy);
    t.config.emplace_back("n_max", std::to_string(a.n_max));
    t.config.emplace_back("precision", std::string(to_string(prec)));
    t.notes.emplace_back(unit_note);
    t.notes.emplace_back("R is unnormalized; row N is the Fock level, r = lambda (N + 1)");
    t.columns = {{"N", ""}, {"r", "length"}, {"Re_R", "dimensionless"}, {"Im_R", "dimensionless"}};

    if (prec == Precision::Rational)
    {
        Rational const lam = parse_rational(a.phys.lambda), alpha = parse_rational(a.phys.alpha);
        std::vector<Rational> values;
        if (a.n)
        {
            if (a.n <= j || alpha == 0)
                throw PreconditionError("wavefn: bound states need n > j and alpha != 0");
            Rational const kappa = lam * alpha / a.n;
            values = bound_wavefunction_exact(alpha > 0 ? BoundBranch::I : BoundBranch::II, a.n, j,
                                              kappa, a.n_max);
        }
        else
            values = radial_closed_form_exact(j, parse_rational(a.energy), lam, alpha, a.n_max,
                                              Branch::Plus);
        t.columns.push_back({"R_exact", "dimensionless"});
        for (unsigned N = 0; N < values.size(); ++N)
        {
            std::ostringstream s;
            s << values[N];
            t.rows.push_back({(long long)N, p.lambda * (N + 1), values[N].convert_to<double>(), 0.0, s.str()});
        }
        return emit(t, a.common);
    }

    RadialSeq r;
    if (a.n)
    {
        if (a.n <= j || p.alpha == 0)
            throw PreconditionError("wavefn: bound states need n > j and alpha != 0");
        auto const levels = bound_energies(p, j, a.n - j);
        t.config.emplace_back("E", format_number(levels.back().E));
        r = bound_wavefunction(levels.back(), a.n_max);
    }
    else
    {
        double const E = parse_rational(a.energy).convert_to<double>();
        t.config.emplace_back("regime", std::string(to_string(classify(E, p).regime)));
        r = radial_closed_form(j, E, p, a.n_max);
    }
    for (unsigned N = 0; N < r.values.size(); ++N)
        t.rows.push_back({(long long)N, p.lambda * (N + 1), r.values[N].real(), r.values[N].imag()});
    return emit(t, a.common);
}

// ---------------------------------------------------------------- smatrix

struct SmatrixArgs
{
    Common common;
    Physics phys;
    std::string energy;
    std::optional<double> e_min, e_max;
    unsigned count = 100;
    std::string spacing = "linear";
};

int cmd_smatrix(SmatrixArgs const& a)
{
    require_double(a.common, "smatrix");
    Params const p = a.phys.params();
    double const crit = 2 / (p.lambda * p.lambda);
    std::vector<double> grid;
    if (!a.energy.empty())
        grid = {parse_rational(a.energy).convert_to<double>()};
    else
        grid = make_grid({a.e_min.value_or(0.005 * crit), a.e_max.value_or(0.995 * crit), a.count,
                          parse_spacing(a.spacing)});
    for (double E : grid)
        if (!(E > 0 && E < crit))
            throw RegimeError("smatrix: energy " + format_number(E) + " is outside (0, 2/lambda^2)");

    auto const nc = smatrix_sweep_nc(a.phys.j, grid, p);
    auto const qm = smatrix_sweep_qm(a.phys.j, grid, p.alpha);

    Table t;
    t.config.emplace_back("command", "smatrix");
    echo(t, a.phys);
    if (a.energy.empty())
    {
        t.config.emplace_back("e_min", format_number(grid.front()));
        t.config.emplace_back("e_max", format_number(grid.back()));
        t.config.emplace_back("count", std::to_string(a.count));
        t.config.emplace_back("spacing", a.spacing);
    }
    else
        t.config.emplace_back("energy", a.energy);
    t.notes.emplace_back(unit_note);
    t.notes.emplace_back("p is the conformal momentum; delta is continued along the grid");
    t.columns = {{"E", "energy"},           {"p", "1/length"},     {"edge", ""},
                 {"Re_S", "dimensionless"}, {"Im_S", "dimensionless"}, {"delta", "rad"},
                 {"delta_QM", "rad"}};
    double unitarity = 0, phase_gap = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        Momentum const m = p_of_E(grid[i], p);
        cplx const S = nc.values[i].S;
        unitarity = std::max(unitarity, std::abs(std::abs(S) - 1));
        phase_gap = std::max(phase_gap, std::abs(nc.values[i].phase_shift - qm.values[i].phase_shift));
        t.rows.push_back({grid[i], m.p.real(), std::string(to_string(m.edge)), S.real(), S.imag(),
                          nc.values[i].phase_shift, qm.values[i].phase_shift});
    }
    t.residuals = {{{"max_unitarity_deviation", unitarity}, {"max_phase_difference", phase_gap}}};
    return emit(t, a.common);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs
{
    Common common;
    std::vector<std::string> suites;
    unsigned n_max = 40;
    unsigned workers = 0;
};

int cmd_verify(VerifyArgs const& a)
{
    VerifyConfig cfg;
    cfg.suites = a.suites;
    cfg.precision = parse_precision(a.common.precision);
    cfg.n_max = a.n_max;
    cfg.workers = a.workers;
    VerifyReport const rep = run_verify(cfg);

    Table t;
    t.config.emplace_back("command", "verify");
    std::string names;
    for (auto const& s : a.suites.empty() ? verify_suites() : a.suites)
        names += (names.empty() ? "" : " ") + s;
    t.config.emplace_back("suites", names);
    t.config.emplace_back("precision", std::string(to_string(cfg.precision)));
    t.config.emplace_back("n_max", std::to_string(a.n_max));
    t.notes.emplace_back(unit_note);
    t.notes.emplace_back("tolerance 0 means exact equality");
    t.columns = {{"suite", ""},        {"check", ""},         {"pass", ""},
                 {"measured", "relative or absolute residual"}, {"tolerance", "same as measured"},
                 {"detail", ""}};
    long long failures = 0;
    for (auto const& c : rep.checks)
    {
        failures += !c.pass;
        t.rows.push_back({c.suite, c.name, c.pass, c.measured, c.tolerance, c.detail});
    }
    t.residuals = {{{"checks", double(rep.checks.size())}, {"failures", double(failures)}}};
    int const rc = emit(t, a.common);

    // timing goes to stderr so that stdout stays byte-identical between runs
    std::fprintf(stderr, "verify: %zu checks, %lld failed, %.2f s\n", rep.checks.size(), failures,
                 rep.seconds);
    for (auto const& c : rep.checks)
        if (!c.pass)
            std::fprintf(stderr, "FAILED %s / %s: %s\n", c.suite.c_str(), c.name.c_str(),
                         c.detail.c_str());
    return rc != exit_ok ? rc : failures ? exit_failed : exit_ok;
}

// ---------------------------------------------------------------- selfenergy

struct SelfEnergyArgs
{
    Common common;
    std::string lambda = "1";
    std::string alpha = "1";
    unsigned n_max = 2000;
    std::string constants;
};

int cmd_selfenergy(SelfEnergyArgs const& a)
{
    require_double(a.common, "selfenergy");
    Params const p{parse_rational(a.lambda).convert_to<double>(), parse_rational(a.alpha).convert_to<double>(), 0.0};
    p.validate();
    auto const trace = self_energy_trace(a.n_max, p);
    auto const k = load_constants(a.constants.empty() ? std::nullopt
                                                      : std::optional<std::filesystem::path>(a.constants));
    auto const l0 = lambda0_estimate(k);

    Table t;
    t.config.emplace_back("command", "selfenergy");
    t.config.emplace_back("lambda", a.lambda);
    t.config.emplace_back("q", a.alpha);
    t.config.emplace_back("n_max", std::to_string(a.n_max));
    if (!a.constants.empty())
        t.config.emplace_back("constants", a.constants);
    t.notes.emplace_back(unit_note);
    t.notes.emplace_back("trace rows in hbar = m = 1; lambda0 rows from the constants file (SI lengths)");
    t.notes.emplace_back("correction_scale_printed is (9/64) alpha0^2; correction_scale_squared is (lambda0/a0)^2");
    t.columns = {{"quantity", ""}, {"value", "see unit column"}, {"unit", ""}};
    auto row = [&](char const* name, double v, char const* unit) {
        t.rows.push_back({std::string(name), v, std::string(unit)});
    };
    row("trace", trace.trace, "energy");
    row("target_3q2_over_8lambda", trace.target, "energy");
    row("tail_bound", trace.tail, "energy");
    row("lambda0", l0.lambda0, "m");
    row("classical_radius", l0.classical_radius, "m");
    row("fine_structure", l0.fine_structure, "dimensionless");
    row("bohr_radius", l0.bohr_radius, "m");
    row("lambda0_over_a0", l0.ratio, "dimensionless");
    row("correction_scale_printed", l0.scale_printed, "dimensionless");
    row("correction_scale_squared", l0.scale_squared, "dimensionless");
    t.residuals = {{{"trace_relative_gap", std::abs(trace.trace - trace.target) / trace.target}}};
    return emit(t, a.common);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coulomb problem on the fuzzy space R3_lambda: spectra, wavefunctions, "
                 "S-matrix and oracle verification"};
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* sp = app.add_subcommand("spectrum", "Bound-state energies of branch I (alpha > 0) or II (alpha < 0)");
    add_common(sp, spectrum.common);
    add_physics(sp, spectrum.phys);
    sp->add_option("--count", spectrum.count, "Number of levels from n = j + 1");

    WavefnArgs wavefn;
    auto* wf = app.add_subcommand("wavefn", "Radial values on Fock levels");
    add_common(wf, wavefn.common);
    add_physics(wf, wavefn.phys);
    wf->add_option("--n", wavefn.n, "Principal number of a bound state");
    wf->add_option("--energy", wavefn.energy, "Energy (decimal or p/q)");
    wf->add_option("--n-max", wavefn.n_max, "Highest Fock level");

    SmatrixArgs smatrix;
    auto* sm = app.add_subcommand("smatrix", "Partial-wave S-matrix over an energy grid");
    add_common(sm, smatrix.common);
    add_physics(sm, smatrix.phys);
    sm->add_option("--energy", smatrix.energy, "Single energy instead of a grid");
    sm->add_option("--e-min", smatrix.e_min, "Grid start (default 0.005 * 2/lambda^2)");
    sm->add_option("--e-max", smatrix.e_max, "Grid end (default 0.995 * 2/lambda^2)");
    sm->add_option("--count", smatrix.count, "Grid points");
    sm->add_option("--spacing", smatrix.spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));

    VerifyArgs verify;
    auto* vf = app.add_subcommand("verify", "Run the oracle and invariant suites");
    add_common(vf, verify.common);
    vf->add_option("--suite", verify.suites, "Suite to run (repeatable)")
        ->check(CLI::IsMember(ncqm::verify_suites()));
    vf->add_option("--n-max", verify.n_max, "Fock truncation for the eigen-residual suite");
    vf->add_option("--workers", verify.workers, "Concurrent suites (0 = automatic)");

    SelfEnergyArgs self;
    auto* se = app.add_subcommand("selfenergy", "Truncated self-energy trace and the lambda0 estimate");
    add_common(se, self.common);
    se->add_option("--lambda", self.lambda, "Non-commutativity length");
    se->add_option("--q,--alpha", self.alpha, "Charge");
    se->add_option("--n-max", self.n_max, "Levels in the truncated trace");
    se->add_option("--constants", self.constants, "Constants file (overrides NCQM_CONSTANTS)");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*sp)
            return cmd_spectrum(spectrum);
        if (*wf)
            return cmd_wavefn(wavefn);
        if (*sm)
            return cmd_smatrix(smatrix);
        if (*vf)
            return cmd_verify(verify);
        if (*se)
            return cmd_selfenergy(self);
    }
    catch (ncqm::PreconditionError const& e)
    {
        std::cerr << "ncqm: " << e.what() << '\n';
        return exit_usage;
    }
    catch (ncqm::RegimeError const& e)
    {
        std::cerr << "ncqm: " << e.what() << '\n';
        return exit_usage;
    }
    catch (ncqm::ConfigError const& e)
    {
        std::cerr << "ncqm: " << e.what() << '\n';
        return exit_usage;
    }
    catch (std::exception const& e)
    {
        std::cerr << "ncqm: internal error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
