#include <doctest.h>

#include <algorithm>

#include "ncqm/error.hpp"
#include "ncqm/verify.hpp"

using namespace ncqm;

TEST_CASE("precision names")
{
    CHECK(parse_precision("double") == Precision::Double);
    CHECK(parse_precision("rational") == Precision::Rational);
    CHECK(to_string(Precision::Extended) == "extended");
    CHECK_THROWS_AS(parse_precision("quad"), PreconditionError);
}

TEST_CASE("suite selection and ordering")
{
    auto const& names = verify_suites();
    CHECK(names.front() == "special");
    CHECK(std::find(names.begin(), names.end(), "asymptotic") != names.end());
    CHECK_THROWS_AS(run_verify({{"nonsense"}}), PreconditionError);

    VerifyConfig cfg;
    cfg.suites = {"potential", "special"};
    auto const rep = run_verify(cfg);
    CHECK(rep.all_pass());
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks.front().suite == "potential");
    CHECK(rep.checks.back().suite == "special");
}

TEST_CASE("reports are deterministic across worker counts")
{
    VerifyConfig cfg;
    cfg.suites = {"special", "potential", "norms", "selfenergy"};
    cfg.workers = 1;
    auto const a = run_verify(cfg);
    cfg.workers = 4;
    auto const b = run_verify(cfg);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
    {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].measured == b.checks[i].measured);
    }
}

TEST_CASE("rational precision keeps only exact checks")
{
    VerifyConfig cfg;
    cfg.precision = Precision::Rational;
    cfg.suites = {"mirror", "potential", "norms"};
    auto const rep = run_verify(cfg);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 4);
    for (auto const& c : rep.checks)
        CHECK(c.tolerance == 0);
}

TEST_CASE("extended precision adds long double identity checks")
{
    VerifyConfig cfg;
    cfg.suites = {"special"};
    auto const plain = run_verify(cfg);
    cfg.precision = Precision::Extended;
    auto const ext = run_verify(cfg);
    CHECK(ext.all_pass());
    CHECK(ext.checks.size() == plain.checks.size() + 3);
}
