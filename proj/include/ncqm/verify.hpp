#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ncqm {

enum class Precision
{
    Double,
    Extended,  //!< adds long double runs of the special-function identities
    Rational,  //!< only the checks that have an exact rational path
};

Precision parse_precision(std::string_view text);
std::string_view to_string(Precision p);

struct CheckResult
{
    std::string suite;
    std::string name;
    bool pass = false;
    double measured = 0;   //!< residual or deviation; 0 for exact equality
    double tolerance = 0;  //!< 0 means exact equality was required
    std::string detail;
};

struct VerifyConfig
{
    std::vector<std::string> suites;  //!< empty runs all of them
    Precision precision = Precision::Double;
    unsigned n_max = 40;              //!< Fock truncation for the eigen-residual suite
    unsigned workers = 0;             //!< 0 picks min(hardware threads, 4)
};

struct VerifyReport
{
    std::vector<CheckResult> checks;  //!< suite order, then check order within a suite
    double seconds = 0;
    bool all_pass() const;
};

/// Suite names in run order.
std::vector<std::string> const& verify_suites();

/*!
 * Runs the selected suites concurrently and merges their checks in suite
 * order. PreconditionError on an unknown suite name. A check that throws
 * is recorded as failed with the message.
 */
VerifyReport run_verify(VerifyConfig const& config);

}  // namespace ncqm
