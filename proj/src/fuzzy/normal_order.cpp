#include <cmath>
#include <cstdlib>

#include "ncqm/fuzzy.hpp"

namespace ncqm {

double normal_power_apply(int k, unsigned n)
{
    double v = 1;
    if (k >= 0)
    {
        if (unsigned(k) > n)
            return 0;
        for (int i = 0; i < k; ++i)
            v *= n - i;
        return v;
    }
    for (int i = 1; i <= -k; ++i)
        v /= n + i;
    return v;
}

namespace {

OperatorMatrix sandwich(OperatorMatrix const& x, FuzzySpace const& space)
{
    auto const& l = space.ladder();
    OperatorMatrix s = l.a1_dag * (x * l.a1) + l.a2_dag * (x * l.a2);
    // a_α lowers first, so a†_α never leaves the truncated space
    s.set_pollution(x.pollution());
    return s;
}

// :N^p: for p = lo .. hi (lo <= 0 <= hi), index p - lo.
std::vector<OperatorMatrix> normal_powers(int lo, int hi, FuzzySpace const& space)
{
    std::vector<OperatorMatrix> out(hi - lo + 1);
    out[-lo] = OperatorMatrix::identity(space.fock());
    for (int p = 1; p <= hi; ++p)
        out[p - lo] = sandwich(out[p - 1 - lo], space);

    if (lo < 0)
    {
        // Σ_α a†_α D a_α multiplies the level-(n-1) value of a diagonal D by
        // the level-n entry of Σ_α a†_α a_α, so D is read off one level down.
        OperatorMatrix const number = sandwich(OperatorMatrix::identity(space.fock()), space);
        auto const& fock = *space.fock();
        for (int p = -1; p >= lo; --p)
        {
            OperatorMatrix const& above = out[p + 1 - lo];
            OperatorMatrix x(space.fock(), above.pollution() + 1);
            for (std::size_t i = 0; i < fock.dim(); ++i)
            {
                unsigned const n = fock.level(i);
                if (n == fock.n_max())
                    continue;
                std::size_t const up = TruncatedFock::level_begin(n + 1);
                x(i, i) = above(up, up) / number(up, up);
            }
            out[p - lo] = std::move(x);
        }
    }
    return out;
}

}  // namespace

OperatorMatrix normal_power_matrix(int k, FuzzySpace const& space)
{
    auto powers = normal_powers(std::min(k, 0), std::max(k, 0), space);
    return std::move(k >= 0 ? powers.back() : powers.front());
}

OperatorMatrix normal_ordered_exp(cplx beta, FuzzySpace const& space, Params const& params)
{
    params.validate();
    cplx const base = 1.0 + params.lambda * beta;
    return OperatorMatrix::level_diagonal(space.fock(), [&](unsigned n) {
        return std::pow(base, int(n));
    });
}

OperatorMatrix normal_ordered_exp_series(cplx beta, FuzzySpace const& space,
                                         Params const& params)
{
    return normal_power_exp_series(0, beta, space, params);
}

cplx normal_power_exp_closed(int n, cplx beta, unsigned level, double lambda)
{
    cplx const base = 1.0 + lambda * beta;
    if (n >= 0 && unsigned(n) > level)
        return 0;
    return std::pow(lambda, n) * normal_power_apply(n, level) * std::pow(base, int(level) - n);
}

OperatorMatrix normal_power_exp_series(int n, cplx beta, FuzzySpace const& space,
                                       Params const& params)
{
    params.validate();
    // :N^p: vanishes for p > n_max, which ends the series.
    int const top = int(space.n_max());
    int const kmax = top - n;
    OperatorMatrix sum(space.fock());
    if (kmax < 0)
        return sum;
    auto const powers = normal_powers(std::min(n, 0), top, space);
    int const lo = std::min(n, 0);
    cplx coeff = std::pow(params.lambda, n);
    for (int k = 0; k <= kmax; ++k)
    {
        if (k > 0)
            coeff *= beta * params.lambda / double(k);
        sum += coeff * powers[n + k - lo];
    }
    return sum;
}

}  // namespace ncqm
