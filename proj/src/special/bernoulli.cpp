#include "ncqm/bernoulli.hpp"

#include <string>

namespace ncqm {

BernoulliTable::BernoulliTable(unsigned max_degree)
{
    std::vector<Rational> numbers(max_degree + 1);
    numbers[0] = 1;
    for (unsigned n = 1; n <= max_degree; ++n)
    {
        Rational acc = 0;
        for (unsigned k = 0; k < n; ++k)
            acc += Rational(binomial_exact(n + 1, k)) * numbers[k];
        numbers[n] = -acc / (n + 1);
    }

    exact_.resize(max_degree + 1);
    dbl_.resize(max_degree + 1);
    ldbl_.resize(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n)
    {
        auto& coeff = exact_[n];
        coeff.resize(n + 1);
        for (unsigned k = 0; k <= n; ++k)
            coeff[n - k] = Rational(binomial_exact(n, k)) * numbers[k];
        for (auto const& c : coeff)
        {
            dbl_[n].push_back(c.convert_to<double>());
            ldbl_[n].push_back(c.convert_to<long double>());
        }
    }
}

BernoulliTable const& BernoulliTable::instance()
{
    static BernoulliTable const table;
    return table;
}

std::vector<Rational> const& BernoulliTable::coefficients(unsigned n) const
{
    if (n > max_degree())
        throw RangeError("Bernoulli degree " + std::to_string(n) + " beyond table maximum "
                         + std::to_string(max_degree()));
    return exact_[n];
}

template<class T>
Complex<T> BernoulliTable::evaluate(unsigned n, Complex<T> x) const
{
    if (n > max_degree())
        throw RangeError("Bernoulli degree " + std::to_string(n) + " beyond table maximum "
                         + std::to_string(max_degree()));
    auto const& c = [&]() -> auto const& {
        if constexpr (std::is_same_v<T, double>)
            return dbl_[n];
        else
            return ldbl_[n];
    }();
    Complex<T> acc = c[n];
    for (unsigned k = n; k-- > 0;)
        acc = acc * x + c[k];
    return acc;
}

template Complex<double> BernoulliTable::evaluate<double>(unsigned, Complex<double>) const;
template Complex<long double>
BernoulliTable::evaluate<long double>(unsigned, Complex<long double>) const;

}  // namespace ncqm
