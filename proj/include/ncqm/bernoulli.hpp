#pragma once

#include <vector>

#include "ncqm/exact.hpp"
#include "ncqm/special.hpp"

namespace ncqm {

inline constexpr unsigned bernoulli_max_degree = 32;

/*!
 * Bernoulli polynomials B_0 .. B_max with exact rational coefficients.
 *
 * Built from B_n(x) = Σ_k C(n,k) B_k x^{n-k} with the numbers B_k from
 * Σ_{k<=n} C(n+1,k) B_k = 0. Immutable after construction.
 */
class BernoulliTable
{
  public:
    explicit BernoulliTable(unsigned max_degree = bernoulli_max_degree);

    //! Shared table of degree bernoulli_max_degree
    static BernoulliTable const& instance();

    unsigned max_degree() const { return static_cast<unsigned>(exact_.size()) - 1; }

    //! Coefficients of x^0 .. x^n
    std::vector<Rational> const& coefficients(unsigned n) const;

    //! B_n = B_n(0)
    Rational const& number(unsigned n) const { return coefficients(n).front(); }

    template<class T>
    Complex<T> evaluate(unsigned n, Complex<T> x) const;

  private:
    std::vector<std::vector<Rational>> exact_;
    std::vector<std::vector<double>> dbl_;
    std::vector<std::vector<long double>> ldbl_;
};

}  // namespace ncqm
