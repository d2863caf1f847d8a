#include <algorithm>
#include <cmath>
#include <string>

#include "ncqm/fuzzy.hpp"
#include "ncqm/simd/kernels.hpp"

namespace ncqm {

void Params::validate() const
{
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw PreconditionError("lambda must be positive and finite");
    if (!std::isfinite(alpha) || !std::isfinite(q0))
        throw PreconditionError("alpha and q0 must be finite");
}

TruncatedFock::TruncatedFock(unsigned n_max) : n_max_(n_max), level_(dim_of(n_max))
{
    for (unsigned n = 0; n <= n_max; ++n)
        std::fill_n(level_.begin() + level_begin(n), n + 1, n);
}

OperatorMatrix::OperatorMatrix(FockPtr space, unsigned pollution)
    : space_(std::move(space)), dim_(space_->dim()), pollution_(pollution),
      data_(dim_ * dim_)
{
}

OperatorMatrix OperatorMatrix::identity(FockPtr space)
{
    return level_diagonal(std::move(space), [](unsigned) { return 1.0; });
}

namespace {

void require_same_space(OperatorMatrix const& a, OperatorMatrix const& b)
{
    if (a.space() != b.space() && a.space()->n_max() != b.space()->n_max())
        throw PreconditionError("operator matrices live on different spaces");
}

}  // namespace

OperatorMatrix& OperatorMatrix::operator+=(OperatorMatrix const& o)
{
    require_same_space(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    pollution_ = std::max(pollution_, o.pollution_);
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(OperatorMatrix const& o)
{
    require_same_space(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    pollution_ = std::max(pollution_, o.pollution_);
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cplx s)
{
    for (auto& v : data_)
        v *= s;
    return *this;
}

OperatorMatrix OperatorMatrix::adjoint() const
{
    OperatorMatrix out(space_, pollution_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            out.data_[c * dim_ + r] = std::conj(data_[r * dim_ + c]);
    return out;
}

double OperatorMatrix::max_abs(unsigned exclude) const
{
    if (exclude > space_->n_max())
        return 0;
    std::size_t const end = TruncatedFock::level_begin(space_->n_max() - exclude + 1);
    double worst = 0;
    for (std::size_t r = 0; r < end; ++r)
        for (std::size_t c = 0; c < end; ++c)
            worst = std::max(worst, std::abs(data_[r * dim_ + c]));
    return worst;
}

double OperatorMatrix::max_abs_diff(OperatorMatrix const& o, unsigned exclude) const
{
    require_same_space(*this, o);
    if (exclude > space_->n_max())
        return 0;
    std::size_t const end = TruncatedFock::level_begin(space_->n_max() - exclude + 1);
    double worst = 0;
    for (std::size_t r = 0; r < end; ++r)
        for (std::size_t c = 0; c < end; ++c)
            worst = std::max(worst, std::abs(data_[r * dim_ + c] - o.data_[r * dim_ + c]));
    return worst;
}

OperatorMatrix operator+(OperatorMatrix a, OperatorMatrix const& b)
{
    return a += b;
}

OperatorMatrix operator-(OperatorMatrix a, OperatorMatrix const& b)
{
    return a -= b;
}

OperatorMatrix operator*(cplx s, OperatorMatrix a)
{
    return a *= s;
}

void multiply_add(OperatorMatrix& c, OperatorMatrix const& a, OperatorMatrix const& b, cplx scale)
{
    require_same_space(a, b);
    require_same_space(c, a);
    std::size_t const n = a.dim();
    c.set_pollution(std::max(c.pollution(), a.pollution() + b.pollution()));

    std::vector<std::size_t> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        cplx const* row = b.row(k);
        std::size_t first = 0, last = n;
        while (first < n && row[first] == cplx(0))
            ++first;
        while (last > first && row[last - 1] == cplx(0))
            --last;
        lo[k] = first;
        hi[k] = last;
    }

    auto const caxpy = simd::active().caxpy;
    for (std::size_t r = 0; r < n; ++r)
    {
        cplx const* arow = a.row(r);
        cplx* crow = &c(r, 0);
        for (std::size_t k = 0; k < n; ++k)
            if (arow[k] != cplx(0) && hi[k] > lo[k])
                caxpy(hi[k] - lo[k], scale * arow[k], b.row(k) + lo[k], crow + lo[k]);
    }
}

OperatorMatrix operator*(OperatorMatrix const& a, OperatorMatrix const& b)
{
    OperatorMatrix c(a.space());
    multiply_add(c, a, b, 1.0);
    return c;
}

OperatorMatrix commutator(OperatorMatrix const& a, OperatorMatrix const& b)
{
    OperatorMatrix c(a.space());
    multiply_add(c, a, b, 1.0);
    multiply_add(c, b, a, -1.0);
    return c;
}

Ladder build_ladder(FockPtr space)
{
    Ladder l{OperatorMatrix(space), OperatorMatrix(space), OperatorMatrix(space, 1),
             OperatorMatrix(space, 1), OperatorMatrix(space)};
    unsigned const top = space->n_max();
    for (std::size_t i = 0; i < space->dim(); ++i)
    {
        unsigned const n1 = space->n1(i), n2 = space->n2(i);
        if (n1 > 0)
            l.a1(TruncatedFock::index(n1 - 1, n2), i) = std::sqrt(double(n1));
        if (n2 > 0)
            l.a2(TruncatedFock::index(n1, n2 - 1), i) = std::sqrt(double(n2));
        if (n1 + n2 < top)
        {
            l.a1_dag(TruncatedFock::index(n1 + 1, n2), i) = std::sqrt(double(n1 + 1));
            l.a2_dag(TruncatedFock::index(n1, n2 + 1), i) = std::sqrt(double(n2 + 1));
        }
        l.N(i, i) = n1 + n2;
    }
    // The annihilators are exact, but the products they enter truncate
    // through their partners, so they carry the same depth.
    l.a1.set_pollution(1);
    l.a2.set_pollution(1);
    return l;
}

FuzzySpace::FuzzySpace(unsigned n_max)
    : fock_(std::make_shared<TruncatedFock const>(n_max)), ladder_(build_ladder(fock_))
{
    if (n_max < 1)
        throw PreconditionError("FuzzySpace needs n_max >= 1");
}

namespace {

// a†σ_axis a from its level-preserving matrix elements.
OperatorMatrix spin_bilinear(FockPtr const& space, int axis)
{
    OperatorMatrix x(space);
    for (std::size_t i = 0; i < space->dim(); ++i)
    {
        unsigned const n1 = space->n1(i), n2 = space->n2(i);
        switch (axis)
        {
        case 1:
        case 2:
        {
            // a1†a2 moves a quantum from mode 2 to mode 1, a2†a1 the reverse
            cplx const up = axis == 1 ? cplx(1) : cplx(0, -1);
            cplx const down = axis == 1 ? cplx(1) : cplx(0, 1);
            if (n2 > 0)
                x(TruncatedFock::index(n1 + 1, n2 - 1), i) = up * std::sqrt(double((n1 + 1) * n2));
            if (n1 > 0)
                x(TruncatedFock::index(n1 - 1, n2 + 1), i) = down * std::sqrt(double(n1 * (n2 + 1)));
            break;
        }
        case 3:
            x(i, i) = double(n1) - double(n2);
            break;
        default:
            throw PreconditionError("axis must be 1, 2 or 3, got " + std::to_string(axis));
        }
    }
    return x;
}

}  // namespace

Coordinates coordinates(FuzzySpace const& space, Params const& params)
{
    params.validate();
    auto const& fock = space.fock();
    Coordinates c{spin_bilinear(fock, 1), spin_bilinear(fock, 2), spin_bilinear(fock, 3),
                  OperatorMatrix::level_diagonal(
                      fock, [&](unsigned n) { return params.lambda * (n + 1); })};
    c.x1 *= params.lambda;
    c.x2 *= params.lambda;
    c.x3 *= params.lambda;
    return c;
}

WaveOperator angular_momentum_apply(WaveOperator const& psi, int axis, FuzzySpace const& space)
{
    OperatorMatrix gen = spin_bilinear(space.fock(), axis);
    WaveOperator out{commutator(gen, psi.op), psi.j, psi.m};
    out.op *= 0.5;
    if (axis != 3)
        out.m.reset();
    return out;
}

WaveOperator angular_momentum_sq_apply(WaveOperator const& psi, FuzzySpace const& space)
{
    WaveOperator total{OperatorMatrix(space.fock(), psi.op.pollution()), psi.j, psi.m};
    for (int axis = 1; axis <= 3; ++axis)
        total.op += angular_momentum_apply(angular_momentum_apply(psi, axis, space), axis, space).op;
    return total;
}

}  // namespace ncqm
