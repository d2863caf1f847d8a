#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ncqm/exact.hpp"
#include "ncqm/radial_seq.hpp"
#include "ncqm/special.hpp"

namespace ncqm {

/// Physical inputs in ħ = m = 1 units, so alpha equals the charge q.
struct Params
{
    double lambda = 1.0;
    double alpha = 1.0;
    double q0 = 0.0;

    void validate() const;
};

/// Two-mode Fock states |n1, n2> with n1 + n2 <= n_max, ordered by level then n1.
class TruncatedFock
{
  public:
    explicit TruncatedFock(unsigned n_max);

    unsigned n_max() const { return n_max_; }
    std::size_t dim() const { return dim_of(n_max_); }

    static std::size_t dim_of(unsigned n_max)
    {
        return std::size_t(n_max + 1) * (n_max + 2) / 2;
    }
    static std::size_t level_begin(unsigned n) { return std::size_t(n) * (n + 1) / 2; }
    static std::size_t index(unsigned n1, unsigned n2)
    {
        return level_begin(n1 + n2) + n1;
    }

    unsigned level(std::size_t i) const { return level_[i]; }
    unsigned n1(std::size_t i) const { return unsigned(i - level_begin(level_[i])); }
    unsigned n2(std::size_t i) const { return level_[i] - n1(i); }

  private:
    unsigned n_max_;
    std::vector<unsigned> level_;
};

using FockPtr = std::shared_ptr<TruncatedFock const>;

/*!
 * Dense complex matrix over a truncated Fock basis.
 *
 * pollution() is the number of top levels on which the matrix may differ
 * from the untruncated operator. Ladder operators carry 1 and products add
 * their depths, so a double commutator carries 2. Level-preserving
 * operators built from direct matrix elements carry 0.
 */
class OperatorMatrix
{
  public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(FockPtr space, unsigned pollution = 0);

    static OperatorMatrix identity(FockPtr space);
    /// diag(f(level)).
    template<class F>
    static OperatorMatrix level_diagonal(FockPtr space, F&& f)
    {
        OperatorMatrix m(space);
        for (std::size_t i = 0; i < m.dim(); ++i)
            m(i, i) = f(space->level(i));
        return m;
    }

    FockPtr const& space() const { return space_; }
    std::size_t dim() const { return dim_; }
    unsigned pollution() const { return pollution_; }
    void set_pollution(unsigned p) { pollution_ = p; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    cplx const* row(std::size_t r) const { return data_.data() + r * dim_; }

    OperatorMatrix& operator+=(OperatorMatrix const& o);
    OperatorMatrix& operator-=(OperatorMatrix const& o);
    OperatorMatrix& operator*=(cplx s);

    /// Multiply row r by w(level(r)).
    template<class F>
    OperatorMatrix& scale_rows_by_level(F&& w)
    {
        for (std::size_t r = 0; r < dim_; ++r)
        {
            cplx f = w(space_->level(r));
            for (std::size_t c = 0; c < dim_; ++c)
                data_[r * dim_ + c] *= f;
        }
        return *this;
    }

    OperatorMatrix adjoint() const;

    /// Largest |element| with row and column levels <= n_max - exclude.
    double max_abs(unsigned exclude) const;
    /// Same restriction, for the difference with another matrix.
    double max_abs_diff(OperatorMatrix const& o, unsigned exclude) const;

  private:
    FockPtr space_;
    std::size_t dim_ = 0;
    unsigned pollution_ = 0;
    std::vector<cplx> data_;
};

OperatorMatrix operator+(OperatorMatrix a, OperatorMatrix const& b);
OperatorMatrix operator-(OperatorMatrix a, OperatorMatrix const& b);
OperatorMatrix operator*(cplx s, OperatorMatrix a);
/// Matrix product; skips zero entries of a and the zero flanks of each row of b.
OperatorMatrix operator*(OperatorMatrix const& a, OperatorMatrix const& b);
OperatorMatrix commutator(OperatorMatrix const& a, OperatorMatrix const& b);
/// c += scale · a b, without temporaries.
void multiply_add(OperatorMatrix& c, OperatorMatrix const& a, OperatorMatrix const& b, cplx scale);

struct Ladder
{
    OperatorMatrix a1, a2, a1_dag, a2_dag, N;
};

/// Ladder operators; creation out of n_max is dropped and flagged.
Ladder build_ladder(FockPtr space);

/// A Fock space with its ladder operators built once and shared.
class FuzzySpace
{
  public:
    explicit FuzzySpace(unsigned n_max);

    FockPtr const& fock() const { return fock_; }
    unsigned n_max() const { return fock_->n_max(); }
    Ladder const& ladder() const { return ladder_; }

  private:
    FockPtr fock_;
    Ladder ladder_;
};

struct Coordinates
{
    OperatorMatrix x1, x2, x3, r;
};

/// x_j = λ a†σ_j a and r = λ(N+1).
Coordinates coordinates(FuzzySpace const& space, Params const& params);

struct WaveOperator
{
    OperatorMatrix op;
    std::optional<unsigned> j;
    std::optional<int> m;
};

/// L_axis Ψ = ½[a†σ_axis a, Ψ], axis in {1, 2, 3}.
WaveOperator angular_momentum_apply(WaveOperator const& psi, int axis, FuzzySpace const& space);
/// Σ_i L_i L_i Ψ.
WaveOperator angular_momentum_sq_apply(WaveOperator const& psi, FuzzySpace const& space);

/// Ψ_jm with radial factor R_j on the middle level; zero on levels below j.
WaveOperator build_psi_jm(unsigned j, int m, RadialSeq const& radial, FuzzySpace const& space,
                          Params const& params);

/// Σ_α [a†_α, [a_α, Ψ]].
OperatorMatrix double_commutator(OperatorMatrix const& psi, FuzzySpace const& space);

/// Δ_λ Ψ = -(1/(λ²(N+1))) Σ_α [a†_α, [a_α, Ψ]].
WaveOperator laplacian_apply(WaveOperator const& psi, FuzzySpace const& space,
                             Params const& params);

/// H Ψ = -½ Δ_λ Ψ - (q/r) Ψ.
WaveOperator hamiltonian_apply(WaveOperator const& psi, FuzzySpace const& space,
                               Params const& params);

/// Radial values read back from Ψ_jj via <j, n| Ψ_jj |0, n+j>.
std::vector<cplx> radial_from_psi_jj(OperatorMatrix const& psi, unsigned j, Params const& params);

struct HsNorm
{
    double norm_sq = 0;
    double last_level = 0;  //!< contribution of columns on level n_max
};

/// 4πλ³ Tr[(N+1) Ψ†Ψ].
HsNorm hs_norm_sq(WaveOperator const& psi, Params const& params);

/// Weighted norm of Ψ restricted to columns on levels <= max_level.
double hs_norm_sq_levels(OperatorMatrix const& psi, Params const& params, unsigned max_level);

/// Potential solving the Laplace level recurrence with V(0) = q0 - q/λ, N = 0..n_max.
RadialSeq laplace_potential(unsigned n_max, Params const& params);
std::vector<Rational> laplace_potential_exact(unsigned n_max, Rational const& q,
                                              Rational const& lambda, Rational const& q0);

/// Eigenvalue of :N^k: on level n; negative k gives n!/(n+|k|)!.
double normal_power_apply(int k, unsigned n);

/// Matrix :N^k: from the ladder operators. For k < 0 the matrix is the
/// inverse relation Σ_α a†_α X a_α = :N^{k+1}: solved level by level.
OperatorMatrix normal_power_matrix(int k, FuzzySpace const& space);

/// Closed form (1 + λβ)^N.
OperatorMatrix normal_ordered_exp(cplx beta, FuzzySpace const& space, Params const& params);
/// Σ_k β^k :ϱ^k:/k! summed as matrices until the truncated series ends.
OperatorMatrix normal_ordered_exp_series(cplx beta, FuzzySpace const& space,
                                         Params const& params);

/// :ϱ^n e^{βϱ}: on level N, n may be negative.
cplx normal_power_exp_closed(int n, cplx beta, unsigned level, double lambda);
/// Matrix oracle for :ϱ^n e^{βϱ}: as Σ_k β^k λ^{n+k} :N^{n+k}:/k!.
OperatorMatrix normal_power_exp_series(int n, cplx beta, FuzzySpace const& space,
                                       Params const& params);

/// 4πλ³ Σ_{k=0}^{n} (k+1)².
double ball_volume(unsigned n, Params const& params);

/*!
 * Level stencil of the double commutator acting on Ψ_jj.
 *
 * For radial values R, Σ_α [a†_α,[a_α,Ψ_jj(R)]] = Ψ_jj(T) with
 * T_N = lower[N] R_{N-1} + diag[N] R_N + upper[N] R_{N+1}.
 * The coefficients are read from the matrices with three probe sequences.
 */
struct RadialStencil
{
    unsigned j = 0;
    std::vector<double> lower, diag, upper;
    std::vector<double> r_over_lambda;  //!< r Ψ_jj(R) = Ψ_jj(λ ρ_N R_N)
};

/// Stencil for N = 0 .. levels-1, memoized per j.
RadialStencil const& radial_stencil(unsigned j, unsigned levels);

/// Σ_{k=0}^{n-j} C(k+j, j) C(n-k, j) in exact integers.
BigInt binomial_convolution(unsigned n, unsigned j);

}  // namespace ncqm
