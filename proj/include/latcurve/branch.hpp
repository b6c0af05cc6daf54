#pragma once

// Smooth branches y = f(x) of F(x, y) = 0: implicit derivatives via the H_k
// recurrence, derivative level sets, bound partitions and the decomposition
// of a curve in a box into graph pieces with |f'| <= 1.

#include "latcurve/detmethod.hpp"

#include <optional>
#include <vector>

namespace latcurve {

/// H_1 = F_x, H_(k+1) = F_y^2 (H_k)_x - F_y F_x (H_k)_y - (2k-1) H_k (F_y F_xy - F_x F_yy).
/// Along a branch, H_k(x, f) + F_y(x, f)^(2k-1) f^(k)(x) = 0.
std::vector<BivariatePolynomial> hk_sequence(const BivariatePolynomial& F, unsigned kmax);

/// y = f(x) uses F directly; x = f(y) uses the transposed polynomial.
enum class Orientation { x_over_y, y_over_x };

const char* to_string(Orientation o);

/// End of an interval, located in the bracket [where.lo, where.hi]. A closed
/// end belongs to the interval; only exact ends can be closed.
struct Endpoint {
    RootInterval where;
    bool closed = false;

    static Endpoint exact(const Rational& v, bool closed);
    /// Smallest / largest integer on the interval side of this end.
    Integer first_integer_above() const;
    Integer last_integer_below() const;
};

struct OpenDomain {
    Endpoint left;
    Endpoint right;

    /// Outer length bound right.hi - left.lo.
    Rational outer_length() const { return right.where.hi - left.where.lo; }
    /// A rational strictly inside the domain.
    Rational sample() const;
};

/// "[a, b)" style rendering; algebraic ends print as their bracket.
std::string to_string(const OpenDomain& d);

/// The root_index-th real root (ascending) of G(x, .) for x in the domain,
/// where G is the curve in oriented coordinates. The number of real roots of
/// G(x, .) is constant on the domain and G_y does not vanish on the branch.
struct AlgebraicBranch {
    BivariatePolynomial curve; // F in original coordinates
    Orientation orientation = Orientation::x_over_y;
    OpenDomain domain;
    std::size_t root_index = 0;
    /// Seed abscissa and the bracket of the branch value above it.
    Rational seed_x;
    RootInterval seed_y;

    /// The curve in oriented coordinates.
    BivariatePolynomial oriented() const;
    /// Isolating interval of f(x) for rational x inside the domain.
    RootInterval value_at(const Rational& x) const;
    /// Converts an oriented lattice point back to original coordinates.
    LatticePoint to_original(const LatticePoint& p) const;
    std::string describe() const;
};

/// Builds a branch through the rational curve point (x0, y0) in oriented
/// coordinates, with domain [x0, x0] widened to the given rational interval.
/// The interval must avoid the critical values of the oriented curve.
AlgebraicBranch make_branch(const BivariatePolynomial& F, Orientation o, const Rational& lo, const Rational& hi,
                            const Rational& x0, const Rational& y0);

/// f^(i)(at)/i! for i = 0..kmax at a rational point of the branch.
std::vector<Rational> taylor_coefficients(const AlgebraicBranch& branch, const Rational& at, unsigned kmax);
/// Same, for the branch of F through the rational point (x0, y0).
std::vector<Rational> taylor_coefficients(const BivariatePolynomial& F, const Rational& x0, const Rational& y0,
                                          unsigned kmax);

/// R_c = H_i + F_y^(2i-1) i! c, whose zeros on the branch are the x with
/// f^(i)(x)/i! = c. For i = 0 it is y - c.
BivariatePolynomial level_polynomial(const BivariatePolynomial& G, const std::vector<BivariatePolynomial>& hk, unsigned i,
                                     const Rational& c);

/// Isolating intervals of the x in the branch domain with f^(i)(x)/i! = c.
/// Roots that cannot be told apart from a neighbouring branch are kept.
std::vector<RootInterval> level_set_abscissas(const AlgebraicBranch& branch, unsigned i, const Rational& c);

enum class BoundFlag { small, large };

struct PartitionPiece {
    OpenDomain interval;
    /// flags[i] certifies |f^(i)/i!| <= N delta^i (small) or >= (large).
    std::vector<BoundFlag> flags;

    /// First index with a large flag, if any.
    std::optional<std::size_t> first_large() const;
    bool all_small() const { return !first_large(); }
};

struct IntervalPartition {
    std::vector<PartitionPiece> pieces;
};

/// Cuts the branch domain at the level sets f^(i)/i! = +-N delta^i for
/// 0 <= i < D and flags each piece from one exact interior sample.
IntervalPartition partition_by_bounds(const AlgebraicBranch& branch, std::size_t D, const Rational& N,
                                      const Rational& delta);

/// Precomputed H_k and level-set roots shared by all branches of one
/// oriented curve, so the partition of many branches costs one elimination.
class PartitionContext {
public:
    PartitionContext(const BivariatePolynomial& oriented, std::size_t D, const Rational& N, const Rational& delta,
                     const Rational& range_lo, const Rational& range_hi);

    IntervalPartition partition(const AlgebraicBranch& branch) const;
    const std::vector<BivariatePolynomial>& hk() const { return hk_; }

private:
    BivariatePolynomial G_;
    std::size_t D_;
    Rational N_, delta_;
    std::vector<BivariatePolynomial> hk_;
    std::vector<RootInterval> cuts_;
    std::vector<bool> constant_level_; // f^(i)/i! is +-N delta^i on the whole curve
};

/// |piece| <= 2 / delta.
bool large_interval_check(const Rational& lo, const Rational& hi, unsigned k, const Rational& X, const Rational& delta);
/// Exact version for algebraic ends: refines the end brackets until the
/// outer or inner length decides the comparison.
bool large_interval_check(const OpenDomain& piece, unsigned k, const Rational& X, const Rational& delta);

struct GraphDecomposition {
    std::vector<AlgebraicBranch> branches;
    /// Lattice points of F in [1,N]^2 on a critical vertical or horizontal line.
    std::vector<LatticePoint> exceptions;
    /// Integer critical abscissas (x-over-y) and ordinates (y-over-x).
    std::vector<Integer> critical_x;
    std::vector<Integer> critical_y;
    /// Lattice points in [1,N]^2 per branch, in original coordinates, sorted
    /// by the oriented abscissa.
    std::vector<std::vector<LatticePoint>> branch_points;
};

/// Splits F = 0 in [0,N]^2 into branches with |f'| <= 1 in their orientation
/// plus an explicit exception set. Every lattice point of F in [1,N]^2 is
/// either an exception or lies on exactly one branch.
GraphDecomposition graph_decompose(const BivariatePolynomial& F, const Integer& N);

/// Real roots of the nonzero polynomials in `polys` inside [lo, hi], merged
/// into disjoint brackets that contain no integer unless exact.
std::vector<RootInterval> merged_roots(const std::vector<IntPoly>& polys, const Rational& lo, const Rational& hi);

} // namespace latcurve
