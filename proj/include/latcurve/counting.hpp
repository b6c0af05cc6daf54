#pragma once

// End-to-end counting: brute-force oracle, Bezout intersections, the
// determinant-method pipeline, Jarnik's convex configurations and the
// convex cover counter.

#include "latcurve/branch.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace latcurve {

struct BruteForceResult {
    Integer total = 0;
    std::vector<LatticePoint> points; // sorted by (x, y)
};

/// Integer points of F in {1..N}^2. Throws InputError for the zero
/// polynomial or a vertical/horizontal line factor meeting the box.
/// `threads` = 0 picks the hardware concurrency.
BruteForceResult brute_force_count(const BivariatePolynomial& F, const Integer& N, unsigned threads = 0);

/// Common integer points of F and G in {1..N}^2 via resultants. Throws
/// InputError("Bézout hypothesis violated") when F and G share a component.
std::vector<LatticePoint> bezout_intersect(const BivariatePolynomial& F, const BivariatePolynomial& G, const Integer& N);

struct CurveCount {
    BivariatePolynomial curve; // original coordinates
    std::vector<LatticePoint> points;
};

struct PieceReport {
    std::string interval;
    std::vector<BoundFlag> flags;
    bool covered = false; // all flags small, counted through cover curves
    CoverCertificate certificate;
    std::vector<CurveCount> curves;
    Integer budget = 0;
    bool budget_ok = true;
    /// Type-(ii) pieces: small below k, large at k >= 1.
    std::optional<unsigned> large_index;
    bool length_ok = true;
    std::vector<LatticePoint> direct_points;
};

struct BranchReport {
    std::string descriptor;
    Orientation orientation = Orientation::x_over_y;
    std::vector<PieceReport> pieces;
};

struct CountParameters {
    Integer N = 0;
    int d = 0;
    unsigned ell = 0;
    Rational delta = 0;
    std::string monomials;
    std::string convention;
};

struct CountReport {
    Integer total = 0;
    std::optional<Integer> oracle_total;
    CountParameters parameters;
    std::vector<BranchReport> branches;
    std::vector<LatticePoint> exceptions;
    /// Every counted point with the number of times it was found.
    std::vector<std::pair<LatticePoint, unsigned>> points;
    std::vector<std::string> warnings;
    bool failed = false;
};

struct CountOptions {
    std::optional<unsigned> ell;
    std::optional<Rational> delta;
    bool with_oracle = false;
};

/// Default ell = max(d, ceil(log2 N)).
unsigned default_ell(int d, const Integer& N);
/// Default delta = K^(2d)/N with K = (d ell)^2.
Rational default_delta(int d, unsigned ell, const Integer& N);

/// Checks the pipeline preconditions on F: nonzero degree >= 2, square-free
/// in y and free of axis-parallel line factors. Returns F made primitive.
BivariatePolynomial ingest_curve(const BivariatePolynomial& F);

CountReport determinant_method_count(const BivariatePolynomial& F, const Integer& N, const CountOptions& options = {});

struct JarnikConfiguration {
    unsigned H = 0;
    std::vector<std::pair<Integer, Integer>> vectors; // (q, a) sorted by a/q
    std::vector<LatticePoint> points;                 // (Q_i, A_i), i = 0..t
    Rational epsilon = 0;

    std::size_t t() const { return vectors.size(); }
    const Integer& Qt() const { return points.back().x; }
    const Integer& At() const { return points.back().y; }
    /// The smoothed convex function at x in [0, Q_t] and its Taylor
    /// coefficients (from the segment to the right of x, left at Q_t).
    Rational value(const Rational& x) const;
    std::vector<Rational> taylor(const Rational& x, unsigned count) const;
};

JarnikConfiguration jarnik_construct(unsigned H);

/// Consecutive chord slopes strictly increase.
bool convex_slope_check(const std::vector<LatticePoint>& points);

/// Provider of f^(i)(x)/i! at rational x on the domain [lo, hi].
class TaylorOracle {
public:
    virtual ~TaylorOracle() = default;
    virtual Rational lo() const = 0;
    virtual Rational hi() const = 0;
    virtual std::vector<Rational> coefficients(const Rational& x, unsigned count) const = 0;
};

class PolynomialOracle final : public TaylorOracle {
public:
    PolynomialOracle(UnivariatePolynomial f, Rational lo, Rational hi);
    Rational lo() const override { return lo_; }
    Rational hi() const override { return hi_; }
    std::vector<Rational> coefficients(const Rational& x, unsigned count) const override;

private:
    UnivariatePolynomial f_;
    Rational lo_, hi_;
};

class JarnikOracle final : public TaylorOracle {
public:
    explicit JarnikOracle(JarnikConfiguration c) : c_(std::move(c)) {}
    Rational lo() const override { return 0; }
    Rational hi() const override { return Rational(c_.Qt()); }
    std::vector<Rational> coefficients(const Rational& x, unsigned count) const override { return c_.taylor(x, count); }

private:
    JarnikConfiguration c_;
};

/// Counts the lattice points of a convex graph in [0,N]^2 by a greedy cover
/// with all monomials of degree <= d, checking the oracle's derivative bounds
/// |f^(i)/i!| <= N delta^i at every integer abscissa.
CountReport convex_cover_count(const TaylorOracle& oracle, unsigned d, const Integer& N, const Rational& delta);

/// Structured JSON / CSV renderings of a report.
std::string report_json(const CountReport& r);
std::string report_csv(const CountReport& r);
std::string jarnik_json(const JarnikConfiguration& c, bool with_function);
std::string cover_json(const CoverCertificate& c, const MonomialSet& M);

} // namespace latcurve
