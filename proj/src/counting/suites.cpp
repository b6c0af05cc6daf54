#include "latcurve/suites.hpp"

#include "latcurve/counting.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace latcurve {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Fixture {
    const char* poly;
    std::vector<long> boxes;
};

const std::vector<Fixture>& fixtures()
{
    static const std::vector<Fixture> f{
        {"x - y^2", {100, 1000}},        {"x - y^3", {100, 1000}},        {"x - y^5", {100, 1000}},
        {"x*y - 12", {100, 1000}},       {"x^2 + y^2 - 25", {100, 1000}}, {"x^2 + y^2 - 65", {100, 1000}},
        {"y^2 - x^3 - x - 1", {50}},     {"x^2 - 2*y^2 - 1", {50}},
    };
    return f;
}

// Small delta used to force nontrivial partitions; the default delta exceeds
// 1 at these box sizes and leaves every branch in one piece.
const Rational kSmallDelta(1, 10);

struct FixtureRun {
    std::string poly;
    Integer N;
    std::optional<Rational> delta;
    Integer brute = 0;
    CountReport report;
    std::string error;
    double brute_seconds = 0, detm_seconds = 0;
};

// Runs are shared by the oracle, budget and partition suites.
const std::vector<FixtureRun>& fixture_runs()
{
    static std::once_flag once;
    static std::vector<FixtureRun> runs;
    std::call_once(once, [] {
        for (const auto& f : fixtures()) {
            std::vector<std::pair<long, std::optional<Rational>>> plan;
            for (long n : f.boxes) plan.emplace_back(n, std::nullopt);
            plan.emplace_back(f.boxes.front(), kSmallDelta);
            for (const auto& [n, delta] : plan) {
                FixtureRun r;
                r.poly = f.poly;
                r.N = n;
                r.delta = delta;
                try {
                    const auto F = parse_polynomial(f.poly);
                    auto t0 = Clock::now();
                    r.brute = brute_force_count(F, r.N).total;
                    r.brute_seconds = seconds_since(t0);
                    CountOptions o;
                    o.delta = delta;
                    t0 = Clock::now();
                    r.report = determinant_method_count(F, r.N, o);
                    r.detm_seconds = seconds_since(t0);
                } catch (const std::exception& e) {
                    r.error = e.what();
                }
                runs.push_back(std::move(r));
            }
        }
    });
    return runs;
}

std::string run_label(const FixtureRun& r)
{
    std::string s = r.poly + " N=" + r.N.get_str();
    if (r.delta) s += " delta=" + to_string(*r.delta);
    return s;
}

Rational abs_q(const Rational& v) { return v < 0 ? Rational(-v) : v; }

// Exact Taylor coefficients g^(k)(m)/k! of a polynomial.
std::vector<Rational> taylor_at(UnivariatePolynomial g, const Rational& m)
{
    std::vector<Rational> out;
    Rational fact = 1;
    for (unsigned k = 0; !g.is_zero(); ++k) {
        if (k > 0) fact *= k;
        out.push_back(g.eval(m) / fact);
        g = g.derivative();
    }
    return out;
}

// Upper bound for max |g| on [a, b]: exact at the endpoints and at rational
// critical points, a Taylor enclosure on a narrow bracket otherwise.
Rational sup_abs_upper(const UnivariatePolynomial& g, const Rational& a, const Rational& b)
{
    if (g.is_zero()) return 0;
    Rational best = std::max(abs_q(g.eval(a)), abs_q(g.eval(b)));
    const auto dg = g.derivative();
    if (dg.degree() < 1 || a == b) return best;
    const Rational width = (b - a) / Rational(1L << 30);
    for (auto r : isolate_real_roots(dg, {a, b})) {
        r = refine_root(r, width);
        const Rational m = (r.lo + r.hi) / 2, rad = (r.hi - r.lo) / 2;
        Rational bound = 0, p = 1;
        for (const auto& c : taylor_at(g, m)) {
            bound += abs_q(c) * p;
            p *= rad;
        }
        best = std::max(best, bound);
    }
    return best;
}

// Coefficients c_0..c_K of the branch y = sum c_k (x - x0)^k of F through
// (x0, y0), solved order by order from F(x0 + t, y(t)) = 0.
std::vector<Rational> series_branch(const BivariatePolynomial& F, const Rational& x0, const Rational& y0, unsigned K)
{
    using Series = std::vector<Rational>;
    auto mul = [K](const Series& a, const Series& b) {
        Series out(K + 1);
        for (std::size_t i = 0; i <= K; ++i)
            for (std::size_t j = 0; i + j <= K; ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    const Rational fy = F.partial(Variable::y).evaluate(x0, y0);
    Series c(K + 1);
    c[0] = y0;
    Series xs(K + 1);
    xs[0] = x0;
    if (K >= 1) xs[1] = 1;
    for (unsigned k = 1; k <= K; ++k) {
        // c_k enters [t^k] only through fy * c_k, so solve with c_k = 0.
        Rational coeff = 0;
        for (const auto& [e, v] : F.terms()) {
            Series term(K + 1);
            term[0] = v;
            for (unsigned i = 0; i < e.j1; ++i) term = mul(term, xs);
            for (unsigned i = 0; i < e.j2; ++i) term = mul(term, c);
            coeff += term[k];
        }
        c[k] = -coeff / fy;
    }
    return c;
}

UnivariatePolynomial random_poly(std::mt19937_64& rng, int degree, int span)
{
    std::uniform_int_distribution<int> coef(-span, span), den(1, 3);
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) {
        v = Rational(coef(rng), den(rng));
        v.canonicalize();
    }
    if (c.back() == 0) c.back() = 1;
    return UnivariatePolynomial(std::move(c));
}

// ---------------------------------------------------------------------------

void oracle_suite(SuiteResult& res)
{
    double worst = 0;
    for (const auto& r : fixture_runs()) {
        if (r.delta) continue;
        ++res.checks;
        const std::string label = run_label(r);
        if (!r.error.empty()) {
            res.failures.push_back(label + ": " + r.error);
            continue;
        }
        const double t = r.brute_seconds + r.detm_seconds;
        worst = std::max(worst, t);
        if (r.report.total != r.brute)
            res.failures.push_back(label + ": pipeline " + r.report.total.get_str() + " vs brute force " + r.brute.get_str());
        if (r.report.failed) res.failures.push_back(label + ": report flagged as failed");
        if (t >= 60) res.failures.push_back(label + ": took " + std::to_string(t) + " s");
    }
    std::ostringstream os;
    os << res.checks << " runs, slowest " << worst << " s";
    res.summary = os.str();
}

void model_family_suite(SuiteResult& res)
{
    for (unsigned d = 2; d <= 5; ++d) {
        for (long n : {100L, 1000L, 10000L}) {
            ++res.checks;
            const Integer N(n);
            Integer k = 0; // largest k with k^d <= N, by counting up
            for (Integer next = 1;; ++next) {
                Integer p;
                mpz_pow_ui(p.get_mpz_t(), next.get_mpz_t(), d);
                if (p > N) break;
                k = next;
            }
            const auto F = BivariatePolynomial::x() - BivariatePolynomial::y().pow(d);
            const Integer got = brute_force_count(F, N).total;
            if (got != k)
                res.failures.push_back("x - y^" + std::to_string(d) + " N=" + N.get_str() + ": " + got.get_str() +
                                       " vs " + k.get_str());
        }
    }
    res.summary = std::to_string(res.checks) + " (d, N) pairs";
}

void hk_suite(SuiteResult& res)
{
    struct Case {
        const char* poly;
        std::vector<std::pair<Rational, Rational>> points;
    };
    const std::vector<Case> cases{
        {"y^2 - x^3 - x - 1", {{0, 1}, {0, -1}, {72, 611}, {Rational(1, 4), Rational(9, 8)}}},
        {"x*y - 12", {{1, 12}, {3, 4}, {6, 2}, {Rational(1, 2), 24}}},
        {"x^2 + y^2 - 25", {{3, 4}, {4, 3}, {0, 5}, {Rational(7, 5), Rational(24, 5)}}},
    };
    std::size_t evaluated = 0;
    for (const auto& c : cases) {
        const auto F = parse_polynomial(c.poly);
        const auto H = hk_sequence(F, 6);
        const auto Fy = F.partial(Variable::y);
        for (const auto& [x0, y0] : c.points) {
            const std::string where = std::string(c.poly) + " at (" + to_string(x0) + ", " + to_string(y0) + ")";
            ++res.checks;
            if (F.evaluate(x0, y0) != 0 || Fy.evaluate(x0, y0) == 0) {
                res.failures.push_back(where + ": not a regular curve point");
                continue;
            }
            const auto coeffs = series_branch(F, x0, y0, 6);
            const Rational fy = Fy.evaluate(x0, y0);
            Rational fact = 1;
            for (unsigned k = 1; k <= 6; ++k) {
                fact *= k;
                ++evaluated;
                if (H[k - 1].evaluate(x0, y0) + pow_of(fy, 2 * k - 1) * fact * coeffs[k] != 0)
                    res.failures.push_back(where + ": identity fails at k=" + std::to_string(k));
            }
        }
    }
    for (const auto& f : fixtures()) {
        const auto F = parse_polynomial(f.poly);
        const long d = F.degree();
        const auto H = hk_sequence(F, 8);
        for (long k = 1; k <= 8; ++k) {
            ++res.checks;
            const long bound = (k - 1) * (2 * d - 3) + d - 1;
            if (H[static_cast<std::size_t>(k - 1)].degree() > bound)
                res.failures.push_back(std::string(f.poly) + ": deg H_" + std::to_string(k) + " = " +
                                       std::to_string(H[static_cast<std::size_t>(k - 1)].degree()) + " > " +
                                       std::to_string(bound));
        }
    }
    res.summary = std::to_string(evaluated) + " identity evaluations, degree bounds for " +
                  std::to_string(fixtures().size()) + " curves up to k=8";
}

void interpolation_suite(SuiteResult& res)
{
    std::mt19937_64 rng(0x1a7c0de);
    std::size_t tight = 0, vanishing = 0;
    for (int inst = 0; inst < 200; ++inst) {
        ++res.checks;
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<UnivariatePolynomial> f;
        // Degrees >= n - 1 keep the determinant generically nonzero.
        for (int j = 0; j < n; ++j) f.push_back(random_poly(rng, n - 1 + static_cast<int>(rng() % 3), 5));
        const Rational a(static_cast<long>(rng() % 11) - 5);
        std::vector<Rational> xs;
        for (int i = 0; i < n; ++i) {
            Rational x = a + Rational(static_cast<long>(rng() % 25), 1 + static_cast<long>(rng() % 4));
            x.canonicalize();
            xs.push_back(x);
        }
        if (inst % 20 == 0 && n >= 2) xs[1] = xs[0]; // repeated node
        const Rational lo = *std::min_element(xs.begin(), xs.end());
        const Rational hi = *std::max_element(xs.begin(), xs.end());
        RationalMatrix V(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        RationalMatrix A(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            UnivariatePolynomial g = f[static_cast<std::size_t>(j)];
            Rational fact = 1;
            for (int i = 0; i < n; ++i) {
                V(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f[static_cast<std::size_t>(j)].eval(xs[static_cast<std::size_t>(i)]);
                if (i > 0) fact *= i;
                A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = sup_abs_upper(g, lo, hi) / fact;
                g = g.derivative();
            }
        }
        const Rational det = abs_q(rational_determinant(V));
        const Rational bound = interpolation_determinant_bound(xs, A);
        if (det > bound)
            res.failures.push_back("instance " + std::to_string(inst) + ": |det| " + to_string(det) + " > " + to_string(bound));
        if (det == 0) ++vanishing;
        else if (det == bound) ++tight;
    }
    res.summary = "200 instances, " + std::to_string(vanishing) + " singular, " + std::to_string(tight) +
                  " tight";
}

void budget_suite(SuiteResult& res)
{
    std::size_t pieces = 0;
    for (const auto& r : fixture_runs()) {
        if (!r.error.empty()) {
            ++res.checks;
            res.failures.push_back(run_label(r) + ": " + r.error);
            continue;
        }
        for (const auto& b : r.report.branches)
            for (const auto& p : b.pieces) {
                if (!p.covered) continue;
                ++res.checks;
                ++pieces;
                if (Integer(p.curves.size()) > p.budget)
                    res.failures.push_back(run_label(r) + " " + p.interval + ": " + std::to_string(p.curves.size()) +
                                           " curves > budget " + p.budget.get_str());
            }
    }

    // Segments on which the power-form inequality holds must be covered by a
    // single curve, whatever points of the graph they contain.
    std::size_t segments = 0, max_points = 0;
    auto segment = [&](const UnivariatePolynomial& f, const Rational& x0, const DerivativeBoundSpec& spec,
                       const MonomialSet& M, const std::string& label) {
        ++res.checks;
        ++segments;
        Integer L = 0;
        while (segment_coverable(Rational(L + 1), spec, M)) ++L;
        const Rational lo = x0, hi = x0 + L;
        UnivariatePolynomial g = f;
        Rational fact = 1;
        for (std::size_t i = 0; i < M.D; ++i) {
            if (i > 0) fact *= static_cast<unsigned long>(i);
            if (sup_abs_upper(g, lo, hi) / fact > spec.X * pow_of(spec.delta, static_cast<unsigned>(i))) {
                res.failures.push_back(label + ": derivative hypothesis fails at i=" + std::to_string(i));
                return;
            }
            g = g.derivative();
        }
        std::vector<LatticePoint> pts;
        for (Integer x = ceil_of(lo); x <= hi; ++x) {
            const Rational y = f.eval(Rational(x));
            if (y.get_den() == 1) pts.push_back({x, y.get_num()});
        }
        max_points = std::max(max_points, pts.size());
        const auto cert = greedy_cover(pts, M);
        if (cert.curves.size() > 1 || !cert.sound())
            res.failures.push_back(label + ": " + std::to_string(cert.curves.size()) + " curves for " +
                                   std::to_string(pts.size()) + " points");
    };
    {
        const Rational N(1000000);
        const DerivativeBoundSpec spec{N, 1 / N, N};
        for (int s = 0; s < 25; ++s) {
            const long q = 1 + s % 3, a = (s % (2 * q + 1)) - q;
            const Rational x0(1000 + 37 * s), y0(500000);
            const UnivariatePolynomial f({y0 - Rational(a, q) * x0, Rational(a, q)});
            segment(f, x0, spec, full_set(1), "line " + std::to_string(s));
        }
    }
    {
        const Rational N(100000000);
        const DerivativeBoundSpec spec{N, 1 / N, N};
        for (int s = 0; s < 15; ++s) {
            const long q = 1 + s % 4, a = (s % (2 * q + 1)) - q;
            const Rational x0(5000 + 101 * s), y0(40000000);
            const UnivariatePolynomial f({y0 - Rational(a, q) * x0, Rational(a, q)});
            segment(f, x0, spec, full_set(2), "line/conic " + std::to_string(s));
        }
        for (int s = 0; s < 10; ++s) {
            // f = y0 + (x - x0)^2 / N, with |f''/2| = 1/N = X delta^2.
            const Rational x0(7000 + 13 * s), y0(30000000 + s);
            const UnivariatePolynomial f({y0 + x0 * x0 / N, -2 * x0 / N, 1 / N});
            segment(f, x0, spec, full_set(2), "parabola " + std::to_string(s));
        }
    }
    res.summary = std::to_string(pieces) + " covered pieces, " + std::to_string(segments) +
                  " constructed segments (up to " + std::to_string(max_points) + " points each)";
}

void partition_suite(SuiteResult& res)
{
    std::size_t largest = 0, typed = 0;
    for (const auto& r : fixture_runs()) {
        if (!r.error.empty()) {
            ++res.checks;
            res.failures.push_back(run_label(r) + ": " + r.error);
            continue;
        }
        const auto F = ingest_curve(parse_polynomial(r.poly));
        const long d = r.report.parameters.d;
        const auto M = punctured_set(static_cast<unsigned>(d), r.report.parameters.ell, corner_index(F));
        const Integer cap = Integer(64) * Integer(M.D) * Integer(M.D) * d * d;
        for (const auto& b : r.report.branches) {
            ++res.checks;
            largest = std::max(largest, b.pieces.size());
            if (Integer(b.pieces.size()) > cap)
                res.failures.push_back(run_label(r) + " " + b.descriptor + ": " + std::to_string(b.pieces.size()) +
                                       " pieces > " + cap.get_str());
            for (const auto& p : b.pieces) {
                if (!p.large_index || *p.large_index == 0) continue;
                ++res.checks;
                ++typed;
                if (!p.length_ok) res.failures.push_back(run_label(r) + " " + p.interval + ": longer than 2/delta");
            }
        }
    }
    res.summary = "largest partition " + std::to_string(largest) + " pieces, " + std::to_string(typed) +
                  " large-flag pieces length-checked";
}

void jarnik_suite(SuiteResult& res)
{
    auto t_by_gcd = [](unsigned H) {
        std::size_t t = 0;
        for (unsigned q = 1; q <= H; ++q)
            for (unsigned a = 1; a <= H; ++a)
                if (std::gcd(q, a) == 1) ++t;
        return t;
    };
    auto expect = [&](bool ok, const std::string& what) {
        ++res.checks;
        if (!ok) res.failures.push_back(what);
    };
    for (unsigned H = 1; H <= 50; ++H) {
        const auto c = jarnik_construct(H);
        const std::string h = "H=" + std::to_string(H) + ": ";
        const std::size_t t = c.t();
        expect(t == t_by_gcd(H), h + "t differs from the gcd count");
        expect(c.Qt() == c.At(), h + "Q_t != A_t");
        expect(c.Qt() <= Integer(H) * H * H, h + "Q_t > H^3");
        if (H >= 5) expect(5 * t >= 3 * static_cast<std::size_t>(H) * H, h + "t < 0.6 H^2");
        expect(convex_slope_check(c.points), h + "points not strictly convex");
        const Integer tt(static_cast<unsigned long>(t));
        expect(tt * tt * tt <= 32 * c.Qt() * c.Qt(), h + "t^3 > 32 N^2");
        if (H == 3) {
            expect(t == 7, h + "t != 7");
            expect(c.Qt() == 13, h + "Q_t != 13");
        }
        if (H == 10) expect(t == 63, h + "t != 63");
    }
    res.summary = "H = 1..50";
}

void bezout_suite(SuiteResult& res)
{
    std::mt19937_64 rng(0xbe2047);
    const long N = 20;
    std::uniform_int_distribution<int> coef(-4, 4), pt(1, N);
    auto random_curve = [&](int deg, long px, long py) {
        BivariatePolynomial F;
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                if (rng() % 2) F = F + BivariatePolynomial::monomial({static_cast<unsigned>(i), static_cast<unsigned>(j)}, coef(rng));
        if (F.degree() < deg) F = F + BivariatePolynomial::monomial({static_cast<unsigned>(deg - deg / 2), static_cast<unsigned>(deg / 2)});
        return F - BivariatePolynomial(F.evaluate(Rational(px), Rational(py)));
    };
    std::size_t pairs = 0, rejected = 0, points = 0;
    while (pairs < 500) {
        const long px = pt(rng), py = pt(rng);
        const auto F = random_curve(1 + static_cast<int>(rng() % 4), px, py);
        const auto G = random_curve(1 + static_cast<int>(rng() % 4), px, py);
        if (F.degree() < 1 || G.degree() < 1) continue;
        std::vector<LatticePoint> got;
        try {
            got = bezout_intersect(F, G, Integer(N));
        } catch (const InputError& e) {
            if (std::string(e.what()).find("hypothesis violated") == std::string::npos) throw;
            ++rejected;
            continue;
        }
        ++pairs;
        ++res.checks;
        points += got.size();
        const std::string label = "F=" + F.to_string() + ", G=" + G.to_string();
        if (static_cast<long>(got.size()) > static_cast<long>(F.degree()) * G.degree())
            res.failures.push_back(label + ": " + std::to_string(got.size()) + " points exceed deg F deg G");
        std::vector<LatticePoint> brute;
        for (long x = 1; x <= N; ++x)
            for (long y = 1; y <= N; ++y)
                if (F.vanishes_at(x, y) && G.vanishes_at(x, y)) brute.push_back({x, y});
        std::sort(got.begin(), got.end());
        if (got != brute) res.failures.push_back(label + ": differs from the box scan");
    }
    res.summary = std::to_string(pairs) + " pairs (" + std::to_string(rejected) + " with a common factor redrawn), " +
                  std::to_string(points) + " intersection points";
}

void monomial_suite(SuiteResult& res)
{
    for (unsigned d = 2; d <= 6; ++d) {
        const auto full = full_set(d);
        ++res.checks;
        const Integer Dfull((d + 1) * (d + 2) / 2);
        if (Integer(full.D) != Dfull || 3 * full.p != d * Dfull || full.p != full.q)
            res.failures.push_back("full_set(" + std::to_string(d) + ") weights");
        for (unsigned ell = d; ell <= d + 6; ++ell)
            for (unsigned iF = 0; iF <= d; ++iF) {
                ++res.checks;
                const auto M = punctured_set(d, ell, iF);
                const std::string label = "d=" + std::to_string(d) + " ell=" + std::to_string(ell) + " iF=" + std::to_string(iF);
                if (Integer(M.D) != Integer(d) * (ell - d + 1)) res.failures.push_back(label + ": D");
                if (2 * (M.p + M.q) != Integer(d) * (ell * (ell + 1) - d * (d - 1))) res.failures.push_back(label + ": p+q");
                std::map<unsigned, unsigned> per_degree;
                for (const auto& e : M.members) ++per_degree[e.degree()];
                for (unsigned h = d; h <= ell; ++h)
                    if (per_degree[h] != d) res.failures.push_back(label + ": degree " + std::to_string(h) + " layer");
            }
    }
    res.summary = std::to_string(res.checks) + " sets";
}

struct Entry {
    const char* name;
    const char* title;
    void (*run)(SuiteResult&);
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> e{
        {"oracle", "oracle equivalence", oracle_suite},
        {"model-family", "model-family exactness", model_family_suite},
        {"hk", "H_k identity and degree bound", hk_suite},
        {"interpolation", "interpolation determinant inequality", interpolation_suite},
        {"budget", "curve budget and single-curve segments", budget_suite},
        {"partition", "partition size and large-piece length", partition_suite},
        {"jarnik", "Jarnik construction", jarnik_suite},
        {"bezout", "Bezout cap", bezout_suite},
        {"monomial", "monomial-set formulas", monomial_suite},
    };
    return e;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : entries()) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name)
{
    for (const auto& e : entries()) {
        if (name != e.name) continue;
        SuiteResult res;
        res.name = e.name;
        res.title = e.title;
        const auto t0 = Clock::now();
        try {
            e.run(res);
        } catch (const std::exception& ex) {
            res.failures.push_back(std::string("aborted: ") + ex.what());
        }
        res.seconds = seconds_since(t0);
        return res;
    }
    throw InputError("unknown suite '" + name + "'");
}

} // namespace latcurve
