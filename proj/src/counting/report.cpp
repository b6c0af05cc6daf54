#include "latcurve/counting.hpp"

#include <json.hpp>

#include <sstream>

namespace latcurve {

namespace {

using nlohmann::ordered_json;

ordered_json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json point_json(const LatticePoint& p) { return ordered_json::array({integer_json(p.x), integer_json(p.y)}); }

ordered_json points_json(const std::vector<LatticePoint>& ps)
{
    ordered_json a = ordered_json::array();
    for (const auto& p : ps) a.push_back(point_json(p));
    return a;
}

} // namespace

std::string report_json(const CountReport& r)
{
    ordered_json j;
    j["parameters"] = {{"N", integer_json(r.parameters.N)},
                       {"d", r.parameters.d},
                       {"ell", r.parameters.ell},
                       {"delta", to_string(r.parameters.delta)},
                       {"monomials", r.parameters.monomials},
                       {"convention", r.parameters.convention}};
    j["total"] = integer_json(r.total);
    j["oracle_total"] = r.oracle_total ? integer_json(*r.oracle_total) : ordered_json(nullptr);
    ordered_json branches = ordered_json::array();
    for (const auto& b : r.branches) {
        ordered_json pieces = ordered_json::array();
        for (const auto& p : b.pieces) {
            ordered_json flags = ordered_json::array();
            for (auto f : p.flags) flags.push_back(f == BoundFlag::small ? "small" : "large");
            ordered_json curves = ordered_json::array();
            for (const auto& c : p.curves) curves.push_back({{"poly", c.curve.to_string()}, {"points", points_json(c.points)}});
            ordered_json pj = {{"interval", p.interval}, {"flags", flags}, {"covered", p.covered}};
            if (p.covered) {
                pj["budget"] = integer_json(p.budget);
                pj["budget_ok"] = p.budget_ok;
            }
            if (p.large_index) {
                pj["large_index"] = *p.large_index;
                pj["length_ok"] = p.length_ok;
            }
            pj["curves"] = curves;
            pj["direct_points"] = points_json(p.direct_points);
            pieces.push_back(pj);
        }
        branches.push_back({{"domain", b.descriptor}, {"orientation", to_string(b.orientation)}, {"pieces", pieces}});
    }
    j["branches"] = branches;
    j["exceptions"] = points_json(r.exceptions);
    ordered_json pts = ordered_json::array();
    for (const auto& [p, m] : r.points) pts.push_back({{"x", integer_json(p.x)}, {"y", integer_json(p.y)}, {"multiplicity", m}});
    j["points"] = pts;
    j["warnings"] = r.warnings;
    j["failed"] = r.failed;
    return j.dump(2);
}

std::string report_csv(const CountReport& r)
{
    std::ostringstream os;
    os << "x,y,curve_index\n";
    long index = 0;
    for (const auto& b : r.branches)
        for (const auto& p : b.pieces) {
            for (const auto& c : p.curves) {
                for (const auto& pt : c.points) os << pt.x << ',' << pt.y << ',' << index << '\n';
                ++index;
            }
            for (const auto& pt : p.direct_points) os << pt.x << ',' << pt.y << ",-1\n";
        }
    for (const auto& pt : r.exceptions) os << pt.x << ',' << pt.y << ",-1\n";
    // Brute-force reports carry points only.
    if (r.branches.empty() && r.exceptions.empty())
        for (const auto& [pt, m] : r.points) os << pt.x << ',' << pt.y << ",-1\n";
    return os.str();
}

std::string jarnik_json(const JarnikConfiguration& c, bool with_function)
{
    ordered_json j;
    j["H"] = c.H;
    j["t"] = c.t();
    j["Q_t"] = integer_json(c.Qt());
    j["A_t"] = integer_json(c.At());
    j["epsilon"] = to_string(c.epsilon);
    ordered_json vs = ordered_json::array(), slopes = ordered_json::array();
    for (const auto& [q, a] : c.vectors) {
        vs.push_back({integer_json(q), integer_json(a)});
        slopes.push_back(to_string(make_rational(a, q)));
    }
    j["vectors"] = vs;
    j["slopes"] = slopes;
    j["points"] = points_json(c.points);
    j["convex"] = convex_slope_check(c.points);
    if (with_function) {
        ordered_json segs = ordered_json::array();
        for (std::size_t s = 0; s < c.t(); ++s) {
            const Rational a(c.points[s].x), b(c.points[s + 1].x);
            const auto k = c.taylor(a, 3);
            // Re-centre the segment quadratic at 0 for printing.
            const UnivariatePolynomial f({k[0] - k[1] * a + k[2] * a * a, k[1] - 2 * k[2] * a, k[2]});
            segs.push_back({{"from", to_string(a)}, {"to", to_string(b)}, {"f", f.to_string('x')}});
        }
        j["segments"] = segs;
    }
    return j.dump(2);
}

std::string cover_json(const CoverCertificate& c, const MonomialSet& M)
{
    ordered_json j;
    j["monomials"] = M.descriptor;
    j["D"] = M.D;
    ordered_json curves = ordered_json::array();
    for (std::size_t k = 0; k < c.curves.size(); ++k) {
        std::vector<LatticePoint> on;
        for (const auto& [p, idx] : c.assignment)
            if (idx == k) on.push_back(p);
        curves.push_back({{"poly", c.curves[k].to_string()}, {"points", points_json(on)}});
    }
    j["curves"] = curves;
    j["sound"] = c.sound();
    return j.dump(2);
}

} // namespace latcurve
