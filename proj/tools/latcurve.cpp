// Command-line front end: count, cover, jarnik, hk and verify.
// Exit status 0 on success, 1 on a verification failure, 2 on bad input.

#include "latcurve/counting.hpp"
#include "latcurve/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latcurve;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kBadInput = 2;

struct CountArgs {
    std::string poly;
    std::string box;
    std::string method = "detm";
    std::optional<unsigned> ell;
    std::string delta;
    std::string out = "json";
};

Integer parse_natural(const std::string& text, const char* what)
{
    Integer v;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || v.set_str(text, 10) != 0)
        throw InputError(std::string(what) + " must be a natural number, got '" + text + "'");
    return v;
}

int run_count(const CountArgs& a)
{
    const auto F = parse_polynomial(a.poly);
    const Integer N = parse_natural(a.box, "--box");
    if (N < 1) throw InputError("--box must be at least 1");
    CountReport report;
    if (a.method == "brute") {
        const auto bf = brute_force_count(F, N);
        report.total = bf.total;
        report.parameters.N = N;
        report.parameters.d = F.degree();
        report.parameters.convention = "box {1..N}^2";
        for (const auto& p : bf.points) report.points.emplace_back(p, 1U);
    } else {
        CountOptions o;
        o.ell = a.ell;
        if (!a.delta.empty()) o.delta = parse_rational(a.delta);
        o.with_oracle = a.method == "both";
        report = determinant_method_count(F, N, o);
    }
    std::cout << (a.out == "csv" ? report_csv(report) : report_json(report) + "\n");
    if (report.failed) return kVerificationFailed;
    if (report.oracle_total && *report.oracle_total != report.total) return kVerificationFailed;
    return kOk;
}

std::vector<LatticePoint> read_points(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open points file '" + path + "'");
    std::vector<LatticePoint> pts;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs)) continue;
        if (!(ls >> ys) || (ls >> extra))
            throw InputError(path + ":" + std::to_string(lineno) + ": expected two integers 'x y'");
        Integer x, y;
        if (x.set_str(xs, 10) != 0 || y.set_str(ys, 10) != 0)
            throw InputError(path + ":" + std::to_string(lineno) + ": not an integer pair");
        pts.push_back({x, y});
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x == pts[i - 1].x)
            throw InputError("points must have distinct x coordinates (x = " + pts[i].x.get_str() + " repeats)");
    return pts;
}

int run_cover(const std::string& path, unsigned degree)
{
    if (degree < 1) throw InputError("--degree must be at least 1");
    const auto pts = read_points(path);
    const MonomialSet M = full_set(degree);
    const auto cert = greedy_cover(pts, M);
    std::cout << cover_json(cert, M) << "\n";
    return cert.sound() ? kOk : kVerificationFailed;
}

int run_jarnik(unsigned H, const std::string& emit)
{
    if (H < 1) throw InputError("--H must be at least 1");
    const auto c = jarnik_construct(H);
    std::cout << jarnik_json(c, emit == "function") << "\n";
    return convex_slope_check(c.points) ? kOk : kVerificationFailed;
}

int run_hk(const std::string& poly, unsigned k)
{
    if (k < 1) throw InputError("--k must be at least 1");
    const auto H = hk_sequence(parse_polynomial(poly), k);
    for (unsigned i = 0; i < k; ++i) std::cout << "H_" << i + 1 << " = " << H[i].to_string() << "\n";
    return kOk;
}

int run_verify(const std::string& suite)
{
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names.push_back(suite);
    bool ok = true;
    for (const auto& name : names) {
        const auto r = run_suite(name);
        std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << ": " << r.checks << " checks, " << r.summary
                  << "\n";
        for (const auto& f : r.failures) std::cout << "      " << f << "\n";
        ok = ok && r.passed();
    }
    return ok ? kOk : kVerificationFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lattice-point counting on plane algebraic curves"};
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "count integer points of F = 0 in {1..N}^2");
    c->add_option("--poly", count.poly, "polynomial in x and y, e.g. \"x*y - 12\"")->required();
    c->add_option("--box", count.box, "box size N")->required();
    c->add_option("--method", count.method, "brute, detm or both")->check(CLI::IsMember({"brute", "detm", "both"}));
    c->add_option("--ell", count.ell, "top degree of the monomial set");
    c->add_option("--delta", count.delta, "derivative scale, e.g. 1/20");
    c->add_option("--out", count.out, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::string points_path;
    unsigned degree = 0;
    auto* cov = app.add_subcommand("cover", "cover a point set by curves of bounded degree");
    cov->add_option("--points", points_path, "file with one 'x y' pair per line")->required();
    cov->add_option("--degree", degree, "curve degree d")->required();

    unsigned H = 0;
    std::string emit = "points";
    auto* jar = app.add_subcommand("jarnik", "Jarnik's convex configuration");
    jar->add_option("--H", H, "vector height bound")->required();
    jar->add_option("--emit", emit, "points or function")->check(CLI::IsMember({"points", "function"}));

    std::string hk_poly;
    unsigned k = 0;
    auto* hk = app.add_subcommand("hk", "print the derivative polynomials H_1..H_k");
    hk->add_option("--poly", hk_poly, "polynomial in x and y")->required();
    hk->add_option("--k", k, "highest index")->required();

    std::string suite;
    auto* ver = app.add_subcommand("verify", "run an invariant suite");
    ver->add_option("--suite", suite, "suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*c) return run_count(count);
        if (*cov) return run_cover(points_path, degree);
        if (*jar) return run_jarnik(H, emit);
        if (*hk) return run_hk(hk_poly, k);
        if (*ver) {
            if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
                std::string known;
                for (const auto& n : suite_names()) known += " " + n;
                throw InputError("unknown suite '" + suite + "'; known:" + known + " all");
            }
            return run_verify(suite);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
