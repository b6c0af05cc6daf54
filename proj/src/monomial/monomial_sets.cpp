#include "latcurve/monomial_sets.hpp"

#include <algorithm>

namespace latcurve {

bool MonomialSet::contains(const ExponentPair& e) const
{
    return std::binary_search(members.begin(), members.end(), e, CanonicalOrder{});
}

bool MonomialSet::spans(const BivariatePolynomial& g) const
{
    for (const auto& [e, c] : g.terms())
        if (!contains(e)) return false;
    return true;
}

MonomialSet make_monomial_set(std::vector<ExponentPair> members, std::string descriptor)
{
    std::sort(members.begin(), members.end(), CanonicalOrder{});
    members.erase(std::unique(members.begin(), members.end()), members.end());
    MonomialSet m;
    m.members = std::move(members);
    m.D = m.members.size();
    for (const auto& e : m.members) {
        m.p += e.j1;
        m.q += e.j2;
    }
    m.descriptor = std::move(descriptor);
    return m;
}

MonomialSet full_set(unsigned d)
{
    if (d < 1) throw InputError("full_set needs d >= 1");
    std::vector<ExponentPair> v;
    for (unsigned h = 0; h <= d; ++h)
        for (unsigned j2 = 0; j2 <= h; ++j2) v.push_back({h - j2, j2});
    return make_monomial_set(std::move(v), "full(d=" + std::to_string(d) + ")");
}

MonomialSet punctured_set(unsigned d, unsigned ell, unsigned iF)
{
    if (d < 2) throw InputError("punctured_set needs d >= 2");
    if (ell < d) throw InputError("punctured_set needs ell >= d");
    if (iF > d) throw InputError("punctured_set needs iF <= d");
    const ExponentPair corner{d - iF, iF};
    std::vector<ExponentPair> v;
    for (unsigned h = d; h <= ell; ++h)
        for (unsigned j2 = 0; j2 <= h; ++j2) {
            const ExponentPair e{h - j2, j2};
            if (!corner.divides(e)) v.push_back(e);
        }
    return make_monomial_set(std::move(v), "punctured(d=" + std::to_string(d) + ",ell=" + std::to_string(ell) +
                                               ",iF=" + std::to_string(iF) + ")");
}

bool non_divisibility_guard(const BivariatePolynomial& F, const BivariatePolynomial& g)
{
    if (divides(F, g)) throw VerificationError("puncture violated: cover curve " + g.to_string() + " is divisible by F");
    return true;
}

} // namespace latcurve
