#include "qz/report.hpp"

namespace qz {

CheckReport make_report(std::string id, std::string reference, std::string params,
                        std::string regime, bool pass)
{
    CheckReport r;
    r.id = std::move(id);
    r.reference = std::move(reference);
    r.params = std::move(params);
    r.regime = std::move(regime);
    r.status = pass ? "PASS" : "FAIL";
    return r;
}

Rational PointSampler::sample(bool unit_interval)
{
    for (;;) {
        std::uniform_int_distribution<int> num_dist(-9, 9);
        std::uniform_int_distribution<int> den_dist(1, 9);
        int num = num_dist(gen_);
        int den = den_dist(gen_);
        if (num == 0)
            continue;
        Rational v = rat(num, den);
        if (unit_interval && (abs(v) >= 1))
            continue;
        return v;
    }
}

std::map<Var, Rational> PointSampler::point(const std::vector<Var>& vars)
{
    std::map<Var, Rational> out;
    for (Var v : vars)
        out[v] = sample(v == Var::q || v == Var::z);
    return out;
}

std::string digest(const LaurentPoly& p)
{
    std::string s = p.str();
    if (s.size() > 160)
        s = s.substr(0, 157) + "...";
    return s;
}

std::string digest(const Rational& r) { return r.get_str(); }

} // namespace qz
