#ifndef QZ_REPORT_HPP
#define QZ_REPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qz/laurent.hpp"

namespace qz {

// Outcome record of one identity or count verification. `elapsed_ms` is
// console-side information only; serialized reports omit it so runs with a
// fixed (config, seed) are byte-identical.
struct CheckReport {
    std::string id;
    std::string reference; // human name of the identity or count
    std::string params;
    std::string regime; // symbolic | rational-point | series | enumeration
    std::string status; // PASS | FAIL | SKIPPED-pole | SKIPPED-too-large
    std::string lhs_witness;
    std::string rhs_witness;
    std::string note;
    double elapsed_ms = 0.0;

    bool passed() const { return status == "PASS"; }
};

CheckReport make_report(std::string id, std::string reference, std::string params,
                        std::string regime, bool pass);

// Deterministic sampler for rational-point identity testing: numerators in
// [-9,9]\{0}, denominators in [1,9]; values for q are kept inside the unit
// interval. Resampling after a pole is deterministic by construction.
class PointSampler {
  public:
    explicit PointSampler(std::uint64_t seed) : gen_(seed) {}

    Rational sample(bool unit_interval = false);
    std::map<Var, Rational> point(const std::vector<Var>& vars);

  private:
    std::mt19937_64 gen_;
};

// witness digests
std::string digest(const LaurentPoly& p);
std::string digest(const Rational& r);

} // namespace qz

#endif
