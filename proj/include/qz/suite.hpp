#ifndef QZ_SUITE_HPP
#define QZ_SUITE_HPP

#include <cstdint>

#include "qz/oracle.hpp"
#include "qz/report.hpp"
#include "qz/zeta.hpp"

namespace qz {

// Configuration for a verification run. Ranges clamp the registry's
// default grids; seed drives the rational-point sampler.
struct SuiteConfig {
    std::string suite = "all"; // classical | rrsums | zeta | oracle | sieve | all
    int m_max = 3;
    int n_max = 4;
    int Q = 30;
    std::uint64_t seed = 20260808;
    int points_per_identity = 5;
    std::string output_path;
    std::string format = "json"; // json | csv
};

struct RegistryEntry {
    std::string id;
    std::string reference;
    std::string regime;
    std::vector<std::string> suites;
};

const std::vector<RegistryEntry>& identity_registry();

// Run every registry entry matching config.suite; reports sorted by
// (id, params). Honors QZ_THREADS for parallel dispatch.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

// Run a single identity by registry id (UnknownIdentity otherwise).
std::vector<CheckReport> check_identity(const std::string& id, const SuiteConfig& config);

// serialization: deterministic for a fixed (config, seed); elapsed excluded
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

std::string zeta_value_to_json(const ZetaValue& value);
std::string zeta_value_to_csv(const ZetaValue& value);
// parse back what zeta_value_to_json produced (round-trip contract)
ZetaValue zeta_value_from_json(const std::string& text);

int qz_thread_count();

} // namespace qz

#endif
