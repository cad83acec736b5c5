#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wreathfuse/fusion.hpp"

namespace wrf {

enum class Construction { Fusion, JucysMurphy, Both };

struct CheckResult {
    std::string label;
    std::string detail;         // deterministic scope note ("54 tableaux", ...)
    bool pass = true;
    std::string counterexample; // replayable serialization when failed
};

struct VerificationReport {
    std::string suite;
    std::string config; // group, n, mode, construction / trials
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0; // never rendered: output is byte-stable
    bool all_pass() const;
};

/// Advisory size cap on |G|^n * n! for the system suite.
constexpr unsigned long long kVerifySizeCap = 100000;

/// Builds the complete system of idempotents for the configuration and
/// checks idempotency, pairwise orthogonality, completeness, both eigenvalue
/// identities, and (for Construction::Both) agreement of the two
/// constructions. Throws CapExceededError beyond the size cap.
VerificationReport verify_idempotent_system(const FusionConfig& cfg, Construction c);

/// Exhaustive defining/derived relation checks at the given rank plus seeded
/// randomized checks of the spectral-parameter identities.
VerificationReport verify_relations(const GroupPtr& g, int n, int trials, std::uint64_t seed);

/// Idempotency check on a single element, producing a replayable
/// counterexample on failure (used by the negative-control path).
CheckResult check_idempotent(const AlgebraElement& e, const std::string& label);

void render_report_human(const VerificationReport& r, std::ostream& os);
void render_report_structured(const VerificationReport& r, std::ostream& os);

} // namespace wrf
