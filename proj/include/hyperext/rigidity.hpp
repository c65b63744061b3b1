#ifndef HYPEREXT_RIGIDITY_HPP
#define HYPEREXT_RIGIDITY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperext/errors.hpp"
#include "hyperext/invariants.hpp"

namespace hyperext {

enum class VerdictStatus { Pass, Fail, Inapplicable, Inconclusive };
std::string to_string(VerdictStatus s);

struct Witness {
    /// Input-language script that replays the check.
    std::string script;
    /// Ordered key/value facts that decided the status (indices, lengths).
    std::vector<std::pair<std::string, std::string>> facts;
};

struct Provenance {
    std::optional<std::uint64_t> seed;
    std::string ring;
    int degree_cap = 0;
    int length_cap = 0;
};

struct CheckVerdict {
    std::string check_name;
    VerdictStatus status;
    std::string reason;
    Witness witness;
    Provenance provenance;
    /// Pass decided by an actual vanishing in range (not only the i = 0 case).
    bool genuine = false;
    /// Tor check: theta != 0 with a non-rigid vanishing pattern.
    bool negative_control = false;
};

struct CheckOptions {
    /// Highest degree compared in Hilbert-function prefixes.
    int prefix_top = 10;
    /// Highest Tor index inspected by the Tor rigidity check.
    int tor_max = 6;
    std::optional<std::uint64_t> seed;
    /// Called with every Ext/Tor table a check computes.
    std::function<void(const ExtTorTable&)> observer;
};

/// Ext^n(M, N) = 0 for some n <= grade M forces Ext^i(M, N) = 0 for i <= n.
CheckVerdict check_ext_rigidity(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts = {});
/// Hypersurface only: Ext^i(M, M) != 0 for 0 <= i <= grade M.
CheckVerdict check_self_ext_nonvanishing(const PresentedModule& M, const CheckOptions& opts = {});
/// theta(M, N) = 0 and Tor_n = 0 force Tor_i = 0 for every computed i >= n.
/// Pairs with theta != 0 and a non-rigid pattern are flagged as negative controls.
CheckVerdict check_tor_rigidity_theta(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts = {});
/// Ext^i(M, N) and Tor_{g-i}(E(M), N) have the same Hilbert prefix for
/// 0 <= i <= g - 1, g = grade M >= 1.
CheckVerdict check_ext_tor_duality(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts = {});
/// grade over R = Q/(f) is one less than grade over Q.
CheckVerdict check_grade_drop(const PresentedModule& M, const CheckOptions& opts = {});
/// Regular ring, 1 <= i <= grade - 1: xi_bar_i(M, N) = chi_{g-i}(E(M), N) >= 0,
/// zero exactly when Ext^j(M, N) = 0 for all j <= i.
CheckVerdict check_xi_chi_bridge(const PresentedModule& M, const PresentedModule& N, int i, const CheckOptions& opts = {});
/// Regular ring, n <= grade M, Ext^n(M, N) = 0: Ext^{n-1}(M, R) (x) N and
/// Ext^{n-1}(M, N) have the same Hilbert prefix.
CheckVerdict check_ext_tensor_identity(const PresentedModule& M, const PresentedModule& N, int n, const CheckOptions& opts = {});
/// Over a regular ring: chi_j(M, N) >= 0 wherever Tor_{>= j} has finite
/// length, and for j >= 1, chi_j = 0 exactly when all Tor_{>= j} vanish.
CheckVerdict check_chi_positivity(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts = {});
/// Over a hypersurface R = Q/(f): xi_bar_i over Q of (M, N) is at most the
/// length of Ext^i_R(M, N), for 1 <= i <= grade_R M with finite lengths.
CheckVerdict check_xi_ext_bound(const PresentedModule& M, const PresentedModule& N, int i, const CheckOptions& opts = {});

enum class ModuleTarget { Generic, FiniteLength, PositiveGrade, CohenMacaulay, Syzygy };
std::string to_string(ModuleTarget t);

struct RandomModuleSpec {
    std::uint64_t seed = 0;
    RingPtr ring;
    std::pair<int, int> generators{1, 2};
    std::pair<int, int> relations{1, 3};
    /// Degrees of the entries of relation columns.
    std::pair<int, int> entry_degrees{1, 2};
    ModuleTarget target = ModuleTarget::Generic;
    int resample_budget = 40;
};

class ShapingFailure : public Error {
public:
    using Error::Error;
};

/// Deterministic in (spec, seed): the same spec yields the same presentation.
PresentedModule generate_module(const RandomModuleSpec& spec);

/// Deterministic 64-bit generator with its own bounded draws, so streams do
/// not depend on the standard library's distributions.
class SeededRandom {
public:
    explicit SeededRandom(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [lo, hi].
    int range(int lo, int hi);
    bool chance(int percent) { return range(0, 99) < percent; }

private:
    std::uint64_t state_;
};

/// Random homogeneous polynomial of degree d (nonzero when possible).
Polynomial random_form(const RingContext& ring, int d, SeededRandom& rng);

/// F_p[x,y] or F_p[x,y,z] modulo a random form of degree 2 or 3.
RingPtr random_hypersurface(std::uint32_t p, int nvars, int degree, SeededRandom& rng, ComputeLimits limits = {});

struct CampaignOptions {
    std::uint32_t prime = 32003;
    ComputeLimits limits;
    CheckOptions check;
    /// Restricts trials to this ring when set.
    RingPtr ring;
    unsigned threads = 0;
};

struct CampaignResult {
    std::string name;
    std::uint64_t seed;
    int trials;
    std::vector<CheckVerdict> verdicts;
    int count(VerdictStatus s) const;
    int genuine_passes() const;
    int negative_controls() const;
};

std::vector<std::string> campaign_names();
/// Runs `trials` seeded trials of the named campaign. Trial t uses a seed
/// derived from (seed, t); verdicts come back in trial order.
CampaignResult run_campaign(const std::string& name, int trials, std::uint64_t seed, const CampaignOptions& opts = {});

}  // namespace hyperext

#endif
