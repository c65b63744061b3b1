#ifndef HYPEREXT_INVARIANTS_HPP
#define HYPEREXT_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperext/module.hpp"
#include "hyperext/resolution.hpp"

namespace hyperext {

enum class HomologyKind { Ext, Tor };
std::string to_string(HomologyKind k);

/// One Ext^i or Tor_i, with the three-term piece of the Hom / tensor complex
/// it was computed from.
struct HomologyEntry {
    int index;
    PresentedModule module;
    Length length;
    bool zero;
    ModuleMap incoming;
    ModuleMap outgoing;
};

struct ExtTorTable {
    HomologyKind kind;
    RingPtr ring;
    std::vector<HomologyEntry> entries;

    int max_index() const noexcept { return static_cast<int>(entries.size()) - 1; }
    const HomologyEntry& at(int i) const { return entries.at(static_cast<std::size_t>(i)); }
    std::vector<Length> lengths() const;
    /// Largest i with all lengths finite up to i; -1 if the first is infinite.
    int finite_length_prefix() const;
};

ExtTorTable ext(const PresentedModule& M, const PresentedModule& N, int i_max);
ExtTorTable tor(const PresentedModule& M, const PresentedModule& N, int i_max);
/// Same, reusing an existing resolution of M (which must reach i_max + 1 or
/// terminate earlier).
ExtTorTable ext(const FreeResolution& res, const PresentedModule& N, int i_max);
ExtTorTable tor(const FreeResolution& res, const PresentedModule& N, int i_max);

/// inf{i : Ext^i(M, ring) != 0}. Throws std::invalid_argument on the zero module.
int grade(const PresentedModule& M);

/// coker(F_{g-1}* -> F_g*) for g = grade M; F_0* when g = 0.
PresentedModule e_module(const PresentedModule& M, std::optional<int> known_grade = std::nullopt);

struct ThetaValue {
    int value;
    /// Even index 2j used for the difference; the check at 2j + 2 agreed.
    int stable_index;
    std::optional<int> periodic_from;
    bool finite_pdim;
};

/// Stable difference of even and odd Tor lengths over a hypersurface. Throws
/// Inconclusive without a periodicity certificate and HypothesisViolation
/// when the stable Tor lengths are infinite.
ThetaValue theta(const PresentedModule& M, const PresentedModule& N);

/// sum_{i >= j} (-1)^(i-j) length Tor_i(M, N) over a regular ring.
std::int64_t chi(const PresentedModule& M, const PresentedModule& N, int j);
std::int64_t chi(const ExtTorTable& tor_table, int j);
/// sum_{i=0}^{j} (-1)^i length Ext^(j-i)(M, N).
std::int64_t xi_bar(const PresentedModule& M, const PresentedModule& N, int j);
std::int64_t xi_bar(const ExtTorTable& ext_table, int j);

struct ProjectiveDimension {
    enum class Kind { Finite, Infinite, Inconclusive };
    Kind kind;
    /// Finite: the dimension (-1 for the zero module). Otherwise the number
    /// of computed steps.
    int value;
    std::string to_string() const;
};
ProjectiveDimension pdim(const PresentedModule& M);
ProjectiveDimension pdim(const FreeResolution& res);

struct DepthDim {
    int depth;
    int dimension;
    bool cohen_macaulay() const noexcept { return depth == dimension; }
};
/// Krull dimension from the Hilbert series, depth as inf{i : Ext^i(k, M) != 0}.
DepthDim depth_and_dim(const PresentedModule& M);

struct InvariantReport {
    int grade;
    ProjectiveDimension pdim;
    std::optional<int> theta;
    std::map<int, std::int64_t> chi;
    std::map<int, std::int64_t> xi_bar;
    std::vector<std::string> notes;
};
InvariantReport invariant_report(const PresentedModule& M, const PresentedModule& N);

}  // namespace hyperext

#endif
