#ifndef HYPEREXT_TESTS_ORACLE_HPP
#define HYPEREXT_TESTS_ORACLE_HPP

// Degreewise linear algebra over F_p. Works in coordinates of the ambient
// polynomial ring, adding f-multiples for modules over a hypersurface, and
// never calls the Gröbner engine.

#include <cstdint>
#include <vector>

#include "hyperext/module.hpp"

namespace oracle {

/// dim_k of the degree-d piece of coker(presentation) (+ f * F_0).
std::int64_t hilbert_value(const hyperext::PresentedModule& M, int d);
std::vector<std::int64_t> hilbert_window(const hyperext::PresentedModule& M, int lo, int hi);

/// dim_k of ker(outgoing) / im(incoming) in degree d.
std::int64_t homology_value(const hyperext::ModuleMap& incoming, const hyperext::ModuleMap& outgoing, int d);
std::vector<std::int64_t> homology_window(const hyperext::ModuleMap& incoming, const hyperext::ModuleMap& outgoing,
                                          int lo, int hi);

/// Whether outgoing o incoming lands in the relations of the target, in all
/// degrees up to hi.
bool composes_to_zero(const hyperext::ModuleMap& incoming, const hyperext::ModuleMap& outgoing, int lo, int hi);

}  // namespace oracle

#endif
