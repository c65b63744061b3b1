#ifndef HYPEREXT_SCRIPT_WRITER_HPP
#define HYPEREXT_SCRIPT_WRITER_HPP

#include <string>
#include <utility>
#include <vector>

#include "hyperext/module.hpp"

namespace hyperext {

/// Ring declarations in the input language: the polynomial ring, then the
/// quotient when `ring` is a hypersurface. Names "Q" and "R".
std::string ring_declarations(const RingContext& ring);
/// Name under which ring_declarations declares `ring` itself.
std::string declared_ring_name(const RingContext& ring);

/// module NAME over RING = coker [[...]] degrees [...];
std::string module_declaration(const std::string& name, const std::string& ring_name, const PresentedModule& M);

/// Full replay script: ring declarations, the named modules, then `command`.
std::string replay_script(const RingContext& ring, const std::vector<std::pair<std::string, PresentedModule>>& modules,
                          const std::string& command);

}  // namespace hyperext

#endif
