#include "hyperext/script_writer.hpp"

#include <sstream>

namespace hyperext {

namespace {

std::string order_name(MonomialOrder o) { return std::string(to_string(o)); }

std::string poly_declaration(const std::string& name, const PolynomialRing& P) {
    std::ostringstream out;
    out << "ring " << name << " = poly(p=" << P.field().prime() << ", vars=[";
    for (std::size_t i = 0; i < P.variables().size(); ++i) out << (i ? "," : "") << P.variables()[i];
    out << "], order=" << order_name(P.order()) << ");\n";
    return out.str();
}

}  // namespace

std::string declared_ring_name(const RingContext& ring) { return ring.is_hypersurface() ? "R" : "Q"; }

std::string ring_declarations(const RingContext& ring) {
    std::string out = poly_declaration("Q", ring.polys());
    if (ring.is_hypersurface()) out += "ring R = Q / (" + ring.polys().render(*ring.hypersurface()) + ");\n";
    return out;
}

std::string module_declaration(const std::string& name, const std::string& ring_name, const PresentedModule& M) {
    const GradedFreeMap& A = M.presentation();
    const auto& P = A.ring()->polys();
    std::ostringstream out;
    out << "module " << name << " over " << ring_name << " = coker [";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        out << (i ? ", " : "") << '[';
        for (std::size_t j = 0; j < A.cols(); ++j) out << (j ? ", " : "") << P.render(A.entry(i, j));
        out << ']';
    }
    out << "] degrees [";
    for (std::size_t i = 0; i < A.rows(); ++i) out << (i ? ", " : "") << A.target_degrees()[i];
    out << "];\n";
    return out.str();
}

std::string replay_script(const RingContext& ring, const std::vector<std::pair<std::string, PresentedModule>>& modules,
                          const std::string& command) {
    std::string out = ring_declarations(ring);
    for (const auto& [name, M] : modules) out += module_declaration(name, declared_ring_name(ring), M);
    out += command + "\n";
    return out;
}

}  // namespace hyperext
