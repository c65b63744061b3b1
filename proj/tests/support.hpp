#ifndef HYPEREXT_TESTS_SUPPORT_HPP
#define HYPEREXT_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "hyperext/module.hpp"
#include "hyperext/ring.hpp"

namespace testing_support {

inline hyperext::GradedFreeMap mat(const hyperext::RingPtr& ring, const std::vector<std::vector<std::string>>& rows,
                                   std::vector<int> target_degrees) {
    std::vector<std::vector<hyperext::Polynomial>> polys;
    for (const auto& r : rows) {
        polys.emplace_back();
        for (const auto& e : r) polys.back().push_back(ring->polys().parse(e));
    }
    return hyperext::matrix_with_inferred_sources(ring, std::move(target_degrees), polys);
}

/// coker of a one-row matrix of ideal generators, generator in degree 0.
inline hyperext::PresentedModule quotient(const hyperext::RingPtr& ring, const std::vector<std::string>& ideal) {
    return hyperext::PresentedModule(mat(ring, {ideal}, {0}));
}

}  // namespace testing_support

#endif
