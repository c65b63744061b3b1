#include "doctest.h"
#include "hyperext/errors.hpp"
#include "hyperext/groebner.hpp"
#include "support.hpp"

using namespace hyperext;
using testing_support::mat;

namespace {

ModuleElement poly_element(const RingPtr& R, const std::string& s) {
    auto p = R->polys().parse(s);
    std::vector<ModuleTerm> t;
    for (const auto& term : p.terms()) t.push_back({term.monomial, 0, term.coeff});
    return ModuleElement::from_terms(std::move(t), graded_order(*R, {0}), R->field());
}

}  // namespace

TEST_CASE("ideal basis of xy - z^2, x^2 contains x z^2") {
    auto Q = make_ring(32003, {"x", "y", "z"});
    auto order = graded_order(*Q, {0});
    std::vector<ModuleElement> gens{poly_element(Q, "x*y - z^2"), poly_element(Q, "x^2")};
    auto gb = buchberger(*Q, order, gens);
    CHECK(satisfies_buchberger_criterion(gb));
    CHECK(gb.contains(poly_element(Q, "x*z^2")));
    CHECK_FALSE(gb.contains(poly_element(Q, "x*z")));
    CHECK_FALSE(gb.contains(poly_element(Q, "z^3")));
    CHECK(gb.contains(poly_element(Q, "z^4")));
}

TEST_CASE("reduced basis is independent of generator order") {
    auto Q = make_ring(101, {"x", "y", "z"});
    auto order = graded_order(*Q, {0});
    std::vector<ModuleElement> a{poly_element(Q, "x^2 - y*z"), poly_element(Q, "x*y - z^2"), poly_element(Q, "y^2 - x*z")};
    std::vector<ModuleElement> b{a[2], a[0], a[1]};
    auto ga = buchberger(*Q, order, a);
    auto gb = buchberger(*Q, order, b);
    REQUIRE(ga.generators().size() == gb.generators().size());
    for (std::size_t i = 0; i < ga.generators().size(); ++i) CHECK(ga.generators()[i] == gb.generators()[i]);
}

TEST_CASE("syzygies of the variables are the Koszul relations") {
    auto Q = make_ring(32003, {"x", "y", "z"});
    auto m = mat(Q, {{"x", "y", "z"}}, {0});
    auto syz = syzygies(m);
    CHECK(syz.cols() == 3);
    CHECK(syz.source_degrees() == std::vector<int>{2, 2, 2});
    CHECK(m.compose(syz).is_zero());
    auto syz2 = syzygies(syz);
    CHECK(syz2.cols() == 1);
    CHECK(syz2.source_degrees() == std::vector<int>{3});
    CHECK(syzygies(syz2).cols() == 0);
}

TEST_CASE("syzygies over the node xy = 0") {
    auto Q = make_ring(32003, {"x", "y"});
    auto R = make_hypersurface(Q, "x*y");
    auto m = mat(R, {{"x"}}, {0});
    auto syz = syzygies(m);
    REQUIRE(syz.cols() == 1);
    CHECK(R->polys().render(syz.entry(0, 0)) == "y");
}

TEST_CASE("minimal image generators drop redundant columns") {
    auto Q = make_ring(101, {"x", "y"});
    auto m = mat(Q, {{"x", "y", "x^2", "x*y + y^2"}}, {0});
    auto mm = minimal_image_generators(m);
    CHECK(mm.cols() == 2);
}

TEST_CASE("degree cap is reported, not silently truncated") {
    auto Q = make_ring(101, {"x", "y", "z"}, MonomialOrder::DegRevLex, ComputeLimits{3, std::nullopt});
    auto order = graded_order(*Q, {0});
    std::vector<ModuleElement> gens{poly_element(Q, "x^2 - y*z"), poly_element(Q, "x*y - z^2")};
    CHECK_THROWS_AS(buchberger(*Q, order, gens, GroebnerOptions::for_ring(*Q)), DegreeCapExceeded);
}

TEST_CASE("module basis respects the position tie-break") {
    auto Q = make_ring(101, {"x", "y"});
    auto m = mat(Q, {{"x", "y"}, {"y", "x"}}, {0, 0});
    auto order = graded_order(*Q, {0, 0});
    auto gb = buchberger(*Q, order, m.columns(order));
    CHECK(satisfies_buchberger_criterion(gb));
    for (const auto& c : m.columns(order)) CHECK(gb.contains(c));
}
