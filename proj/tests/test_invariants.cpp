#include "doctest.h"
#include "hyperext/errors.hpp"
#include "hyperext/hilbert.hpp"
#include "hyperext/invariants.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hyperext;
using testing_support::mat;
using testing_support::quotient;

namespace {

RingPtr regular(int n, std::uint32_t p = 32003) {
    std::vector<std::string> v{"x", "y", "z", "w"};
    v.resize(static_cast<std::size_t>(n));
    return make_ring(p, v);
}

void check_against_oracle(const ExtTorTable& t, int width = 4) {
    for (const auto& e : t.entries) {
        int lo = e.module.num_generators() ? e.module.min_generator_degree() : 0;
        CHECK(e.module.hilbert_window(lo, lo + width) == oracle::homology_window(e.incoming, e.outgoing, lo, lo + width));
        CHECK(oracle::hilbert_window(e.module, lo, lo + width) == e.module.hilbert_window(lo, lo + width));
        CHECK(e.zero == (e.length == Length::finite(0)));
    }
}

}  // namespace

TEST_CASE("Ext of the torsion module x^2, xy, xz against the ring") {
    for (std::uint32_t p : {32003u, 101u}) {
        auto Q = regular(3, p);
        auto M = quotient(Q, {"x^2", "x*y", "x*z"});
        auto t = ext(M, PresentedModule::free(Q, {0}), 4);
        CHECK(t.at(0).zero);
        CHECK_FALSE(t.at(1).zero);
        CHECK(t.at(2).zero);
        CHECK_FALSE(t.at(3).zero);
        CHECK(t.at(4).zero);
        check_against_oracle(t);
        CHECK(grade(M) == 1);
        CHECK(pdim(M).kind == ProjectiveDimension::Kind::Finite);
        CHECK(pdim(M).value == 3);
    }
}

TEST_CASE("Koszul Tor and Ext") {
    for (int n : {2, 3}) {
        auto Q = regular(n);
        auto k = residue_field(Q);
        auto t = tor(k, k, n + 1);
        for (int i = 0; i <= n + 1; ++i) CHECK(t.at(i).length == Length::finite(binomial(n, i)));
        check_against_oracle(t);
        auto e = ext(k, PresentedModule::free(Q, {0}), n + 1);
        for (int i = 0; i <= n + 1; ++i) CHECK(e.at(i).zero == (i != n));
        CHECK(grade(k) == n);
    }
}

TEST_CASE("free modules") {
    auto Q = regular(3);
    auto F = PresentedModule::free(Q, {0});
    auto N = quotient(Q, {"x", "y^2"});
    auto e = ext(F, N, 2);
    CHECK(e.at(0).module.hilbert_window(0, 5) == N.hilbert_window(0, 5));
    CHECK(e.at(1).zero);
    CHECK(e.at(2).zero);
    auto t = tor(F, N, 2);
    CHECK(t.at(0).module.hilbert_window(0, 5) == N.hilbert_window(0, 5));
    CHECK(t.at(1).zero);
    CHECK(grade(F) == 0);
    CHECK(pdim(F).value == 0);
    auto E = e_module(PresentedModule::free(Q, {0, 2}));
    CHECK(E.generator_degrees() == std::vector<int>{0, -2});
    CHECK(E.presentation().cols() == 0);
}

TEST_CASE("Tor over the node is 2-periodic") {
    auto Q = regular(2);
    auto R = make_hypersurface(Q, "x*y");
    auto t = tor(quotient(R, {"x"}), quotient(R, {"y"}), 5);
    std::vector<Length> want{Length::finite(1), Length::finite(0), Length::finite(1),
                             Length::finite(0), Length::finite(1), Length::finite(0)};
    CHECK(t.lengths() == want);
    check_against_oracle(t);
    auto th = theta(quotient(R, {"x"}), quotient(R, {"y"}));
    CHECK(th.value == 1);
    CHECK_FALSE(th.finite_pdim);
    auto self = theta(quotient(R, {"x"}), quotient(R, {"x"}));
    CHECK(self.value == -1);
    CHECK(pdim(quotient(R, {"x"})).kind == ProjectiveDimension::Kind::Infinite);
}

TEST_CASE("theta of a finite projective dimension module is zero") {
    auto Q = regular(3);
    auto R = make_hypersurface(Q, "x*y");
    auto th = theta(quotient(R, {"z"}), quotient(R, {"x", "y"}));
    CHECK(th.value == 0);
    CHECK(th.finite_pdim);
    CHECK_THROWS_AS(theta(quotient(Q, {"x"}), quotient(Q, {"y"})), HypothesisViolation);
}

TEST_CASE("theta with infinite stable Tor lengths is a hypothesis violation") {
    auto Q = regular(3);
    auto R = make_hypersurface(Q, "x*y");
    CHECK_THROWS_AS(theta(quotient(R, {"x"}), quotient(R, {"x"})), HypothesisViolation);
}

TEST_CASE("Euler characteristics on the residue field") {
    auto Q = regular(3);
    auto k = residue_field(Q);
    CHECK(chi(k, k, 1) == 1);
    CHECK(chi(k, k, 0) == 0);
    CHECK(chi(k, k, 3) == 1);
    CHECK(xi_bar(k, k, 1) == 2);
    CHECK(xi_bar(k, k, 0) == 1);
    auto Q1 = regular(1);
    auto Mx = quotient(Q1, {"x"});
    CHECK(chi(Mx, Mx, 0) == 0);
    CHECK_THROWS_AS(chi(PresentedModule::free(Q, {0}), PresentedModule::free(Q, {0}), 0), HypothesisViolation);
}

TEST_CASE("xi_bar is additive over direct sums") {
    auto Q = regular(3);
    auto k = residue_field(Q);
    auto M = direct_sum(k, shift(k, 2));
    CHECK(xi_bar(M, k, 1) == 2 * xi_bar(k, k, 1));
    CHECK(xi_bar(M, k, 2) == 2 * xi_bar(k, k, 2));
}

TEST_CASE("E(M) of the residue field is a twisted residue field") {
    auto Q = regular(3);
    auto E = e_module(residue_field(Q));
    CHECK(E.length() == Length::finite(1));
    CHECK(E.hilbert_value(-3) == 1);
}

TEST_CASE("Ext and Tor through E(M) agree for the residue field") {
    auto Q = regular(3);
    auto k = residue_field(Q);
    int g = grade(k);
    auto E = e_module(k, g);
    auto e = ext(k, k, g - 1);
    auto t = tor(E, k, g);
    for (int i = 0; i <= g - 1; ++i) CHECK(e.at(i).length == t.at(g - i).length);
    CHECK(e.at(0).length == Length::finite(1));
    CHECK(e.at(1).length == Length::finite(3));
}

TEST_CASE("grade and depth") {
    auto Q = regular(3);
    CHECK(grade(PresentedModule::free(Q, {0})) == 0);
    auto dd = depth_and_dim(PresentedModule::free(Q, {0}));
    CHECK(dd.depth == 3);
    CHECK(dd.dimension == 3);
    auto ex = depth_and_dim(quotient(Q, {"x^2", "x*y", "x*z"}));
    CHECK(ex.dimension == 2);
    CHECK(ex.depth == 0);
    auto kk = depth_and_dim(residue_field(Q));
    CHECK(kk.depth == 0);
    CHECK(kk.dimension == 0);
    CHECK_THROWS_AS(grade(PresentedModule::zero(Q)), std::invalid_argument);
    auto R = make_hypersurface(Q, "x*y");
    CHECK(grade(quotient(R, {"z"})) == 1);
    CHECK(grade(PresentedModule::free(R, {0})) == 0);
    CHECK(grade(restrict_to_ambient(quotient(R, {"z"}))) == 2);
}

TEST_CASE("Tor is balanced") {
    auto Q = regular(3);
    auto M = quotient(Q, {"x^2", "y*z"});
    auto N = quotient(Q, {"x*y", "z^2", "y^3"});
    CHECK(tor(M, N, 3).lengths() == tor(N, M, 3).lengths());
}

TEST_CASE("invariant report") {
    auto Q = regular(3);
    auto k = residue_field(Q);
    auto r = invariant_report(k, k);
    CHECK(r.grade == 3);
    CHECK(r.pdim.value == 3);
    CHECK(r.chi.at(1) == 1);
    CHECK(r.xi_bar.at(1) == 2);
    CHECK_FALSE(r.theta);
}
