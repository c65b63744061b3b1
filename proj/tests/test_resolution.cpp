#include "doctest.h"
#include "hyperext/hilbert.hpp"
#include "hyperext/linalg.hpp"
#include "hyperext/resolution.hpp"
#include "support.hpp"

using namespace hyperext;
using testing_support::mat;
using testing_support::quotient;

TEST_CASE("dense linear algebra") {
    PrimeField F(7);
    DenseMatrix m(2, 3);
    m.at(0, 0) = 1, m.at(0, 1) = 2, m.at(0, 2) = 3;
    m.at(1, 0) = 2, m.at(1, 1) = 4, m.at(1, 2) = 6;
    CHECK(rank(m, F) == 1);
    auto ns = nullspace(m, F);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        Coeff s = 0;
        for (std::size_t j = 0; j < 3; ++j) s = F.add(s, F.mul(m.at(0, j), v[j]));
        CHECK(s == 0);
    }
    DenseMatrix a(2, 2);
    a.at(0, 0) = 1, a.at(0, 1) = 1, a.at(1, 1) = 3;
    auto inv = inverse(a, F);
    REQUIRE(inv);
    CHECK(a.multiply(*inv, F) == DenseMatrix::identity(2));
    CHECK_FALSE(inverse(m.multiply(DenseMatrix(3, 3), F), F));
}

TEST_CASE("Koszul resolution of the residue field") {
    for (int n : {2, 3, 4}) {
        std::vector<std::string> vars;
        for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
        auto Q = make_ring(32003, vars);
        auto res = minimal_resolution(residue_field(Q));
        CHECK(res.terminated());
        CHECK(res.minimal());
        CHECK(res.is_complex());
        REQUIRE(res.projective_dimension() == n);
        for (int i = 0; i <= n; ++i) {
            CHECK(res.betti().rank(i) == binomial(n, i));
            CHECK(res.betti().graded(i, i) == binomial(n, i));
        }
    }
}

TEST_CASE("the torsion module x^2, xy, xz has projective dimension 3") {
    for (std::uint32_t p : {32003u, 101u}) {
        auto Q = make_ring(p, {"x", "y", "z"});
        auto res = minimal_resolution(quotient(Q, {"x^2", "x*y", "x*z"}));
        CHECK(res.projective_dimension() == 3);
        CHECK(res.betti().totals() == std::vector<int>{1, 3, 3, 1});
        CHECK(res.is_complex());
    }
}

TEST_CASE("betti table rendering") {
    auto Q = make_ring(101, {"x", "y", "z"});
    auto res = minimal_resolution(quotient(Q, {"x^2", "x*y", "x*z"}));
    CHECK(res.betti().render() ==
          "       0 1 2 3\n"
          "total: 1 3 3 1\n"
          "    0: 1 . . .\n"
          "    1: . 3 3 1\n");
}

TEST_CASE("periodic resolution of R/x over the node") {
    auto Q = make_ring(32003, {"x", "y"});
    auto R = make_hypersurface(Q, "x*y");
    auto res = minimal_resolution(quotient(R, {"x"}));
    CHECK_FALSE(res.terminated());
    CHECK_FALSE(res.truncated());
    REQUIRE(res.periodic_from());
    CHECK(*res.periodic_from() <= 1);
    const auto& P = R->polys();
    for (int i = 1; i <= res.length(); ++i) {
        REQUIRE(res.differential(i).rows() == 1);
        REQUIRE(res.differential(i).cols() == 1);
        CHECK(P.render(res.differential(i).entry(0, 0)) == (i % 2 == 1 ? "x" : "y"));
    }
    REQUIRE(res.factorization());
    const auto& mf = *res.factorization();
    CHECK(mf.verify());
    CHECK(mf.swapped().verify());
    CHECK(Q->polys().render(mf.A.entry(0, 0)) == "x");
    CHECK(Q->polys().render(mf.B.entry(0, 0)) == "y");
}

TEST_CASE("rank one factorization of x^2 - y^2") {
    auto Q = make_ring(101, {"x", "y"});
    auto R = make_hypersurface(Q, "x^2 - y^2");
    auto res = minimal_resolution(quotient(R, {"x + y"}));
    REQUIRE(res.factorization());
    const auto& mf = *res.factorization();
    CHECK(mf.verify());
    auto prod = Q->polys().mul(mf.A.entry(0, 0), mf.B.entry(0, 0));
    CHECK(prod == Q->polys().parse("x^2 - y^2"));
}

TEST_CASE("finite projective dimension over a hypersurface terminates") {
    auto Q = make_ring(101, {"x", "y", "z"});
    auto R = make_hypersurface(Q, "x*y");
    auto res = minimal_resolution(quotient(R, {"z"}));
    CHECK(res.terminated());
    CHECK(res.projective_dimension() == 1);
    CHECK_FALSE(res.periodic_from());
    CHECK_FALSE(detect_periodicity(minimal_resolution(residue_field(Q)), *Q));
}

TEST_CASE("residue field over a 3-variable hypersurface becomes periodic") {
    auto Q = make_ring(101, {"x", "y", "z"});
    auto R = make_hypersurface(Q, "x^2 + y*z");
    auto res = minimal_resolution(residue_field(R), 9);
    CHECK(res.is_complex());
    CHECK(res.minimal());
    REQUIRE(res.periodic_from());
    REQUIRE(res.factorization());
    CHECK(res.factorization()->verify());
}

TEST_CASE("minimize cancels an identity summand") {
    auto Q = make_ring(101, {"x", "y"});
    auto d1 = mat(Q, {{"x", "y", "0"}, {"0", "0", "1"}}, {0, 1});
    auto d2 = mat(Q, {{"-y"}, {"x"}, {"0"}}, {1, 1, 1});
    FreeResolution padded(Q, {0, 1}, {d1, d2}, true);
    CHECK(padded.is_complex());
    CHECK_FALSE(padded.minimal());
    auto m = minimize(padded);
    CHECK(m.minimal());
    CHECK(m.betti().totals() == std::vector<int>{1, 2, 1});
    auto again = minimize(m);
    CHECK(again.betti() == m.betti());
    for (int i = 1; i <= m.length(); ++i) CHECK(again.differential(i) == m.differential(i));
}

TEST_CASE("minimize recovers the Koszul Betti numbers from an inflated complex") {
    auto Q = make_ring(101, {"x", "y", "z"});
    auto K = minimal_resolution(residue_field(Q));
    // Add a trivial summand F(-1) --1--> F(-1) in positions 2 -> 1 and
    // mix it into the existing basis with an upper triangular change.
    const auto& P = Q->polys();
    auto d1 = K.differential(1), d2 = K.differential(2), d3 = K.differential(3);
    std::vector<Polynomial> e1;
    for (std::size_t j = 0; j < d1.cols(); ++j) e1.push_back(d1.entry(0, j));
    e1.push_back(P.zero());
    auto D1 = GradedFreeMap(Q, d1.target_degrees(), {1, 1, 1, 2}, {e1[0], e1[1], e1[2], P.parse("0")});
    std::vector<Polynomial> e2;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i < 3 && j < 3)
                e2.push_back(d2.entry(i, j));
            else if (i == 3 && j == 3)
                e2.push_back(P.one());
            else
                e2.push_back(P.zero());
        }
    auto D2 = GradedFreeMap(Q, {1, 1, 1, 2}, {2, 2, 2, 2}, e2);
    std::vector<Polynomial> e3;
    for (std::size_t i = 0; i < 4; ++i) e3.push_back(i < 3 ? d3.entry(i, 0) : P.zero());
    auto D3 = GradedFreeMap(Q, {2, 2, 2, 2}, {3}, e3);
    FreeResolution inflated(Q, {0}, {D1, D2, D3}, true);
    REQUIRE(inflated.is_complex());
    auto m = minimize(inflated);
    CHECK(m.betti().totals() == std::vector<int>{1, 3, 3, 1});
    CHECK(m.minimal());
    CHECK(m.is_complex());
}
