#include "arborflow/formulas.hpp"
#include "arborflow/matrices.hpp"
#include "arborflow/matrix.hpp"

#include "doctest.h"

using namespace arborflow;

TEST_SUITE("formulas") {

TEST_CASE("distance determinant closed form") {
    CHECK(graham_pollak_value(1) == BigInt(0));
    CHECK(graham_pollak_value(2) == BigInt(-1));
    CHECK(graham_pollak_value(3) == BigInt(4));
    CHECK(graham_pollak_value(4) == BigInt(-12));
    CHECK(graham_pollak_value(5) == BigInt(32));
    CHECK(graham_pollak_value(9) == BigInt(1024));
    for (int n = 2; n <= 5; ++n)
        for_each_tree(n, [&](const Tree& t) {
            CHECK(det_bareiss_int(distance_matrix(t)) == graham_pollak_value(n));
        });
}

TEST_CASE("q-analogue closed form") {
    VarRegistry reg;
    CHECK(q_gp_value(reg, 2) == Poly::constant(reg, -1));
    CHECK(q_gp_value(reg, 4).to_string() == "-3*q^2 - 6*q - 3");
    // q = 1 degenerates to the plain value.
    for (int n = 2; n <= 6; ++n)
        CHECK(q_gp_value(reg, n).substitute(reg.id("q"), BigInt(1)) ==
              Poly::constant(reg, graham_pollak_value(n)));
    // Field form agrees with evaluation.
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 10; ++rep) {
        Fp q = Fp::random(rng);
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Fp> point(reg.size(), Fp(0));
        point[reg.id("q")] = q;
        CHECK(q_gp_value(n, q) == q_gp_value(reg, n).eval(point));
    }
}

TEST_CASE("deformed determinant closed form: single edge") {
    Tree t(2, {{1, 2}});
    VarRegistry reg;
    WeightAssignment<Poly> w = symbolic_weights(t, reg, WeightMode::Free);
    auto v = [&](const std::string& s) { return Poly::variable(reg, reg.id(s)); };
    CHECK(emmanuel_rhs(t, w) == Poly::zero(reg) - v("y[1,2]") * v("y[2,1]"));
    CHECK(det_expansion_poly(weighted_distance_matrix(t, w)) == emmanuel_rhs(t, w));
}

TEST_CASE("deformed determinant closed form: symbolic on all 3-vertex trees") {
    for_each_tree(3, [](const Tree& t) {
        VarRegistry reg;
        WeightAssignment<Poly> w = symbolic_weights(t, reg, WeightMode::Free);
        CHECK(det_expansion_poly(weighted_distance_matrix(t, w)) == emmanuel_rhs(t, w));
    });
}

TEST_CASE("independence form: symbolic and shape-independent") {
    Tree path(3, {{1, 2}, {2, 3}});
    VarRegistry reg;
    WeightAssignment<Poly> w = symbolic_weights(path, reg, WeightMode::Indep);
    CHECK(det_expansion_poly(indep_matrix(path, w)) == indep_rhs(path, w));

    // Same edge-weight tuples on a star and a path give the same determinant.
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 10; ++rep) {
        Tree star(4, {{1, 2}, {1, 3}, {1, 4}});
        Tree chain(4, {{1, 2}, {2, 3}, {3, 4}});
        WeightAssignment<Fp> ws = random_weights(star, rng, WeightMode::Indep);
        WeightAssignment<Fp> wc = ws; // same tables, tuple k on edge k
        CHECK(det_gauss_field(indep_matrix(star, ws)) ==
              det_gauss_field(indep_matrix(chain, wc)));
    }
}

TEST_CASE("division-free form: symbolic at n = 3 and x = 1 consistency") {
    for_each_tree(3, [](const Tree& t) {
        VarRegistry reg;
        WeightAssignment<Poly> w = symbolic_weights(t, reg, WeightMode::CK);
        CHECK(det_expansion_poly(ck_matrix(t, w)) == ck_rhs(t, w));
        CHECK(ck_rhs(t, w) == indep_rhs(t, w)); // x = 1 already substituted
    });
}

TEST_CASE("q-deformed-sum form: symbolic at n = 3") {
    for_each_tree(3, [](const Tree& t) {
        VarRegistry reg;
        WeightAssignment<Poly> w = symbolic_weights(t, reg, WeightMode::Free);
        CHECK(det_expansion_poly(qsum_matrix(t, w)) == qsum_rhs(t, w));
    });
}

TEST_CASE("identity names parse both ways") {
    CHECK(parse_identity("gp") == Identity::GP);
    CHECK(parse_identity("qsum") == Identity::QSum);
    for (Identity id : {Identity::GP, Identity::Q, Identity::Emmanuel, Identity::Indep,
                        Identity::CK, Identity::QSum})
        CHECK(parse_identity(identity_name(id)) == id);
    CHECK_THROWS_AS(parse_identity("nonsense"), std::invalid_argument);
}

TEST_CASE("randomized identity verification passes on random trees") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 3; ++rep) {
        Tree t = random_tree(2 + static_cast<int>(rng() % 6), rng);
        for (Identity id : {Identity::GP, Identity::Q, Identity::Emmanuel, Identity::Indep,
                            Identity::CK, Identity::QSum}) {
            IdentityReport r = verify_identity(t, id, 4, 1000 + rep);
            CHECK(r.ok());
            CHECK(r.trials == 4);
            CHECK(r.passes == 4);
            CHECK(r.failures.empty());
        }
    }
}

TEST_CASE("identity verification reports a broken identity") {
    // Compare the determinant against a wrong closed form; every trial must fail.
    Tree t(3, {{1, 2}, {2, 3}});
    IdentityReport r = verify_identity(
        t, Identity::Emmanuel,
        [](const Tree& tree, const WeightAssignment<Fp>& w) {
            return det_gauss_field(weighted_distance_matrix(tree, w));
        },
        [](const Tree& tree, const WeightAssignment<Fp>& w) {
            return emmanuel_rhs(tree, w) + w.one;
        },
        WeightMode::Free, 5, 4242);
    CHECK_FALSE(r.ok());
    CHECK(r.passes == 0);
    CHECK(r.failures.size() == 5);
}

} // TEST_SUITE
