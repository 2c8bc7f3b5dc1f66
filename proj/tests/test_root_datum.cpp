#include "doctest.h"

#include "pi1/catalog.hpp"
#include "pi1/root_datum.hpp"

using namespace pi1;

namespace {

RootDatum a1_sc() {
    // X = Z in the weight basis: root (2), coroot (1)
    return RootDatum(1, {{Int(2)}, {Int(-2)}}, {{Int(1)}, {Int(-1)}});
}

GammaAction swap_two_factors(int block) {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    int n = 2 * block;
    IntMatrix swap(n, n);
    for (int i = 0; i < block; ++i) {
        swap(i, block + i) = 1;
        swap(block + i, i) = 1;
    }
    return GammaAction{z2, {IntMatrix::identity(n), swap}};
}

}  // namespace

TEST_CASE("validation accepts the catalog axioms and rejects violations") {
    CHECK_NOTHROW(a1_sc());

    // pairing 4 instead of 2
    CHECK_THROWS_WITH_AS(RootDatum(1, {{Int(2)}, {Int(-2)}}, {{Int(2)}, {Int(-2)}}),
                         doctest::Contains("pairing axiom"), InputError);

    // missing the negative root
    CHECK_THROWS_AS(RootDatum(1, {{Int(2)}}, {{Int(1)}}), InputError);

    // reflection escape: pair a GL2-style root with a broken partner
    std::vector<IntVec> roots = {{Int(1), Int(-1)}, {Int(-1), Int(1)}, {Int(2), Int(0)},
                                 {Int(-2), Int(0)}};
    std::vector<IntVec> coroots = {{Int(1), Int(-1)}, {Int(-1), Int(1)}, {Int(1), Int(0)},
                                   {Int(-1), Int(0)}};
    CHECK_THROWS_WITH_AS(RootDatum(2, roots, coroots), doctest::Contains("reflection"),
                         InputError);

    // GL2 is valid
    CHECK_NOTHROW(standard_group("GL(2)"));
}

TEST_CASE("gamma validation") {
    // swap action on SL(2) x SL(2)
    RootDatum d = standard_group("Product(SL(2),SL(2))");
    RootDatum with(2, d.roots(), d.coroots(), swap_two_factors(1));
    CHECK(with.gamma().has_value());

    // an action that does not permute the roots
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix bad{{1, 1}, {0, -1}};
    CHECK_THROWS_WITH_AS(RootDatum(2, d.roots(), d.coroots(),
                                   GammaAction{z2, {IntMatrix::identity(2), bad}}),
                         doctest::Contains("gamma"), InputError);
}

TEST_CASE("catalog root counts and Cartan determinants") {
    struct Row {
        char type;
        int rank;
        int count;
        long long det;
    };
    std::vector<Row> rows = {{'A', 3, 12, 4}, {'B', 3, 18, 2},  {'C', 3, 18, 2},
                             {'D', 4, 24, 4}, {'E', 6, 72, 3},  {'E', 7, 126, 2},
                             {'E', 8, 240, 1}, {'F', 4, 48, 1}, {'G', 2, 12, 1}};
    for (const auto& r : rows) {
        RootDatum sc = simply_connected_datum(r.type, r.rank);
        CHECK(static_cast<int>(sc.roots().size()) == r.count);
        CHECK(sc.cartan_matrix().determinant() == r.det);
        RootDatum adj = adjoint_datum(r.type, r.rank);
        CHECK(static_cast<int>(adj.roots().size()) == r.count);
    }
}

TEST_CASE("catalog parsing") {
    CHECK(standard_group("Torus(3)").rank() == 3);
    CHECK(standard_group("Torus(3)").roots().empty());
    CHECK(standard_group("GL(3)").roots().size() == 6);
    CHECK(standard_group("SL(2)").rank() == 1);
    CHECK(standard_group("Product(SL(2),Torus(1))").rank() == 2);
    CHECK(standard_group("SO(2)").rank() == 1);
    CHECK(standard_group("Sp(4)").rank() == 2);
    CHECK_THROWS_AS(standard_group("Sp(3)"), InputError);
    CHECK_THROWS_AS(standard_group("Nonsense(1)"), InputError);
    CHECK_THROWS_AS(standard_group("SL(2) junk"), InputError);
}

TEST_CASE("fundamental invariants of the standard examples") {
    GroupInvariants pgl2 = fundamental_invariants(standard_group("PGL(2)"));
    CHECK(pgl2.pi1.to_string() == "Z/2");
    CHECK(pgl2.mu_star.to_string() == "Z/2");
    CHECK(pgl2.center_chars.to_string() == "0");
    CHECK(pgl2.cochar_torus_quotient.to_string() == "0");
    CHECK(pgl2.is_adjoint);
    CHECK_FALSE(pgl2.is_simply_connected);

    GroupInvariants gl2 = fundamental_invariants(standard_group("GL(2)"));
    CHECK(gl2.pi1.to_string() == "Z");
    // the derived group is its own simply connected cover, so mu is trivial
    // (and torsion(pi1) = 0 forces this through the mu(-1) sequence)
    CHECK(gl2.mu_star.to_string() == "0");
    CHECK(gl2.center_chars.to_string() == "Z");
    CHECK(gl2.cochar_torus_quotient.to_string() == "Z");
    CHECK_FALSE(gl2.is_semisimple);

    GroupInvariants sp4 = fundamental_invariants(standard_group("Sp(4)"));
    CHECK(sp4.pi1.to_string() == "0");
    CHECK(sp4.is_simply_connected);

    GroupInvariants t2 = fundamental_invariants(standard_group("Torus(2)"));
    CHECK(t2.pi1.to_string() == "Z^2");
    CHECK(t2.mu_star.to_string() == "0");
}

TEST_CASE("catalog pi1 values") {
    CHECK(fundamental_invariants(standard_group("SO(5)")).pi1.to_string() == "Z/2");
    CHECK(fundamental_invariants(standard_group("SO(6)")).pi1.to_string() == "Z/2");
    CHECK(fundamental_invariants(standard_group("Spin(7)")).pi1.to_string() == "0");
    CHECK(fundamental_invariants(standard_group("PGL(4)")).pi1.to_string() == "Z/4");
    CHECK(fundamental_invariants(standard_group("SC(E,6)")).pi1.to_string() == "0");
    CHECK(fundamental_invariants(standard_group("ADJ(E,6)")).pi1.to_string() == "Z/3");
    CHECK(fundamental_invariants(standard_group("ADJ(D,4)")).pi1.to_string() == "Z/2 x Z/2");
}

TEST_CASE("simply connected cover") {
    // PGL2 -> SL2 with index-2 cocharacter image
    CoveringData c = simply_connected_cover(standard_group("PGL(2)"));
    CHECK(c.cover.rank() == 1);
    CHECK(fundamental_invariants(c.cover).is_simply_connected);
    CHECK(c.mu_star.to_string() == "Z/2");
    CHECK(c.cochar_map.cols() == 1);
    // index of the image lattice in Z is 2
    CHECK(abs(c.cochar_map(0, 0)) == 2);

    // SL2 covers itself
    CoveringData c2 = simply_connected_cover(standard_group("SL(2)"));
    CHECK(fundamental_invariants(c2.cover).is_simply_connected);
    CHECK(c2.mu_star.to_string() == "0");
    CHECK(c2.cochar_map.is_identity());

    // GL2 -> SL2, the coroot embeds as (1, -1)
    CoveringData c3 = simply_connected_cover(standard_group("GL(2)"));
    CHECK(c3.cover.rank() == 1);
    IntVec img = c3.cochar_map.col(0);
    CHECK(img[0] + img[1] == 0);
    CHECK(abs(img[0]) == 1);

    // idempotence on canonical data
    CoveringData c4 = simply_connected_cover(c.cover);
    CHECK(c4.cover.rank() == c.cover.rank());
    CHECK(fundamental_invariants(c4.cover).pi1.canon() ==
          fundamental_invariants(c.cover).pi1.canon());
}

TEST_CASE("central quotients") {
    // SL2 by its center gives the adjoint datum
    RootDatum sl2 = standard_group("SL(2)");
    IntMatrix half(1, 1);
    half(0, 0) = 1;
    RootDatum q = central_quotient(sl2, half, 2);
    CHECK(fundamental_invariants(q).pi1.to_string() == "Z/2");
    CHECK(fundamental_invariants(q).is_adjoint);

    // trivial subgroup leaves the datum unchanged
    RootDatum same = central_quotient(sl2, IntMatrix(1, 0), 1);
    CHECK(same == sl2);

    // diagonal quotient of SL2 x SL2 (the SO(4) datum)
    RootDatum prod = standard_group("Product(SL(2),SL(2))");
    IntMatrix diag(2, 1);
    diag(0, 0) = 1;
    diag(1, 0) = 1;
    RootDatum so4 = central_quotient(prod, diag, 2);
    CHECK(fundamental_invariants(so4).pi1.to_string() == "Z/2");
    CHECK(fundamental_invariants(standard_group("SO(4)")).pi1.canon() ==
          fundamental_invariants(so4).pi1.canon());

    // non-central generator is rejected
    IntMatrix bad(1, 1);
    bad(0, 0) = 1;
    CHECK_THROWS_WITH_AS(central_quotient(sl2, bad, 3), doctest::Contains("not central"),
                         InputError);

    // parser route
    RootDatum via_spec = standard_group("CentralQuotient(Product(SL(2),SL(2)),[1/2,1/2])");
    CHECK(fundamental_invariants(via_spec).pi1.to_string() == "Z/2");
}

TEST_CASE("central quotient grows pi1 torsion by the subgroup order") {
    struct Case {
        const char* spec;
        const char* gen;
        long long order;
    };
    std::vector<Case> cases = {
        {"SL(2)", "CentralQuotient(SL(2),[1/2])", 2},
        {"SL(3)", "CentralQuotient(SL(3),[1/3,2/3])", 3},
        {"Sp(4)", "CentralQuotient(Sp(4),[1/2,0])", 2},
    };
    for (const auto& c : cases) {
        FgAbGroup before = fundamental_invariants(standard_group(c.spec)).pi1;
        FgAbGroup after = fundamental_invariants(standard_group(c.gen)).pi1;
        CHECK(after.canon().torsion_order() == before.canon().torsion_order() * Int(c.order));
    }
}

TEST_CASE("catalog sc groups have trivial pi1 and adjoint groups match their mu") {
    for (const char* spec : {"SL(2)", "SL(5)", "Sp(6)", "Spin(9)", "Spin(10)", "SC(G,2)",
                             "SC(F,4)", "SC(E,7)"}) {
        GroupInvariants inv = fundamental_invariants(standard_group(spec));
        CHECK(inv.pi1.is_trivial());
        CHECK(inv.is_simply_connected);
    }
    for (const char* spec : {"PGL(2)", "PGL(5)", "ADJ(B,3)", "ADJ(C,3)", "ADJ(D,5)",
                             "ADJ(E,7)"}) {
        RootDatum d = standard_group(spec);
        GroupInvariants inv = fundamental_invariants(d);
        CHECK(inv.is_adjoint);
        CHECK(inv.cochar_torus_quotient.is_trivial());
        // pi1 of the adjoint group is mu(-1) of its cover
        CoveringData cover = simply_connected_cover(d);
        CHECK(inv.pi1.canon() == inv.mu_minus_one.canon());
        CHECK(inv.mu_star.canon() == cover.mu_star.canon());
    }
}

TEST_CASE("gamma descends to pi1") {
    RootDatum base = standard_group("Product(SL(2),SL(2))");
    RootDatum with(2, base.roots(), base.coroots(), swap_two_factors(1));
    IntMatrix diag(2, 1);
    diag(0, 0) = 1;
    diag(1, 0) = 1;
    RootDatum so4 = central_quotient(with, diag, 2);
    GroupInvariants inv = fundamental_invariants(so4);
    REQUIRE(inv.pi1_module.has_value());
    CHECK(inv.pi1_module->carrier().to_string() == "Z/2");
}

TEST_CASE("torus has free pi1 equal to its cocharacters") {
    for (int r : {0, 1, 4}) {
        GroupInvariants inv = fundamental_invariants(standard_group("Torus(" +
                                                                    std::to_string(r) + ")"));
        CHECK(inv.pi1.canon().free_rank == r);
        CHECK(inv.pi1.canon().divisors.empty());
    }
}
