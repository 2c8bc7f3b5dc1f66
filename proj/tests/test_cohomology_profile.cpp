#include "doctest.h"

#include "pi1/catalog.hpp"
#include "pi1/cohomology_profile.hpp"

using namespace pi1;

namespace {

RootDatum swapped_product() {
    RootDatum base = standard_group("Product(SL(2),SL(2))");
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix swap{{0, 1}, {1, 0}};
    return RootDatum(2, base.roots(), base.coroots(),
                     GammaAction{z2, {IntMatrix::identity(2), swap}});
}

SESData gl2_ses() {
    RootDatum gm = standard_group("Torus(1)");
    RootDatum gl2 = standard_group("GL(2)");
    RootDatum pgl2 = standard_group("PGL(2)");
    return make_ses(gm, gl2, pgl2, IntMatrix{{1}, {1}}, IntMatrix{{1, -1}}, {}, {0, 1});
}

}  // namespace

TEST_CASE("profile of the PGL2 resolution with trivial action") {
    RootDatum pgl2 = standard_group("PGL(2)");
    TResolution r = t_resolution_from_torus(pgl2);
    AbCohProfile p = ab_cohomology_profile(pgl2, r);
    // the complex is (Z -x2-> Z) in degrees (-1, 0)
    CHECK(p.value(-1).to_string() == "0");
    CHECK(p.value(0).to_string() == "Z/2");
    CHECK(p.value(1).to_string() == "0");
    CHECK(p.value(2).to_string() == "0");
    CHECK(is_exact(p.torus_sequence).exact);
    CHECK(p.dual_hom.to_string() == "0");
    CHECK(p.dual_ext.to_string() == "Z/2");
}

TEST_CASE("profile of a torus is its cocharacter lattice in degree 0") {
    RootDatum t2 = standard_group("Torus(2)");
    AbCohProfile p = ab_cohomology_profile(t2, t_resolution_from_torus(t2));
    CHECK(p.value(-1).to_string() == "0");
    CHECK(p.value(0).to_string() == "Z^2");
    CHECK(p.value(1).to_string() == "0");
    CHECK(p.value(2).to_string() == "0");
}

TEST_CASE("profile values are resolution independent for generic choices") {
    RootDatum pgl3 = standard_group("PGL(3)");
    TResolution gen = t_resolution_generic(pgl3, padded_embedding_choice(pgl3, 2));
    AbCohProfile p = ab_cohomology_profile(pgl3, gen);
    CHECK(p.value(0).to_string() == "Z/3");
}

TEST_CASE("equivariant profile over the swap action") {
    RootDatum d = swapped_product();
    TResolution r = t_resolution_from_torus(d);
    AbCohProfile p = ab_cohomology_profile(d, r);
    CHECK(is_exact(p.torus_sequence).exact);
    AbCohProfile p2 = ab_cohomology_profile(d, t_resolution_from_torus(d, 1));
    for (int i = -1; i <= 2; ++i) CHECK(p.value(i).canon() == p2.value(i).canon());
}

TEST_CASE("non-equivariant resolution of an acting datum is rejected") {
    RootDatum d = swapped_product();
    TResolution bad = t_resolution_generic(d, default_embedding_choice(d));
    CHECK_THROWS_WITH_AS(ab_cohomology_profile(d, bad), doctest::Contains("non-equivariant"),
                         InputError);
}

TEST_CASE("dual profiles of the standard examples") {
    auto [h1, e1] = dual_profile(standard_group("PGL(2)"));
    CHECK(h1.to_string() == "0");
    CHECK(e1.to_string() == "Z/2");
    auto [h2, e2] = dual_profile(standard_group("GL(2)"));
    CHECK(h2.to_string() == "Z");
    CHECK(e2.to_string() == "0");
    auto [h3, e3] = dual_profile(standard_group("Torus(3)"));
    CHECK(h3.to_string() == "Z^3");
    CHECK(e3.to_string() == "0");
}

TEST_CASE("abelianized long exact sequence with trivial action") {
    auto les = ab_long_sequence(gl2_ses());
    REQUIRE(les.size() == 9);
    CHECK(is_exact(les).exact);
    // degree 0 is a copy of the pi1 sequence, everything above vanishes
    CHECK(les[1].source().to_string() == "Z");
    CHECK(les[2].target().to_string() == "Z/2");
    CHECK(les[4].source().to_string() == "0");  // H^1 of the middle
    CHECK(les.back().target().to_string() == "0");
}

TEST_CASE("abelianized long exact sequence over a swap action") {
    // torus sequence 0 -> Z(triv) -> Z^2(swap) -> Z(sign) -> 0 on
    // cocharacters: pi1 modules inherit exactly these actions
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix swap{{0, 1}, {1, 0}};
    RootDatum middle(2, {}, {}, GammaAction{z2, {IntMatrix::identity(2), swap}});
    RootDatum kernel(1, {}, {},
                     GammaAction{z2, {IntMatrix::identity(1), IntMatrix::identity(1)}});
    RootDatum quot(1, {}, {}, GammaAction{z2, {IntMatrix::identity(1), IntMatrix{{-1}}}});
    SESData s = make_ses(kernel, middle, quot, IntMatrix{{1}, {1}}, IntMatrix{{1, -1}}, {}, {});
    auto les = ab_long_sequence(s);
    REQUIRE(les.size() == 9);
    CHECK(is_exact(les).exact);
    // H^0(sign) = 0, and the connecting H^1(sign quotient) -> H^2(trivial
    // kernel) is an isomorphism Z/2 -> Z/2 because the middle is induced
    CHECK(les[3].source().to_string() == "0");
    CHECK(les[6].source().to_string() == "Z/2");  // H^1 of the quotient
    CHECK(les[6].target().to_string() == "Z/2");  // H^2 of the kernel
    CHECK(les[6].source().canon() == les[6].target().canon());
}
