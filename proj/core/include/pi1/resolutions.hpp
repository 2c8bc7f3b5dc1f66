#pragma once

#include "pi1/complexes.hpp"
#include "pi1/root_datum.hpp"

namespace pi1 {

// Lattice encoding of a central extension 1 -> T -> H -> G -> 1 with H^der
// simply connected. On characters the data is the exact sequence
//   0 -> X_G --char_injection--> X_H --kernel_restriction--> Z^k -> 0,
// on cocharacters its transpose
//   0 -> Z^k --kernel_embedding--> X_H^vee --cochar_projection--> X_G^vee -> 0.
// Roots of H are matched with roots of G by index (root_match[i] is the base
// index of total root i).
struct TResolution {
    RootDatum base;
    RootDatum total;
    IntMatrix char_injection;      // n_H x n_G
    IntMatrix kernel_restriction;  // k x n_H
    std::vector<int> root_match;

    TResolution(RootDatum b, RootDatum t, IntMatrix ci, IntMatrix kr, std::vector<int> rm)
        : base(std::move(b)), total(std::move(t)), char_injection(std::move(ci)),
          kernel_restriction(std::move(kr)), root_match(std::move(rm)) {}

    int kernel_rank() const { return kernel_restriction.rows(); }
    IntMatrix cochar_projection() const { return char_injection.transpose(); }
    IntMatrix kernel_embedding() const { return kernel_restriction.transpose(); }
    bool is_equivariant() const { return base.gamma().has_value() && total.gamma().has_value(); }
};

// Validates all resolution invariants (exactness on both sides, centrality,
// simple connectedness of the derived group, root matching, equivariance
// when both data carry actions).
TResolution make_t_resolution(RootDatum base, RootDatum total, IntMatrix char_injection,
                              IntMatrix kernel_restriction, std::vector<int> root_match);

// Canonical resolution attached to the maximal torus: the kernel is the
// torus of the simply connected cover and H^tor is canonically the torus of
// G. `padding` appends extra trivial kernel coordinates (still equivariant).
TResolution t_resolution_from_torus(const RootDatum& d, int padding = 0);

// A generic resolution is determined by a surjection Z^k ->> mu_1^* where
// mu_1 = ker[rad(G) x G~ -> G]; the choice is recorded as a lift matrix into
// the presentation generators of mu_1^*. Gamma actions do not transfer to
// the total datum along an arbitrary choice, so generic resolutions of
// gamma-data carry the action on the base only.
struct EmbeddingChoice {
    IntMatrix lift;  // mu_1^* generators x k
};
EmbeddingChoice default_embedding_choice(const RootDatum& d);
EmbeddingChoice padded_embedding_choice(const RootDatum& d, int extra);
TResolution t_resolution_generic(const RootDatum& d, const EmbeddingChoice& choice);

// mu_1^* = cok[X -> X(rad) + Z^l], the characters of the pushout kernel.
FgAbGroup mu1_star(const RootDatum& d);

// (H^tor)_* = X_H^vee / sat(Q_H^vee), presented on the total generators.
FgAbGroup resolution_r_star(const TResolution& r);

// pi1(R) = cok[T_* -> (H^tor)_*]; injectivity of T_* -> R_* is asserted.
FgAbGroup pi1_of_resolution(const TResolution& r);

// The canonical identification pi1(R) -> pi1(G, T) = X^vee/Q^vee induced by
// the cocharacter projection; asserted to be an isomorphism.
AbHom resolution_pi1_to_datum(const TResolution& r);

// Character-side fundamental sequence 0 -> (G^tor)^* -> R^* -> T^* -> mu^* -> 0,
// verified exact (with zero caps, six homomorphisms).
std::vector<AbHom> fundamental_sequence(const TResolution& r);

// Zig-zag of verified quasi-isomorphisms connecting (R^* -> T^*) to
// (Z(G)^* -> Z(G~)^*), both placed in degrees (-1, 0). `forward[i]` records
// whether leg i points with the zig-zag (true) or against it.
struct QisoCertificate {
    std::vector<ComplexMorphism> legs;
    std::vector<bool> forward;
    FgAbGroup h_minus_one;  // common H^{-1}, the character group of G^tor
    FgAbGroup h_zero;       // common H^0, canonically mu^*
};
QisoCertificate qiso_certificate(const TResolution& r);

// Torus-compatible homomorphism of reductive groups, encoded on
// cocharacters. Construction verifies that the coroot lattice maps into the
// coroot lattice; for normal maps every coroot must land on a coroot or 0.
struct GroupHomData {
    RootDatum source, target;
    IntMatrix cochar_map;  // n_2 x n_1
    bool normal = false;
};
GroupHomData make_group_hom(RootDatum source, RootDatum target, IntMatrix cochar_map,
                            bool normal = false);
GroupHomData identity_hom(const RootDatum& d);
GroupHomData compose(const GroupHomData& outer, const GroupHomData& inner);

// Morphism of resolutions of the same base over the identity.
struct ResolutionMorphism {
    TResolution source, target;
    IntMatrix kernel_map;        // T_src* -> T_tgt* on cocharacters
    IntMatrix total_cochar_map;  // X_Hsrc^vee -> X_Htgt^vee
};
ResolutionMorphism make_resolution_morphism(const TResolution& source, const TResolution& target,
                                            IntMatrix kernel_map, IntMatrix total_cochar_map);

// Kottwitz fiber product H' = H_1 x_{G_2} H_2 along kappa: G_1 -> G_2: a
// resolution of G_1 with kernel T_1 x T_2, its projection onto the first
// factor (a morphism of resolutions of G_1) and the projection data onto the
// second (a resolution of kappa).
struct FiberProductResolution {
    TResolution resolution;
    ResolutionMorphism to_first;
    IntMatrix kernel_map_to_second;    // T'_* -> T_2*
    IntMatrix total_cochar_to_second;  // X_H'^vee -> X_H2^vee
};
FiberProductResolution fiber_product_resolution(const GroupHomData& kappa, const TResolution& r1,
                                                const TResolution& r2);

// Map induced on pi1 by a morphism of resolutions; asserted an isomorphism
// (Lemma-level statement: it is independent of the morphism chosen).
AbHom pi1_of_morphism(const ResolutionMorphism& m);

// Canonical isomorphism pi1(r1) -> pi1(r2) through a common dominator,
// verified independent of the dominator by recomputation through a second
// fiber product.
AbHom canonical_iso(const TResolution& r1, const TResolution& r2);

// pi1 on homomorphisms: the cocharacter map descended to X^vee/Q^vee. For
// normal maps the resolution route (Kottwitz fiber product) is computed as
// well and asserted to agree.
AbHom pi1_functor(const GroupHomData& kappa);

// m-resolution 1 -> mu_1 -> rad(G) x G~ -> G -> 1 with the kernel pushed
// into a torus along the default embedding, giving a two-torus complex
// T -> R with pi1 = cok[T_* -> R_*].
struct MResolution {
    RootDatum base;
    RootDatum total;          // rad(G) x G~
    FgAbGroup kernel_chars;   // mu_1^*
    IntMatrix t_to_r_cochar;  // T_* -> R_* for the pushout pair
    FgAbGroup pi1;
};
MResolution m_resolution(const RootDatum& d);
FgAbGroup pi1_via_m_resolution(const RootDatum& d);

// Short exact sequence 1 -> G_1 -> G_2 -> G_3 -> 1 of reductive groups,
// encoded on cocharacters with an explicit root partition: total root
// roots_from_g1[i] matches root i of G_1, roots_from_g3[j] matches root j of
// G_3, and together they exhaust the roots of G_2.
struct SESData {
    RootDatum g1, g2, g3;
    IntMatrix iota_cochar;  // n_2 x n_1
    IntMatrix proj_cochar;  // n_3 x n_2
    std::vector<int> roots_from_g1;
    std::vector<int> roots_from_g3;
};
SESData make_ses(RootDatum g1, RootDatum g2, RootDatum g3, IntMatrix iota_cochar,
                 IntMatrix proj_cochar, std::vector<int> roots_from_g1,
                 std::vector<int> roots_from_g3);

// Exactness of 0 -> pi1(G_1) -> pi1(G_2) -> pi1(G_3) -> 0, computed through
// the functor and recomputed through the snake lemma on the coroot diagram;
// the two routes are asserted to agree map by map and both verified exact.
struct Pi1Exactness {
    std::vector<AbHom> sequence;     // functorial route, with zero caps
    std::vector<AbHom> snake_route;  // cokernel part of the snake output
};
Pi1Exactness check_pi1_exact(const SESData& s);

}  // namespace pi1
