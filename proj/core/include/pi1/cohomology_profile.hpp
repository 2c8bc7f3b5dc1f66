#pragma once

#include "pi1/resolutions.hpp"

namespace pi1 {

// Gamma-model abelian cohomology of a reductive datum: the hypercohomology
// of the cocharacter complex (T_* -> R_*) of a resolution, placed in degrees
// (-1, 0), in degrees -1..2. The scope is deliberately lattice-level: no
// sheaf of units is modeled; the values here are the universal coefficient
// data from which flat-cohomology groups are obtained by further derived
// tensoring.
struct AbCohProfile {
    int lowest_degree = -1;
    std::vector<FgAbGroup> values;      // H^i_ab for i = -1, 0, 1, 2
    std::vector<AbHom> torus_sequence;  // ... -> H^i(T) -> H^i(R) -> H^i_ab -> ...
    FgAbGroup dual_hom, dual_ext;       // RHom(pi1(G), Z) data

    const FgAbGroup& value(int degree) const { return values[degree - lowest_degree]; }
};

// Computes the profile from a resolution. The resolution must be
// equivariant when the datum carries an action. Values are recomputed
// through a second (padded from-torus) resolution and asserted equal, so a
// returned profile is certified resolution-independent.
AbCohProfile ab_cohomology_profile(const RootDatum& d, const TResolution& r);

// (Hom(pi1, Z), Ext^1(pi1, Z)); the free part matches the cocharacters of
// G^tor and the torsion part matches mu(-1).
std::pair<FgAbGroup, FgAbGroup> dual_profile(const RootDatum& d);

// Gamma-cohomology long exact sequence of 0 -> pi1(G1) -> pi1(G2) -> pi1(G3) -> 0,
// using the inherited actions when all three data carry one (over the same
// group), and trivial actions otherwise.
std::vector<AbHom> ab_long_sequence(const SESData& s);

}  // namespace pi1
