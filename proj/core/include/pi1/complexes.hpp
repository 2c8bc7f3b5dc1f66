#pragma once

#include "pi1/gamma.hpp"

#include <vector>

namespace pi1 {

// Bounded cochain complex of finitely generated abelian groups over a
// contiguous range of degrees. `blocks` optionally records how each term was
// assembled from direct summands; duals reverse the block order, which makes
// the cone/dual/shift identities hold as literal equalities of matrices.
class Complex {
public:
    Complex() : lowest_(0) {}
    Complex(int lowest_degree, std::vector<FgAbGroup> terms, std::vector<AbHom> diffs,
            std::vector<std::vector<int>> blocks = {});

    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(terms_.size()) - 1; }
    bool has_term(int degree) const {
        return degree >= lowest_ && degree <= highest_degree();
    }
    const FgAbGroup& term(int degree) const { return terms_[degree - lowest_]; }
    // differential term(degree) -> term(degree+1); null when absent
    const AbHom* differential(int degree) const;
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Cocycles-mod-coboundaries at one degree; at the ends the missing
    // differentials are treated as zero maps.
    Subquotient cohomology_data(int degree) const;
    FgAbGroup cohomology(int degree) const { return cohomology_data(degree).group; }
    bool is_acyclic() const;

    // Shift [n]: the term in degree d moves to degree d - n and every
    // differential picks up the sign (-1)^n.
    Complex shifted(int n) const;

    // Degreewise Hom(-, Z) for complexes of free groups: the term in degree
    // d moves to -d, differentials transpose, block order reverses.
    Complex dualized() const;

    // Bit-level comparison: degrees, presentations, blocks, matrices.
    bool structurally_equal(const Complex& other) const;

private:
    int lowest_;
    std::vector<FgAbGroup> terms_;
    std::vector<AbHom> diffs_;
    std::vector<std::vector<int>> blocks_;
};

// Two-term complex of Gamma-modules in degrees (base, base+1) with an
// equivariant differential.
struct TwoTermComplex {
    int base_degree = 0;
    GammaModule lower, upper;
    AbHom differential;

    TwoTermComplex();
};

TwoTermComplex make_two_term(int base_degree, const GammaModule& lower, const GammaModule& upper,
                             const IntMatrix& differential);

// Morphism of two-term complexes with the same base degree; components are
// equivariant and commute with the differentials.
struct ComplexMorphism {
    TwoTermComplex source, target;
    AbHom lower_map, upper_map;
};

ComplexMorphism make_complex_morphism(const TwoTermComplex& source, const TwoTermComplex& target,
                                      const IntMatrix& lower_map, const IntMatrix& upper_map);
ComplexMorphism identity_morphism(const TwoTermComplex& c);
ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f);

Complex two_term_as_complex(const TwoTermComplex& c);

// Mapping cone: term order [source^{i+1} | target^i], differential
// [[-d_src, 0], [f, d_tgt]].
Complex cone(const ComplexMorphism& f);

// Duality conventions (fixed so that cone(f).dualized() equals
// cone(dual_morphism(f)).shifted(-1) term by term):
//   - complexes dualize with plain transposes,
//   - morphisms dualize with negated transposes.
TwoTermComplex dual_complex(const TwoTermComplex& c);
ComplexMorphism dual_morphism(const ComplexMorphism& f);

// Induced map on cohomology in the given degree.
AbHom induced_cohomology_map(const Complex& a, const Complex& b,
                             const std::vector<IntMatrix>& maps, int degree);

// True iff the induced maps on both cohomology groups are isomorphisms.
// Implemented twice (cone acyclicity and direct induced-map tests); the two
// routes are asserted to agree on every call.
bool is_quasi_isomorphism(const ComplexMorphism& f);

// Total complex of the double complex C^p(Gamma, -) applied to the two-term
// complex, with bar degrees 0..maxp. Term order per degree: lower column
// block first, then upper column block.
Complex bar_total_complex(const TwoTermComplex& c, int maxp);

// Hypercohomology H^i of the two-term complex of Gamma-modules; supported
// for i in [base_degree, base_degree + 3].
FgAbGroup hypercohomology(const TwoTermComplex& c, int degree);

// Long exact cohomology sequence of a termwise short exact sequence of
// complexes 0 -> a -> b -> c -> 0. `incl[i]` and `proj[i]` are the matrices
// in degree lowest + i. The returned chain is
//   0 -> H^lo(a) -> H^lo(b) -> H^lo(c) -> H^{lo+1}(a) -> ... -> H^hi(c)
// with no trailing cap.
std::vector<AbHom> les_of_complexes(const Complex& a, const Complex& b, const Complex& c,
                                    const std::vector<IntMatrix>& incl,
                                    const std::vector<IntMatrix>& proj, int lo, int hi);

// Seeded generator of quasi-isomorphisms between free two-term complexes
// (trivial action), built by composing elementary moves: basis changes on
// either side and stabilization by an acyclic (Z = Z) summand. Every output
// is a quasi-isomorphism by construction; ranks stay <= max_rank.
ComplexMorphism random_quasi_isomorphism(Rng& rng, int max_rank);

}  // namespace pi1
