#pragma once

#include "pi1/gamma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pi1 {

// Finite-group action on a root datum: one matrix per group element acting
// on the character lattice and permuting the root set. The cocharacter
// action is the inverse transpose and must permute the coroots compatibly.
struct GammaAction {
    FiniteGroup group;
    std::vector<IntMatrix> char_action;
};

// Root datum (X, Phi, X^vee, Phi^vee) with X = X^vee = Z^rank and the
// standard pairing. Roots and coroots are index-paired. Validation runs at
// construction: pairing 2 on matched pairs, reflection closure on both
// sides, plus/minus pairs, reducedness, and compatibility of the optional
// finite-group action.
class RootDatum {
public:
    RootDatum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
              std::optional<GammaAction> gamma = std::nullopt);

    int rank() const { return rank_; }
    const std::vector<IntVec>& roots() const { return roots_; }
    const std::vector<IntVec>& coroots() const { return coroots_; }
    const std::optional<GammaAction>& gamma() const { return gamma_; }

    int semisimple_rank() const { return static_cast<int>(simples_.size()); }
    const std::vector<int>& simple_indices() const { return simples_; }

    IntMatrix root_cols() const;           // rank x |Phi|
    IntMatrix coroot_cols() const;         // rank x |Phi|
    IntMatrix simple_root_cols() const;    // rank x l
    IntMatrix simple_coroot_cols() const;  // rank x l
    // C(i, j) = <alpha_j, alpha_i^vee> over the simple system
    IntMatrix cartan_matrix() const;
    // weight-coordinate restriction X -> Z^l, chi -> (<chi, alpha_i^vee>)_i
    IntMatrix restriction_matrix() const;
    // cocharacter action (inverse transpose of the character action)
    IntMatrix cochar_action(int g) const;

    bool operator==(const RootDatum& other) const;

private:
    void validate();
    void find_simple_system();

    int rank_;
    std::vector<IntVec> roots_, coroots_;
    std::optional<GammaAction> gamma_;
    std::vector<int> simples_;
};

// Derived invariants of the datum, all verified at construction time.
struct GroupInvariants {
    IntMatrix coroot_lattice;         // column basis of Q^vee in X^vee
    IntMatrix root_lattice;           // column basis of Q in X
    FgAbGroup pi1;                    // X^vee / Q^vee on the ambient generators
    FgAbGroup mu_star;                // characters of the fundamental group of G^der
    FgAbGroup mu_minus_one;           // Hom(mu^*, Q/Z), presented as sat(Q^vee)/Q^vee
    FgAbGroup center_chars;           // X / Q
    FgAbGroup cochar_torus_quotient;  // X^vee / sat(Q^vee), cocharacters of G^tor
    bool is_semisimple = false;
    bool is_simply_connected = false;
    bool is_adjoint = false;
    // the verified exact sequence 0 -> mu(-1) -> pi1 -> (G^tor)_* -> 0
    std::vector<AbHom> torsion_sequence;
    // pi1 with its inherited action, when the datum carries one
    std::optional<GammaModule> pi1_module;
};

GroupInvariants fundamental_invariants(const RootDatum& d);

// Simply connected cover of the derived group, in weight/coroot coordinates.
struct CoveringData {
    RootDatum cover;
    IntMatrix cochar_map;  // X~^vee -> X^vee, columns are the simple coroots
    IntMatrix char_map;    // X -> X~, the restriction matrix
    FgAbGroup mu_star;     // cokernel of the character map
};

CoveringData simply_connected_cover(const RootDatum& d);

// Quotient by a finite central subgroup generated by the columns of
// `numerators` / `denominator` inside X^vee tensor Q. Every generator must
// pair integrally with every root.
RootDatum central_quotient(const RootDatum& d, const IntMatrix& numerators,
                           const Int& denominator);

RootDatum product_datum(const RootDatum& a, const RootDatum& b);

}  // namespace pi1
