#pragma once

#include "pi1/fgab.hpp"

#include <vector>

namespace pi1 {

// Small finite group given by its multiplication table. Group axioms are
// verified at construction; the order is capped at 48.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 48;

    explicit FiniteGroup(std::vector<std::vector<int>> table);
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);  // n <= 4
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
    int order_;
    std::vector<std::vector<int>> table_;
    int identity_ = -1;
    std::vector<int> inverse_;
};

// Finitely generated abelian group with an action of a finite group: the
// lattice model of a twisted constant group scheme split by a Galois cover
// with group Gamma. (The dictionary "Gamma-module = twisted constant group
// scheme split by a Gamma-cover" is the standard etale-local description; we
// use it as the modeling assumption for everything cohomological here.)
class GammaModule {
public:
    GammaModule();  // zero module over the trivial group
    GammaModule(FiniteGroup group, FgAbGroup carrier, std::vector<IntMatrix> action);

    static GammaModule with_trivial_action(const FiniteGroup& g, const FgAbGroup& carrier);
    static GammaModule over_trivial_group(const FgAbGroup& carrier);
    // Z[Gamma/Delta]-style permutation module: basis indexed by 0..k-1, each
    // group element permutes it; perms[g][i] = g . i.
    static GammaModule permutation(const FiniteGroup& g, const std::vector<std::vector<int>>& perms);

    const FiniteGroup& group() const { return group_; }
    const FgAbGroup& carrier() const { return carrier_; }
    const IntMatrix& action_matrix(int g) const { return action_[g]; }
    AbHom action(int g) const { return AbHom(carrier_, carrier_, action_[g]); }

    GammaModule direct_sum(const GammaModule& other) const;
    GammaModule direct_power(int m) const;
    // Contragredient module on the dual lattice; requires a free carrier.
    GammaModule dual() const;

    bool same_group(const GammaModule& other) const { return group_ == other.group_; }

private:
    FiniteGroup group_;
    FgAbGroup carrier_;
    std::vector<IntMatrix> action_;
};

// Validated equivariant homomorphism.
struct EquivariantHom {
    GammaModule source, target;
    AbHom hom;
};

// Checks equivariance; the error names the first offending group element.
EquivariantHom make_equivariant_hom(const GammaModule& m, const GammaModule& n, const AbHom& f);

struct GammaSubgroup {
    GammaModule module;
    AbHom inclusion;
};
struct GammaQuotient {
    GammaModule module;
    AbHom projection;
};

GammaSubgroup equivariant_kernel(const EquivariantHom& f);
GammaQuotient equivariant_cokernel(const EquivariantHom& f);

// ---- bar resolution -------------------------------------------------------

// C^p(Gamma, M) = Maps(Gamma^p, M), a direct power of the carrier indexed by
// p-tuples (big-endian tuple order).
FgAbGroup bar_cochain_group(const GammaModule& m, int p);
// Inhomogeneous differential C^p -> C^{p+1}.
IntMatrix bar_differential_matrix(const GammaModule& m, int p);
AbHom bar_differential(const GammaModule& m, int p);

// H^i(Gamma, M) for i in {0, 1, 2}.
FgAbGroup group_cohomology(const GammaModule& m, int degree);

// Long exact cohomology sequence of a short exact equivariant sequence
// 0 -> A -> B -> C -> 0 in degrees 0..2:
//   0 -> H^0(A) -> H^0(B) -> H^0(C) -> H^1(A) -> ... -> H^2(B) -> H^2(C).
// The chain starts with the zero cap and ends at H^2(C) without a trailing
// cap (the sequence continues into degree 3, so surjectivity onto H^2(C) is
// not asserted). The output passes is_exact at every interior node.
std::vector<AbHom> cohomology_long_sequence(const EquivariantHom& incl, const EquivariantHom& proj);

}  // namespace pi1
