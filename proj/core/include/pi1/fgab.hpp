#pragma once

#include "pi1/normal_forms.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pi1 {

// Canonical decomposition Z^r x Z/d1 x ... x Z/dk with d1 | d2 | ... | dk,
// all di >= 2. Two finitely generated abelian groups are isomorphic iff their
// canonical forms are equal.
struct CanonicalForm {
    int free_rank = 0;
    IntVec divisors;

    bool operator==(const CanonicalForm&) const = default;
    bool is_trivial() const { return free_rank == 0 && divisors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int torsion_order() const;
    // Rendering used everywhere (CLI, golden tests): "Z^r x Z/d1 x ...",
    // "Z" for rank one, "0" for the trivial group.
    std::string to_string() const;
};

// Finitely generated abelian group given by a presentation: `gens` free
// generators and a lattice of relations. Elements are integer column vectors
// of length `gens`, understood modulo the relation lattice. The canonical
// form is computed eagerly at construction and never changes; values are
// immutable and safe to share across threads.
class FgAbGroup {
public:
    FgAbGroup() : gens_(0) {}

    static FgAbGroup free_group(int n);
    static FgAbGroup zero() { return free_group(0); }
    static FgAbGroup cyclic(const Int& n);  // Z/n, or Z when n = 0
    // Relations as rows (each row is one relation, `gens` columns wide).
    static FgAbGroup from_relation_rows(int gens, const IntMatrix& rows);
    // Relations as columns of a gens x k matrix.
    static FgAbGroup from_relation_cols(int gens, const IntMatrix& cols);
    static FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
    // a^m; the canonical form is derived from a's without re-running Smith.
    static FgAbGroup direct_power(const FgAbGroup& a, int m);

    int gens() const { return gens_; }
    // Canonical basis of the relation lattice, as columns (gens x k).
    const IntMatrix& relation_cols() const { return relcols_; }
    // The same lattice in row shape (k x gens, Hermite normal form).
    IntMatrix relation_rows() const { return relcols_.transpose(); }

    const CanonicalForm& canon() const { return canon_; }
    std::string to_string() const { return canon_.to_string(); }
    bool is_trivial() const { return canon_.is_trivial(); }

    bool element_is_zero(const IntVec& v) const;
    bool elements_equal(const IntVec& v, const IntVec& w) const;

    // Identical presentation (same generators, same relation lattice); this
    // is the composability test for sequences of homomorphisms.
    bool same_presentation(const FgAbGroup& other) const;

    // Generators of the torsion part: vectors t_i with orders d_i matching
    // canon().divisors.
    std::vector<std::pair<IntVec, Int>> torsion_generators() const;
    // Coset representatives of all elements; requires a finite group.
    std::vector<IntVec> all_elements(const Int& max_order = 4096) const;

private:
    FgAbGroup(int gens, IntMatrix relcols, CanonicalForm canon);

    int gens_;
    IntMatrix relcols_;  // canonical column basis of the relation lattice
    CanonicalForm canon_;
    std::vector<int> pivot_cols_;  // pivot row of each basis column, ascending
};

// Homomorphism between presented groups, given by a matrix on generators
// (target.gens x source.gens). Construction verifies well-definedness: every
// relation of the source must map into the relation lattice of the target.
class AbHom {
public:
    AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static AbHom identity(const FgAbGroup& g);
    static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVec apply(const IntVec& v) const { return matrix_.apply(v); }
    bool is_zero_hom() const;
    bool is_isomorphism() const;
    AbHom inverse() const;  // requires is_isomorphism()

    friend AbHom compose(const AbHom& g, const AbHom& f);  // g after f
    friend bool hom_equal(const AbHom& f, const AbHom& g);

private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

AbHom compose(const AbHom& g, const AbHom& f);
bool hom_equal(const AbHom& f, const AbHom& g);

// Subgroup presented on an explicit lattice basis, with its inclusion.
struct Subgroup {
    FgAbGroup group;
    AbHom inclusion;  // group -> ambient
};

struct Quotient {
    FgAbGroup group;
    AbHom projection;  // ambient -> group
};

Subgroup kernel(const AbHom& f);
Quotient cokernel(const AbHom& f);

// Columns generating f's image inside the target (relations included).
IntMatrix image_lattice(const AbHom& f);

// Subquotient (colspan(numer)) / (colspan(denom)) of Z^n; denom must be
// contained in the span of numer. `basis` holds the chosen generators of the
// subgroup as columns and `class_of` expresses a lattice element in them.
struct Subquotient {
    int ambient = 0;
    IntMatrix basis;  // ambient x s
    IntMatrix denom;  // ambient x t
    FgAbGroup group;  // presented on the s basis columns

    IntVec class_of(const IntVec& v) const;
};

Subquotient make_subquotient(int ambient, const IntMatrix& numer, const IntMatrix& denom);

// ---- exactness ------------------------------------------------------------

struct ExactnessResult {
    bool exact = true;
    int failing_node = -1;   // index of the interior node (target of hom i)
    IntVec witness;          // ambient element of the failing node
    std::string reason;

    explicit operator bool() const { return exact; }
};

// Checks image = kernel at every interior node of the chain. Throws
// InputError if consecutive homomorphisms are not composable.
ExactnessResult is_exact(const std::vector<AbHom>& seq);

// ---- snake lemma -----------------------------------------------------------

// Two short exact rows joined by vertical maps a, b, c:
//
//   0 -> A  --iota-->  B  --pr-->  C  -> 0
//        |a            |b          |c
//   0 -> A' --iota'--> B' --pr'--> C' -> 0
struct SnakeDiagram {
    AbHom top_left, top_right;        // iota : A -> B, pr : B -> C
    AbHom bottom_left, bottom_right;  // iota': A'-> B', pr': B'-> C'
    AbHom vert_a, vert_b, vert_c;
};

// Returns the six-term exact sequence with zero caps:
//   0 -> ker a -> ker b -> ker c -> cok a -> cok b -> cok c -> 0
// (seven homomorphisms). Throws InputError if the rows are not short exact
// or the squares do not commute.
std::vector<AbHom> snake_sequence(const SnakeDiagram& d);

// ---- derived functors over Z ------------------------------------------------

// (Hom(M, Z), Ext^1(M, Z)), computed from a free resolution of M.
std::pair<FgAbGroup, FgAbGroup> derived_dual(const FgAbGroup& m);

// (M tensor N, Tor_1(M, N)).
std::pair<FgAbGroup, FgAbGroup> derived_tensor(const FgAbGroup& m, const FgAbGroup& n);

}  // namespace pi1
