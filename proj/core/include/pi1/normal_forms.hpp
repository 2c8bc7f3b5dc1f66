#pragma once

#include "pi1/matrix.hpp"

#include <optional>

namespace pi1 {

// Smith decomposition u * a * v = d with u, v unimodular and d diagonal,
// d(0,0) | d(1,1) | ... , all diagonal entries nonnegative.
//
// Pivot rule (fixed for reproducibility): among the nonzero entries of the
// active submatrix pick one of smallest absolute value, breaking ties by
// smallest column then smallest row.
struct SmithResult {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;  // filled only when requested
    int rank = 0;
    IntVec divisors() const;  // nonzero diagonal entries
};

struct SnfOptions {
    bool with_u = true;
    bool with_v = true;
    bool with_u_inv = false;
    bool with_v_inv = false;
};

SmithResult smith_normal_form(const IntMatrix& a, const SnfOptions& opts = {});

// Invariant factors only (no transform bookkeeping).
IntVec smith_divisors(const IntMatrix& a);

// Row-style Hermite normal form of the row span of `a`: pivot columns
// strictly increasing, pivots positive, entries above a pivot reduced into
// [0, pivot). Zero rows are dropped, so the result is a canonical basis of
// the row lattice.
IntMatrix hermite_rows(const IntMatrix& a);

// ---- column-lattice utilities -------------------------------------------
// A sublattice of Z^n is represented by an n x k matrix whose columns
// generate it.

// Canonical basis (columns) of the column span.
IntMatrix col_lattice_basis(const IntMatrix& gens);

bool col_lattice_contains(const IntMatrix& gens, const IntVec& v);
bool col_lattice_equal(const IntMatrix& a, const IntMatrix& b);

// Basis of {x : a x = 0}; the result spans a saturated sublattice.
IntMatrix kernel_cols(const IntMatrix& a);

// Exact solution of a x = b, if one exists.
std::optional<IntVec> solve_cols(const IntMatrix& a, const IntVec& b);

// Factorizes once and solves a x = b for many right-hand sides.
class ColSolver {
public:
    explicit ColSolver(const IntMatrix& a);
    std::optional<IntVec> solve(const IntVec& b) const;

private:
    SmithResult s_;
    int rows_, cols_;
};

// Solution x of a x = b modulo the column span of l (i.e. a x - b lies in
// colspan(l)).
std::optional<IntVec> solve_cols_mod(const IntMatrix& a, const IntMatrix& l, const IntVec& b);

// Basis of {x : a x in colspan(l)}.
IntMatrix preimage_cols(const IntMatrix& a, const IntMatrix& l);

// Basis of the saturation (colspan(gens) tensor Q) intersected with Z^n.
IntMatrix saturation_cols(const IntMatrix& gens);

// Inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

}  // namespace pi1
