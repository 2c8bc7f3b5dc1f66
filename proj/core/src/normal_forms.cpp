#include "pi1/normal_forms.hpp"

namespace pi1 {

IntVec SmithResult::divisors() const {
    IntVec out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

namespace {

struct SnfState {
    IntMatrix a;
    IntMatrix u, v, u_inv, v_inv;
    SnfOptions opts;

    void swap_rows(int i, int j) {
        if (i == j) return;
        a.swap_rows(i, j);
        if (opts.with_u) u.swap_rows(i, j);
        if (opts.with_u_inv) u_inv.swap_cols(i, j);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        a.swap_cols(i, j);
        if (opts.with_v) v.swap_cols(i, j);
        if (opts.with_v_inv) v_inv.swap_rows(i, j);
    }
    void negate_row(int i) {
        a.negate_row(i);
        if (opts.with_u) u.negate_row(i);
        if (opts.with_u_inv) u_inv.negate_col(i);
    }
    // row dst += c * row src
    void add_row(int dst, int src, const Int& c) {
        if (c == 0) return;
        a.add_row_multiple(dst, src, c);
        if (opts.with_u) u.add_row_multiple(dst, src, c);
        if (opts.with_u_inv) u_inv.add_col_multiple(src, dst, -c);
    }
    // col dst += c * col src
    void add_col(int dst, int src, const Int& c) {
        if (c == 0) return;
        a.add_col_multiple(dst, src, c);
        if (opts.with_v) v.add_col_multiple(dst, src, c);
        if (opts.with_v_inv) v_inv.add_row_multiple(src, dst, -c);
    }
};

// Pivot of smallest absolute value in the active submatrix starting at t;
// ties: leftmost column first, then topmost row.
bool find_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            const Int& x = a(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best || (ax == best && (j < pj || (j == pj && i < pi)))) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input, const SnfOptions& opts) {
    SnfState s;
    s.a = input;
    s.opts = opts;
    int m = input.rows(), n = input.cols();
    if (opts.with_u) s.u = IntMatrix::identity(m);
    if (opts.with_u_inv) s.u_inv = IntMatrix::identity(m);
    if (opts.with_v) s.v = IntMatrix::identity(n);
    if (opts.with_v_inv) s.v_inv = IntMatrix::identity(n);

    int t = 0;
    int limit = std::min(m, n);
    while (t < limit) {
        int pi, pj;
        if (!find_pivot(s.a, t, pi, pj)) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        if (s.a(t, t) < 0) s.negate_row(t);

        bool clean = true;
        // Reduce column entries below the pivot; non-divisible entries leave
        // a smaller remainder, forcing another pivot round.
        for (int i = t + 1; i < m; ++i) {
            if (s.a(i, t) == 0) continue;
            Int q = s.a(i, t) / s.a(t, t);
            s.add_row(i, t, -q);
            if (s.a(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            if (s.a(t, j) == 0) continue;
            Int q = s.a(t, j) / s.a(t, t);
            s.add_col(j, t, -q);
            if (s.a(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // Pivot must divide the rest of the submatrix for the divisibility
        // chain; if not, merge an offending row into row t and redo.
        bool divides_all = true;
        for (int i = t + 1; i < m && divides_all; ++i)
            for (int j = t + 1; j < n; ++j)
                if (s.a(i, j) % s.a(t, t) != 0) {
                    s.add_row(t, i, 1);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        ++t;
    }

    SmithResult r;
    r.rank = t;
    r.d = std::move(s.a);
    r.u = std::move(s.u);
    r.v = std::move(s.v);
    r.u_inv = std::move(s.u_inv);
    r.v_inv = std::move(s.v_inv);
    return r;
}

IntVec smith_divisors(const IntMatrix& a) {
    SnfOptions light;
    light.with_u = light.with_v = false;
    return smith_normal_form(a, light).divisors();
}

IntMatrix hermite_rows(const IntMatrix& input) {
    IntMatrix a = input;
    int m = a.rows(), n = a.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // Gcd-reduce the entries of column c in rows >= r down to one.
        for (;;) {
            int piv = -1;
            Int best = 0;
            int nonzero = 0;
            for (int i = r; i < m; ++i) {
                if (a(i, c) == 0) continue;
                ++nonzero;
                Int ax = abs(a(i, c));
                if (piv < 0 || ax < best) {
                    piv = i;
                    best = ax;
                }
            }
            if (piv < 0) break;  // column empty
            a.swap_rows(r, piv);
            if (a(r, c) < 0) a.negate_row(r);
            if (nonzero == 1) break;
            for (int i = r + 1; i < m; ++i) {
                if (a(i, c) == 0) continue;
                Int q = a(i, c) / a(r, c);
                a.add_row_multiple(i, r, -q);
            }
        }
        if (a(r, c) == 0) continue;
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Int q = a(i, c) / a(r, c);
            Int rem = a(i, c) - q * a(r, c);
            if (rem < 0) q -= 1;
            a.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return a.submatrix(0, 0, r, n);
}

IntMatrix col_lattice_basis(const IntMatrix& gens) {
    return hermite_rows(gens.transpose()).transpose();
}

bool col_lattice_contains(const IntMatrix& gens, const IntVec& v) {
    IntMatrix h = hermite_rows(gens.transpose());
    IntVec w = v;
    int n = static_cast<int>(w.size());
    for (int r = 0; r < h.rows(); ++r) {
        int c = 0;
        while (c < n && h(r, c) == 0) ++c;
        if (c == n) continue;
        if (w[c] == 0) continue;
        if (w[c] % h(r, c) != 0) return false;
        Int q = w[c] / h(r, c);
        for (int j = c; j < n; ++j) w[j] -= q * h(r, j);
    }
    return is_zero(w);
}

bool col_lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return false;
    return hermite_rows(a.transpose()) == hermite_rows(b.transpose());
}

IntMatrix kernel_cols(const IntMatrix& a) {
    SnfOptions opts;
    opts.with_u = false;
    opts.with_v = true;
    SmithResult s = smith_normal_form(a, opts);
    int n = a.cols();
    IntMatrix out(n, n - s.rank);
    for (int j = s.rank; j < n; ++j)
        for (int i = 0; i < n; ++i) out(i, j - s.rank) = s.v(i, j);
    return out;
}

ColSolver::ColSolver(const IntMatrix& a)
    : s_(smith_normal_form(a)), rows_(a.rows()), cols_(a.cols()) {}

std::optional<IntVec> ColSolver::solve(const IntVec& b) const {
    IntVec ub = s_.u.apply(b);
    IntVec y(cols_, Int(0));
    for (int i = 0; i < rows_; ++i) {
        if (i < s_.rank) {
            if (ub[i] % s_.d(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s_.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s_.v.apply(y);
}

std::optional<IntVec> solve_cols(const IntMatrix& a, const IntVec& b) {
    return ColSolver(a).solve(b);
}

std::optional<IntVec> solve_cols_mod(const IntMatrix& a, const IntMatrix& l, const IntVec& b) {
    if (l.cols() == 0) return solve_cols(a, b);
    auto sol = solve_cols(IntMatrix::hcat(a, l), b);
    if (!sol) return std::nullopt;
    return IntVec(sol->begin(), sol->begin() + a.cols());
}

IntMatrix preimage_cols(const IntMatrix& a, const IntMatrix& l) {
    if (l.cols() == 0) return kernel_cols(a);
    IntMatrix k = kernel_cols(IntMatrix::hcat(a, -l));
    // Project the kernel of [a | -l] onto the x-coordinates.
    IntMatrix proj = k.submatrix(0, 0, a.cols(), k.cols());
    return col_lattice_basis(proj);
}

IntMatrix saturation_cols(const IntMatrix& gens) {
    SnfOptions opts;
    opts.with_u = false;
    opts.with_v = false;
    opts.with_u_inv = true;
    SmithResult s = smith_normal_form(gens, opts);
    IntMatrix out(gens.rows(), s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < gens.rows(); ++i) out(i, j) = s.u_inv(i, j);
    return col_lattice_basis(out);
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    int n = u.rows();
    if (u.cols() != n) throw InputError("inverse of non-square matrix");
    IntMatrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        IntVec e(n, Int(0));
        e[j] = 1;
        auto x = solve_cols(u, e);
        if (!x) throw InputError("matrix is not invertible over the integers");
        inv.set_col(j, *x);
    }
    return inv;
}

}  // namespace pi1
