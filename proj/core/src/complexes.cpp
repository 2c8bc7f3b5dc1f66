#include "pi1/complexes.hpp"

namespace pi1 {

Complex::Complex(int lowest_degree, std::vector<FgAbGroup> terms, std::vector<AbHom> diffs,
                 std::vector<std::vector<int>> blocks)
    : lowest_(lowest_degree), terms_(std::move(terms)), diffs_(std::move(diffs)),
      blocks_(std::move(blocks)) {
    if (terms_.empty()) throw InputError("complex needs at least one term");
    if (diffs_.size() + 1 != terms_.size())
        throw InputError("complex needs one differential per adjacent pair");
    if (blocks_.empty()) {
        for (const auto& t : terms_) blocks_.push_back({t.gens()});
    }
    if (blocks_.size() != terms_.size()) throw InputError("block metadata size mismatch");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (!diffs_[i].source().same_presentation(terms_[i]) ||
            !diffs_[i].target().same_presentation(terms_[i + 1]))
            throw InputError("differential " + std::to_string(i) + " does not match its terms");
    }
    for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
        IntMatrix dd = diffs_[i + 1].matrix() * diffs_[i].matrix();
        for (int j = 0; j < dd.cols(); ++j)
            if (!terms_[i + 2].element_is_zero(dd.col(j)))
                throw InputError("differentials do not compose to zero at degree " +
                                 std::to_string(lowest_ + static_cast<int>(i)));
    }
}

const AbHom* Complex::differential(int degree) const {
    int i = degree - lowest_;
    if (i < 0 || i >= static_cast<int>(diffs_.size())) return nullptr;
    return &diffs_[i];
}

Subquotient Complex::cohomology_data(int degree) const {
    if (!has_term(degree)) throw InputError("degree outside the complex support");
    const FgAbGroup& t = term(degree);
    const AbHom* out = differential(degree);
    const AbHom* in = degree > lowest_ ? differential(degree - 1) : nullptr;
    IntMatrix cocycles = out ? preimage_cols(out->matrix(), out->target().relation_cols())
                             : IntMatrix::identity(t.gens());
    IntMatrix boundaries =
        in ? IntMatrix::hcat(in->matrix(), t.relation_cols()) : t.relation_cols();
    return make_subquotient(t.gens(), cocycles, boundaries);
}

bool Complex::is_acyclic() const {
    for (int d = lowest_; d <= highest_degree(); ++d)
        if (!cohomology(d).is_trivial()) return false;
    return true;
}

Complex Complex::shifted(int n) const {
    std::vector<AbHom> diffs;
    for (const auto& d : diffs_) {
        IntMatrix m = d.matrix();
        if (n % 2 != 0) m = -m;
        diffs.emplace_back(d.source(), d.target(), std::move(m));
    }
    return Complex(lowest_ - n, terms_, std::move(diffs), blocks_);
}

namespace {

// Permutation sending a generator index to its position after the term's
// blocks are listed in reverse order.
std::vector<int> block_reversal_perm(const std::vector<int>& blocks) {
    int total = 0;
    for (int b : blocks) total += b;
    std::vector<int> perm(total);
    int old_off = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        int new_off = 0;
        for (size_t c = b + 1; c < blocks.size(); ++c) new_off += blocks[c];
        for (int i = 0; i < blocks[b]; ++i) perm[old_off + i] = new_off + i;
        old_off += blocks[b];
    }
    return perm;
}

}  // namespace

Complex Complex::dualized() const {
    for (const auto& t : terms_)
        if (t.relation_cols().cols() != 0) throw InputError("dual of non-lattice");
    int hi = highest_degree();
    int count = static_cast<int>(terms_.size());
    std::vector<FgAbGroup> terms(count, FgAbGroup::zero());
    std::vector<std::vector<int>> blocks(count);
    std::vector<std::vector<int>> perms(count);
    for (int i = 0; i < count; ++i) {
        // new degree -hi + i corresponds to old degree hi - i
        int old_idx = count - 1 - i;
        terms[i] = FgAbGroup::free_group(terms_[old_idx].gens());
        std::vector<int> rev(blocks_[old_idx].rbegin(), blocks_[old_idx].rend());
        blocks[i] = rev;
        perms[i] = block_reversal_perm(blocks_[old_idx]);
    }
    std::vector<AbHom> diffs;
    for (int i = 0; i + 1 < count; ++i) {
        // dual differential at new index i: transpose of old differential
        // (old degree hi-i-1 -> hi-i), conjugated by the block reversals
        int old_d = count - 2 - i;  // index into diffs_
        const IntMatrix& e = diffs_[old_d].matrix();
        IntMatrix m(e.cols(), e.rows());
        const auto& pr = perms[i + 1];      // dual target = old source side
        const auto& pc = perms[i];          // dual source = old target side
        for (int r = 0; r < e.rows(); ++r)
            for (int c = 0; c < e.cols(); ++c)
                if (e(r, c) != 0) m(pr[c], pc[r]) = e(r, c);
        diffs.emplace_back(terms[i], terms[i + 1], std::move(m));
    }
    return Complex(-hi, std::move(terms), std::move(diffs), std::move(blocks));
}

bool Complex::structurally_equal(const Complex& other) const {
    if (lowest_ != other.lowest_ || terms_.size() != other.terms_.size()) return false;
    if (blocks_ != other.blocks_) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!terms_[i].same_presentation(other.terms_[i])) return false;
    for (size_t i = 0; i < diffs_.size(); ++i)
        if (!(diffs_[i].matrix() == other.diffs_[i].matrix())) return false;
    return true;
}

TwoTermComplex::TwoTermComplex()
    : lower(), upper(), differential(AbHom::zero(FgAbGroup::zero(), FgAbGroup::zero())) {}

TwoTermComplex make_two_term(int base_degree, const GammaModule& lower, const GammaModule& upper,
                             const IntMatrix& differential) {
    AbHom d(lower.carrier(), upper.carrier(), differential);
    make_equivariant_hom(lower, upper, d);  // validates
    TwoTermComplex c;
    c.base_degree = base_degree;
    c.lower = lower;
    c.upper = upper;
    c.differential = std::move(d);
    return c;
}

ComplexMorphism make_complex_morphism(const TwoTermComplex& source, const TwoTermComplex& target,
                                      const IntMatrix& lower_map, const IntMatrix& upper_map) {
    if (source.base_degree != target.base_degree)
        throw InputError("complex morphism requires equal base degrees");
    AbHom fl(source.lower.carrier(), target.lower.carrier(), lower_map);
    AbHom fu(source.upper.carrier(), target.upper.carrier(), upper_map);
    make_equivariant_hom(source.lower, target.lower, fl);
    make_equivariant_hom(source.upper, target.upper, fu);
    AbHom path1 = compose(fu, source.differential);
    AbHom path2 = compose(target.differential, fl);
    if (!hom_equal(path1, path2))
        throw InputError("complex morphism does not commute with the differentials");
    return ComplexMorphism{source, target, std::move(fl), std::move(fu)};
}

ComplexMorphism identity_morphism(const TwoTermComplex& c) {
    return make_complex_morphism(c, c, IntMatrix::identity(c.lower.carrier().gens()),
                                 IntMatrix::identity(c.upper.carrier().gens()));
}

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
    return make_complex_morphism(f.source, g.target, g.lower_map.matrix() * f.lower_map.matrix(),
                                 g.upper_map.matrix() * f.upper_map.matrix());
}

Complex two_term_as_complex(const TwoTermComplex& c) {
    return Complex(c.base_degree, {c.lower.carrier(), c.upper.carrier()}, {c.differential});
}

Complex cone(const ComplexMorphism& f) {
    int d = f.source.base_degree;
    const FgAbGroup& c0 = f.source.lower.carrier();
    const FgAbGroup& c1 = f.source.upper.carrier();
    const FgAbGroup& d0 = f.target.lower.carrier();
    const FgAbGroup& d1 = f.target.upper.carrier();
    FgAbGroup mid = FgAbGroup::direct_sum(c1, d0);
    AbHom first(c0, mid,
                IntMatrix::vcat(-f.source.differential.matrix(), f.lower_map.matrix()));
    AbHom second(mid, d1, IntMatrix::hcat(f.upper_map.matrix(), f.target.differential.matrix()));
    return Complex(d - 1, {c0, mid, d1}, {std::move(first), std::move(second)},
                   {{c0.gens()}, {c1.gens(), d0.gens()}, {d1.gens()}});
}

TwoTermComplex dual_complex(const TwoTermComplex& c) {
    return make_two_term(-(c.base_degree + 1), c.upper.dual(), c.lower.dual(),
                         c.differential.matrix().transpose());
}

ComplexMorphism dual_morphism(const ComplexMorphism& f) {
    // The components are negated transposes; this is the sign choice that
    // makes cone(f).dualized() literally equal cone(dual_morphism(f))[-1].
    return make_complex_morphism(dual_complex(f.target), dual_complex(f.source),
                                 -f.upper_map.matrix().transpose(),
                                 -f.lower_map.matrix().transpose());
}

AbHom induced_cohomology_map(const Complex& a, const Complex& b,
                             const std::vector<IntMatrix>& maps, int degree) {
    if (a.lowest_degree() != b.lowest_degree())
        throw InputError("induced map requires aligned complexes");
    Subquotient sa = a.cohomology_data(degree);
    Subquotient sb = b.cohomology_data(degree);
    const IntMatrix& f = maps[degree - a.lowest_degree()];
    IntMatrix mat(sb.group.gens(), sa.group.gens());
    ColSolver solver(sb.basis);
    for (int j = 0; j < sa.basis.cols(); ++j) {
        auto c = solver.solve(f.apply(sa.basis.col(j)));
        if (!c) throw InternalError("cocycle image is not a cocycle");
        mat.set_col(j, *c);
    }
    return AbHom(sa.group, sb.group, std::move(mat));
}

bool is_quasi_isomorphism(const ComplexMorphism& f) {
    bool via_cone = cone(f).is_acyclic();

    Complex src = two_term_as_complex(f.source);
    Complex tgt = two_term_as_complex(f.target);
    std::vector<IntMatrix> maps = {f.lower_map.matrix(), f.upper_map.matrix()};
    int d = f.source.base_degree;
    bool via_maps = induced_cohomology_map(src, tgt, maps, d).is_isomorphism() &&
                    induced_cohomology_map(src, tgt, maps, d + 1).is_isomorphism();

    if (via_cone != via_maps)
        throw InternalError("cone acyclicity and induced-map tests disagree");
    return via_cone;
}

namespace {

int int_pow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

Complex bar_total_complex(const TwoTermComplex& c, int maxp) {
    int d = c.base_degree;
    int n = c.lower.group().order();
    std::vector<FgAbGroup> terms;
    std::vector<std::vector<int>> blocks;
    std::vector<FgAbGroup> lows, ups;
    for (int t = d; t <= d + 1 + maxp; ++t) {
        int p = t - d;      // bar degree in the lower column
        int q = t - d - 1;  // bar degree in the upper column
        FgAbGroup low = (p >= 0 && p <= maxp) ? bar_cochain_group(c.lower, p) : FgAbGroup::zero();
        FgAbGroup up = (q >= 0 && q <= maxp) ? bar_cochain_group(c.upper, q) : FgAbGroup::zero();
        terms.push_back(FgAbGroup::direct_sum(low, up));
        blocks.push_back({low.gens(), up.gens()});
        lows.push_back(low);
        ups.push_back(up);
    }
    std::vector<AbHom> diffs;
    for (int t = d; t < d + 1 + maxp; ++t) {
        int i = t - d;
        int p = t - d, q = t - d - 1;
        IntMatrix m(terms[i + 1].gens(), terms[i].gens());
        int dst_up_off = lows[i + 1].gens();
        int src_up_off = lows[i].gens();
        auto paste = [&](int r0, int c0, const IntMatrix& blk, int sign) {
            for (int r = 0; r < blk.rows(); ++r)
                for (int cc = 0; cc < blk.cols(); ++cc)
                    if (blk(r, cc) != 0) m(r0 + r, c0 + cc) = sign * blk(r, cc);
        };
        if (lows[i].gens() > 0 && lows[i + 1].gens() > 0)
            paste(0, 0, bar_differential_matrix(c.lower, p), +1);
        if (lows[i].gens() > 0 && ups[i + 1].gens() > 0)
            paste(dst_up_off, 0,
                  IntMatrix::block_diag_power(c.differential.matrix(), int_pow(n, p)),
                  p % 2 == 0 ? +1 : -1);
        if (ups[i].gens() > 0 && ups[i + 1].gens() > 0)
            paste(dst_up_off, src_up_off, bar_differential_matrix(c.upper, q), +1);
        diffs.emplace_back(terms[i], terms[i + 1], std::move(m));
    }
    return Complex(d, std::move(terms), std::move(diffs), std::move(blocks));
}

FgAbGroup hypercohomology(const TwoTermComplex& c, int degree) {
    int d = c.base_degree;
    if (degree < d || degree > d + 3) throw InputError("unsupported degree");
    int maxp = degree - d + 1;
    return bar_total_complex(c, maxp).cohomology(degree);
}

std::vector<AbHom> les_of_complexes(const Complex& a, const Complex& b, const Complex& c,
                                    const std::vector<IntMatrix>& incl,
                                    const std::vector<IntMatrix>& proj, int lo, int hi) {
    if (a.lowest_degree() != b.lowest_degree() || b.lowest_degree() != c.lowest_degree())
        throw InputError("les_of_complexes requires aligned complexes");
    int base = a.lowest_degree();

    std::vector<Subquotient> ha, hb, hc;
    for (int nd = lo; nd <= hi; ++nd) {
        ha.push_back(a.cohomology_data(nd));
        hb.push_back(b.cohomology_data(nd));
        hc.push_back(c.cohomology_data(nd));
    }
    auto HA = [&](int nd) -> const Subquotient& { return ha[nd - lo]; };
    auto HB = [&](int nd) -> const Subquotient& { return hb[nd - lo]; };
    auto HC = [&](int nd) -> const Subquotient& { return hc[nd - lo]; };

    auto push_map = [&](const Subquotient& from, const Subquotient& to, const IntMatrix& f) {
        IntMatrix mat(to.group.gens(), from.group.gens());
        ColSolver solver(to.basis);
        for (int j = 0; j < from.basis.cols(); ++j) {
            auto x = solver.solve(f.apply(from.basis.col(j)));
            if (!x) throw InternalError("les: induced image is not a cocycle");
            mat.set_col(j, *x);
        }
        return AbHom(from.group, to.group, std::move(mat));
    };

    std::vector<AbHom> out;
    out.push_back(AbHom::zero(FgAbGroup::zero(), HA(lo).group));
    for (int nd = lo; nd <= hi; ++nd) {
        int i = nd - base;
        out.push_back(push_map(HA(nd), HB(nd), incl[i]));
        out.push_back(push_map(HB(nd), HC(nd), proj[i]));
        if (nd == hi) break;
        // connecting map: lift through proj, apply the differential, pull
        // back through incl
        const Subquotient& sc = HC(nd);
        const Subquotient& sa = HA(nd + 1);
        IntMatrix mat(sa.group.gens(), sc.group.gens());
        const AbHom* db = b.differential(nd);
        if (!db) throw InputError("les: missing differential for the connecting map");
        ColSolver basis_solver(sa.basis);
        for (int j = 0; j < sc.basis.cols(); ++j) {
            auto y = solve_cols_mod(proj[i], c.term(nd).relation_cols(), sc.basis.col(j));
            if (!y) throw InternalError("les: projection is not surjective");
            IntVec dy = db->apply(*y);
            auto w = solve_cols_mod(incl[i + 1], b.term(nd + 1).relation_cols(), dy);
            if (!w) throw InternalError("les: chase element missed the included subcomplex");
            auto cls = basis_solver.solve(*w);
            if (!cls) throw InternalError("les: connecting image is not a cocycle");
            mat.set_col(j, *cls);
        }
        out.push_back(AbHom(sc.group, sa.group, std::move(mat)));
    }
    return out;
}

namespace {

IntMatrix random_small_matrix(Rng& rng, int rows, int cols, int bound) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.range(-bound, bound);
    return m;
}

IntMatrix random_unimodular_matrix(Rng& rng, int n) {
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 2 * n + 2; ++step) {
        int i = static_cast<int>(rng.below(n));
        int j = static_cast<int>(rng.below(n));
        if (i != j) u.add_row_multiple(i, j, Int(rng.range(-1, 1)));
    }
    return u;
}

TwoTermComplex free_two_term(int r0, int r1, const IntMatrix& d) {
    return make_two_term(0, GammaModule::over_trivial_group(FgAbGroup::free_group(r0)),
                         GammaModule::over_trivial_group(FgAbGroup::free_group(r1)), d);
}

}  // namespace

ComplexMorphism random_quasi_isomorphism(Rng& rng, int max_rank) {
    int r0 = 1 + static_cast<int>(rng.below(std::max(1, max_rank - 2)));
    int r1 = 1 + static_cast<int>(rng.below(std::max(1, max_rank - 2)));
    TwoTermComplex base = free_two_term(r0, r1, random_small_matrix(rng, r1, r0, 3));
    ComplexMorphism f = identity_morphism(base);

    int moves = 1 + static_cast<int>(rng.below(4));
    for (int step = 0; step < moves; ++step) {
        switch (rng.below(4)) {
            case 0: {  // source basis change
                const TwoTermComplex& s = f.source;
                int n0 = s.lower.carrier().gens(), n1 = s.upper.carrier().gens();
                IntMatrix u0 = random_unimodular_matrix(rng, n0);
                IntMatrix u1 = random_unimodular_matrix(rng, n1);
                TwoTermComplex s2 = free_two_term(
                    n0, n1, inverse_unimodular(u1) * s.differential.matrix() * u0);
                ComplexMorphism g = make_complex_morphism(s2, s, u0, u1);
                f = compose(f, g);
                break;
            }
            case 1: {  // target basis change
                const TwoTermComplex& t = f.target;
                int n0 = t.lower.carrier().gens(), n1 = t.upper.carrier().gens();
                IntMatrix u0 = random_unimodular_matrix(rng, n0);
                IntMatrix u1 = random_unimodular_matrix(rng, n1);
                TwoTermComplex t2 = free_two_term(
                    n0, n1, u1 * t.differential.matrix() * inverse_unimodular(u0));
                ComplexMorphism g = make_complex_morphism(t, t2, u0, u1);
                f = compose(g, f);
                break;
            }
            case 2: {  // stabilize the source by Z = Z, extend by zero
                const TwoTermComplex& s = f.source;
                if (s.lower.carrier().gens() >= max_rank || s.upper.carrier().gens() >= max_rank)
                    break;
                TwoTermComplex s2 = free_two_term(
                    s.lower.carrier().gens() + 1, s.upper.carrier().gens() + 1,
                    IntMatrix::block_diag(s.differential.matrix(), IntMatrix::identity(1)));
                IntMatrix l(f.target.lower.carrier().gens(), s2.lower.carrier().gens());
                IntMatrix u(f.target.upper.carrier().gens(), s2.upper.carrier().gens());
                for (int i = 0; i < l.rows(); ++i)
                    for (int j = 0; j + 1 < l.cols(); ++j) l(i, j) = f.lower_map.matrix()(i, j);
                for (int i = 0; i < u.rows(); ++i)
                    for (int j = 0; j + 1 < u.cols(); ++j) u(i, j) = f.upper_map.matrix()(i, j);
                f = make_complex_morphism(s2, f.target, l, u);
                break;
            }
            default: {  // stabilize the target by Z = Z
                const TwoTermComplex& t = f.target;
                if (t.lower.carrier().gens() >= max_rank || t.upper.carrier().gens() >= max_rank)
                    break;
                TwoTermComplex t2 = free_two_term(
                    t.lower.carrier().gens() + 1, t.upper.carrier().gens() + 1,
                    IntMatrix::block_diag(t.differential.matrix(), IntMatrix::identity(1)));
                IntMatrix l(t2.lower.carrier().gens(), f.source.lower.carrier().gens());
                IntMatrix u(t2.upper.carrier().gens(), f.source.upper.carrier().gens());
                for (int i = 0; i + 1 < l.rows(); ++i)
                    for (int j = 0; j < l.cols(); ++j) l(i, j) = f.lower_map.matrix()(i, j);
                for (int i = 0; i + 1 < u.rows(); ++i)
                    for (int j = 0; j < u.cols(); ++j) u(i, j) = f.upper_map.matrix()(i, j);
                f = make_complex_morphism(f.source, t2, l, u);
                break;
            }
        }
    }
    return f;
}

std::vector<AbHom> cohomology_long_sequence(const EquivariantHom& incl,
                                            const EquivariantHom& proj) {
    if (!(incl.source.group() == proj.target.group()))
        throw InputError("long exact sequence requires one acting group");
    if (!incl.target.carrier().same_presentation(proj.source.carrier()))
        throw InputError("long exact sequence: middle modules do not match");
    auto ses = is_exact({AbHom::zero(FgAbGroup::zero(), incl.source.carrier()), incl.hom,
                         proj.hom, AbHom::zero(proj.target.carrier(), FgAbGroup::zero())});
    if (!ses)
        throw InputError("input sequence of modules is not short exact (node " +
                         std::to_string(ses.failing_node) + ": " + ses.reason + ")");

    const int maxp = 3;
    int n = incl.source.group().order();
    auto bar_complex = [&](const GammaModule& m) {
        std::vector<FgAbGroup> terms;
        std::vector<AbHom> diffs;
        for (int p = 0; p <= maxp; ++p) terms.push_back(bar_cochain_group(m, p));
        for (int p = 0; p < maxp; ++p)
            diffs.emplace_back(terms[p], terms[p + 1], bar_differential_matrix(m, p));
        return Complex(0, std::move(terms), std::move(diffs));
    };
    Complex ca = bar_complex(incl.source);
    Complex cb = bar_complex(incl.target);
    Complex cc = bar_complex(proj.target);
    std::vector<IntMatrix> incls, projs;
    for (int p = 0; p <= maxp; ++p) {
        int blocks = int_pow(n, p);
        incls.push_back(IntMatrix::block_diag_power(incl.hom.matrix(), blocks));
        projs.push_back(IntMatrix::block_diag_power(proj.hom.matrix(), blocks));
    }
    return les_of_complexes(ca, cb, cc, incls, projs, 0, 2);
}

}  // namespace pi1
