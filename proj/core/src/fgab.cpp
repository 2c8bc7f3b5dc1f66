#include "pi1/fgab.hpp"

#include <algorithm>
#include <sstream>

namespace pi1 {

Int CanonicalForm::torsion_order() const {
    Int o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
}

std::string CanonicalForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : divisors) {
        if (!first) os << " x ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

CanonicalForm canon_from_divisors(int gens, const IntVec& divs) {
    CanonicalForm c;
    c.free_rank = gens - static_cast<int>(divs.size());
    for (const auto& d : divs)
        if (d >= 2) c.divisors.push_back(d);
    return c;
}

}  // namespace

FgAbGroup::FgAbGroup(int gens, IntMatrix relcols, CanonicalForm canon)
    : gens_(gens), relcols_(std::move(relcols)), canon_(std::move(canon)) {
    // relcols_ is a Hermite basis: each column has a pivot row, pivots
    // strictly increase. Cache them for fast membership reduction.
    pivot_cols_.reserve(relcols_.cols());
    for (int j = 0; j < relcols_.cols(); ++j) {
        int p = 0;
        while (p < gens_ && relcols_(p, j) == 0) ++p;
        pivot_cols_.push_back(p);
    }
}

FgAbGroup FgAbGroup::free_group(int n) {
    if (n < 0) throw InputError("negative generator count");
    CanonicalForm c;
    c.free_rank = n;
    return FgAbGroup(n, IntMatrix(n, 0), std::move(c));
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    IntMatrix rel(1, 1);
    rel(0, 0) = abs(n);
    return from_relation_cols(1, rel);
}

FgAbGroup FgAbGroup::from_relation_rows(int gens, const IntMatrix& rows) {
    if (rows.rows() > 0 && rows.cols() != gens)
        throw InputError("relation rows must have one column per generator");
    return from_relation_cols(gens, rows.transpose());
}

FgAbGroup FgAbGroup::from_relation_cols(int gens, const IntMatrix& cols) {
    if (cols.rows() != gens && cols.cols() > 0)
        throw InputError("relation columns must have one row per generator");
    IntMatrix basis = col_lattice_basis(cols.rows() == gens ? cols : IntMatrix(gens, 0));
    IntVec divs = smith_divisors(basis);
    return FgAbGroup(gens, std::move(basis), canon_from_divisors(gens, divs));
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    return from_relation_cols(a.gens_ + b.gens_, IntMatrix::block_diag(a.relcols_, b.relcols_));
}

FgAbGroup FgAbGroup::direct_power(const FgAbGroup& a, int m) {
    if (m < 0) throw InputError("negative power");
    IntMatrix rel = IntMatrix::block_diag_power(a.relcols_, m);
    // Invariant factors of a^m: each factor of a repeated m times; the
    // divisibility chain survives sorting, so no Smith run is needed.
    CanonicalForm c;
    c.free_rank = a.canon_.free_rank * m;
    for (const auto& d : a.canon_.divisors)
        for (int i = 0; i < m; ++i) c.divisors.push_back(d);
    std::sort(c.divisors.begin(), c.divisors.end());
    return FgAbGroup(a.gens_ * m, std::move(rel), std::move(c));
}

bool FgAbGroup::element_is_zero(const IntVec& v) const {
    if (static_cast<int>(v.size()) != gens_) throw InputError("element size mismatch");
    IntVec w = v;
    for (int j = 0; j < relcols_.cols(); ++j) {
        int p = pivot_cols_[j];
        if (w[p] == 0) continue;
        if (w[p] % relcols_(p, j) != 0) return false;
        Int q = w[p] / relcols_(p, j);
        for (int i = p; i < gens_; ++i)
            if (relcols_(i, j) != 0) w[i] -= q * relcols_(i, j);
    }
    return is_zero(w);
}

bool FgAbGroup::elements_equal(const IntVec& v, const IntVec& w) const {
    return element_is_zero(sub(v, w));
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
    return gens_ == other.gens_ && relcols_ == other.relcols_;
}

std::vector<std::pair<IntVec, Int>> FgAbGroup::torsion_generators() const {
    SnfOptions opts;
    opts.with_u = false;
    opts.with_v = false;
    opts.with_u_inv = true;
    SmithResult s = smith_normal_form(relcols_, opts);
    std::vector<std::pair<IntVec, Int>> out;
    for (int i = 0; i < s.rank; ++i) {
        if (s.d(i, i) < 2) continue;
        out.emplace_back(s.u_inv.col(i), s.d(i, i));
    }
    return out;
}

std::vector<IntVec> FgAbGroup::all_elements(const Int& max_order) const {
    if (canon_.free_rank != 0) throw InputError("cannot enumerate an infinite group");
    if (canon_.torsion_order() > max_order) throw InputError("group too large to enumerate");
    auto tors = torsion_generators();
    std::vector<IntVec> out;
    out.push_back(IntVec(gens_, Int(0)));
    for (const auto& [gen, ord] : tors) {
        std::vector<IntVec> next;
        next.reserve(out.size() * static_cast<size_t>(ord));
        for (const auto& base : out)
            for (Int k = 0; k < ord; ++k) next.push_back(add(base, scale(k, gen)));
        out = std::move(next);
    }
    return out;
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.gens() || matrix_.cols() != source_.gens())
        throw InputError("hom matrix shape mismatch: expected " + std::to_string(target_.gens()) +
                         "x" + std::to_string(source_.gens()));
    const IntMatrix& rel = source_.relation_cols();
    for (int j = 0; j < rel.cols(); ++j) {
        if (!target_.element_is_zero(matrix_.apply(rel.col(j))))
            throw InputError("hom is not well-defined: relation " + std::to_string(j) +
                             " does not map into the target relation lattice");
    }
}

AbHom AbHom::identity(const FgAbGroup& g) {
    return AbHom(g, g, IntMatrix::identity(g.gens()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return AbHom(source, target, IntMatrix(target.gens(), source.gens()));
}

bool AbHom::is_zero_hom() const {
    for (int j = 0; j < matrix_.cols(); ++j)
        if (!target_.element_is_zero(matrix_.col(j))) return false;
    return true;
}

bool AbHom::is_isomorphism() const {
    return kernel(*this).group.is_trivial() && cokernel(*this).group.is_trivial();
}

AbHom AbHom::inverse() const {
    IntMatrix inv(source_.gens(), target_.gens());
    for (int j = 0; j < target_.gens(); ++j) {
        IntVec e(target_.gens(), Int(0));
        e[j] = 1;
        auto x = solve_cols_mod(matrix_, target_.relation_cols(), e);
        if (!x) throw InputError("hom is not surjective, cannot invert");
        inv.set_col(j, *x);
    }
    return AbHom(target_, source_, std::move(inv));
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (!f.target_.same_presentation(g.source_))
        throw InputError("compose: middle groups do not match");
    return AbHom(f.source_, g.target_, g.matrix_ * f.matrix_);
}

bool hom_equal(const AbHom& f, const AbHom& g) {
    if (!f.source_.same_presentation(g.source_) || !f.target_.same_presentation(g.target_))
        return false;
    IntMatrix diff = f.matrix_ - g.matrix_;
    for (int j = 0; j < diff.cols(); ++j)
        if (!f.target_.element_is_zero(diff.col(j))) return false;
    return true;
}

IntMatrix image_lattice(const AbHom& f) {
    return IntMatrix::hcat(f.matrix(), f.target().relation_cols());
}

IntVec Subquotient::class_of(const IntVec& v) const {
    auto c = solve_cols(basis, v);
    if (!c) throw InternalError("element is not in the subgroup lattice");
    return *c;
}

Subquotient make_subquotient(int ambient, const IntMatrix& numer, const IntMatrix& denom) {
    Subquotient sq;
    sq.ambient = ambient;
    sq.basis = col_lattice_basis(numer);
    sq.denom = denom;
    int s = sq.basis.cols();
    IntMatrix rel(s, denom.cols());
    ColSolver solver(sq.basis);
    for (int j = 0; j < denom.cols(); ++j) {
        auto c = solver.solve(denom.col(j));
        if (!c) throw InputError("subquotient: denominator is not contained in the subgroup");
        rel.set_col(j, *c);
    }
    sq.group = FgAbGroup::from_relation_cols(s, rel);
    return sq;
}

Subgroup kernel(const AbHom& f) {
    IntMatrix pre = preimage_cols(f.matrix(), f.target().relation_cols());
    Subquotient sq = make_subquotient(f.source().gens(), pre, f.source().relation_cols());
    AbHom incl(sq.group, f.source(), sq.basis);
    return Subgroup{sq.group, std::move(incl)};
}

Quotient cokernel(const AbHom& f) {
    FgAbGroup g = FgAbGroup::from_relation_cols(f.target().gens(), image_lattice(f));
    AbHom proj(f.target(), g, IntMatrix::identity(f.target().gens()));
    return Quotient{std::move(g), std::move(proj)};
}

std::pair<FgAbGroup, FgAbGroup> derived_dual(const FgAbGroup& m) {
    // Free resolution 0 -> Z^s -> Z^g -> M -> 0 with the canonical relation
    // basis; apply Hom(-, Z) and take kernel / cokernel of the transpose.
    IntMatrix bt = m.relation_cols().transpose();
    AbHom restrict(FgAbGroup::free_group(bt.cols()), FgAbGroup::free_group(bt.rows()), bt);
    FgAbGroup hom_part = kernel(restrict).group;
    FgAbGroup ext_part = cokernel(restrict).group;
    return {hom_part, ext_part};
}

std::pair<FgAbGroup, FgAbGroup> derived_tensor(const FgAbGroup& m, const FgAbGroup& n) {
    int gm = m.gens(), gn = n.gens();
    // Presentation of the tensor product on generators e_i (x) f_j, indexed
    // i * gn + j.
    const IntMatrix& rm = m.relation_cols();
    const IntMatrix& rn = n.relation_cols();
    IntMatrix rel(gm * gn, rm.cols() * gn + gm * rn.cols());
    int c = 0;
    for (int k = 0; k < rm.cols(); ++k)
        for (int j = 0; j < gn; ++j, ++c)
            for (int i = 0; i < gm; ++i) rel(i * gn + j, c) = rm(i, k);
    for (int i = 0; i < gm; ++i)
        for (int k = 0; k < rn.cols(); ++k, ++c)
            for (int j = 0; j < gn; ++j) rel(i * gn + j, c) = rn(j, k);
    FgAbGroup tensor = FgAbGroup::from_relation_cols(gm * gn, rel);

    // Tor_1(M, N) = ker(Z^s (x) N -> Z^g (x) N) for 0 -> Z^s -> Z^g -> M -> 0.
    const IntMatrix& b = m.relation_cols();
    int s = b.cols();
    IntMatrix big(gm * gn, s * gn);
    for (int i = 0; i < gm; ++i)
        for (int k = 0; k < s; ++k)
            if (b(i, k) != 0)
                for (int j = 0; j < gn; ++j) big(i * gn + j, k * gn + j) = b(i, k);
    AbHom tensored(FgAbGroup::direct_power(n, s), FgAbGroup::direct_power(n, gm), big);
    FgAbGroup tor = kernel(tensored).group;
    return {tensor, tor};
}

}  // namespace pi1
