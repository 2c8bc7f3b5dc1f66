#include "pi1/root_datum.hpp"

#include <algorithm>
#include <map>

namespace pi1 {

namespace {

bool lex_positive(const IntVec& v) {
    for (const auto& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

// index structure for repeated vector lookups
class VecIndex {
public:
    explicit VecIndex(const std::vector<IntVec>& list) {
        for (size_t i = 0; i < list.size(); ++i) map_.emplace(list[i], static_cast<int>(i));
    }
    int find(const IntVec& v) const {
        auto it = map_.find(v);
        return it == map_.end() ? -1 : it->second;
    }

private:
    std::map<IntVec, int> map_;
};

int find_vector(const std::vector<IntVec>& list, const IntVec& v) {
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == v) return static_cast<int>(i);
    return -1;
}

}  // namespace

RootDatum::RootDatum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                     std::optional<GammaAction> gamma)
    : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)),
      gamma_(std::move(gamma)) {
    validate();
    find_simple_system();
}

void RootDatum::validate() {
    if (rank_ < 0) throw InputError("root datum rank must be nonnegative");
    if (roots_.size() != coroots_.size())
        throw InputError("roots and coroots must be index-paired");
    int m = static_cast<int>(roots_.size());
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(roots_[i].size()) != rank_ ||
            static_cast<int>(coroots_[i].size()) != rank_)
            throw InputError("root/coroot " + std::to_string(i) + " has wrong dimension");
        if (is_zero(roots_[i])) throw InputError("root " + std::to_string(i) + " is zero");
    }
    VecIndex root_index(roots_);
    VecIndex coroot_index(coroots_);
    for (int i = 0; i < m; ++i)
        if (root_index.find(roots_[i]) != i)
            throw InputError("duplicate root at index " + std::to_string(i));
    for (int i = 0; i < m; ++i) {
        Int p = dot(roots_[i], coroots_[i]);
        if (p != 2)
            throw InputError("pairing axiom violated at root " + std::to_string(i) +
                             ": <alpha, alpha^vee> = " + p.str());
    }
    for (int i = 0; i < m; ++i) {
        if (root_index.find(scale(-1, roots_[i])) < 0)
            throw InputError("root " + std::to_string(i) + " has no negative");
        int half = root_index.find(scale(2, roots_[i]));
        if (half >= 0 && half != i)
            throw InputError("root " + std::to_string(half) + " is twice root " +
                             std::to_string(i));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            IntVec refl = sub(roots_[j], scale(dot(roots_[j], coroots_[i]), roots_[i]));
            if (root_index.find(refl) < 0)
                throw InputError("reflection escape: s_" + std::to_string(i) +
                                 " applied to root " + std::to_string(j) +
                                 " leaves the root set");
            IntVec corefl = sub(coroots_[j], scale(dot(roots_[i], coroots_[j]), coroots_[i]));
            if (coroot_index.find(corefl) < 0)
                throw InputError("reflection escape: dual s_" + std::to_string(i) +
                                 " applied to coroot " + std::to_string(j) +
                                 " leaves the coroot set");
        }

    if (gamma_) {
        if (static_cast<int>(gamma_->char_action.size()) != gamma_->group.order())
            throw InputError("gamma action must provide one matrix per group element");
        GammaModule check(gamma_->group, FgAbGroup::free_group(rank_), gamma_->char_action);
        for (int g = 0; g < gamma_->group.order(); ++g) {
            const IntMatrix& a = gamma_->char_action[g];
            Int det = a.determinant();
            if (det != 1 && det != -1)
                throw InputError("gamma action matrix " + std::to_string(g) +
                                 " is not a lattice automorphism");
            IntMatrix b = cochar_action(g);
            for (int j = 0; j < m; ++j) {
                int t = root_index.find(a.apply(roots_[j]));
                if (t < 0)
                    throw InputError("gamma incompatibility: element " + std::to_string(g) +
                                     " does not permute the roots (root " + std::to_string(j) +
                                     ")");
                if (!(b.apply(coroots_[j]) == coroots_[t]))
                    throw InputError("gamma incompatibility: element " + std::to_string(g) +
                                     " moves coroot " + std::to_string(j) +
                                     " inconsistently with its root");
            }
        }
    }
}

void RootDatum::find_simple_system() {
    VecIndex root_index(roots_);
    std::vector<int> positives;
    for (size_t i = 0; i < roots_.size(); ++i)
        if (lex_positive(roots_[i])) positives.push_back(static_cast<int>(i));
    for (int i : positives) {
        bool decomposable = false;
        for (int j : positives) {
            if (j == i) continue;
            IntVec diff = sub(roots_[i], roots_[j]);
            if (is_zero(diff)) continue;
            if (lex_positive(diff) && root_index.find(diff) >= 0) {
                decomposable = true;  // roots_[i] = roots_[j] + diff, both positive
                break;
            }
        }
        if (!decomposable) simples_.push_back(i);
    }
    std::sort(simples_.begin(), simples_.end(),
              [&](int a, int b) { return roots_[a] < roots_[b]; });
}

IntMatrix RootDatum::root_cols() const {
    IntMatrix m(rank_, static_cast<int>(roots_.size()));
    for (size_t j = 0; j < roots_.size(); ++j) m.set_col(static_cast<int>(j), roots_[j]);
    return m;
}

IntMatrix RootDatum::coroot_cols() const {
    IntMatrix m(rank_, static_cast<int>(coroots_.size()));
    for (size_t j = 0; j < coroots_.size(); ++j) m.set_col(static_cast<int>(j), coroots_[j]);
    return m;
}

IntMatrix RootDatum::simple_root_cols() const {
    IntMatrix m(rank_, semisimple_rank());
    for (size_t j = 0; j < simples_.size(); ++j)
        m.set_col(static_cast<int>(j), roots_[simples_[j]]);
    return m;
}

IntMatrix RootDatum::simple_coroot_cols() const {
    IntMatrix m(rank_, semisimple_rank());
    for (size_t j = 0; j < simples_.size(); ++j)
        m.set_col(static_cast<int>(j), coroots_[simples_[j]]);
    return m;
}

IntMatrix RootDatum::cartan_matrix() const {
    int l = semisimple_rank();
    IntMatrix c(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) c(i, j) = dot(roots_[simples_[j]], coroots_[simples_[i]]);
    return c;
}

IntMatrix RootDatum::restriction_matrix() const {
    int l = semisimple_rank();
    IntMatrix r(l, rank_);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < rank_; ++j) r(i, j) = coroots_[simples_[i]][j];
    return r;
}

IntMatrix RootDatum::cochar_action(int g) const {
    if (!gamma_) throw InputError("datum has no gamma action");
    return inverse_unimodular(gamma_->char_action[g]).transpose();
}

bool RootDatum::operator==(const RootDatum& other) const {
    if (rank_ != other.rank_ || roots_ != other.roots_ || coroots_ != other.coroots_)
        return false;
    if (gamma_.has_value() != other.gamma_.has_value()) return false;
    if (gamma_ && !(gamma_->group == other.gamma_->group &&
                    gamma_->char_action == other.gamma_->char_action))
        return false;
    return true;
}

GroupInvariants fundamental_invariants(const RootDatum& d) {
    GroupInvariants inv;
    int n = d.rank();
    IntMatrix qv = d.coroot_cols();
    IntMatrix q = d.root_cols();
    inv.coroot_lattice = col_lattice_basis(qv);
    inv.root_lattice = col_lattice_basis(q);
    inv.pi1 = FgAbGroup::from_relation_cols(n, qv);
    inv.center_chars = FgAbGroup::from_relation_cols(n, q);

    IntMatrix sat = saturation_cols(qv);
    inv.cochar_torus_quotient = FgAbGroup::from_relation_cols(n, sat);

    AbHom restrict(FgAbGroup::free_group(n), FgAbGroup::free_group(d.semisimple_rank()),
                   d.restriction_matrix());
    inv.mu_star = cokernel(restrict).group;

    // mu(-1) = Hom(mu^*, Q/Z) realized as the torsion subgroup
    // sat(Q^vee)/Q^vee of pi1; its canonical form must match mu^*.
    Subquotient tors = make_subquotient(n, sat, inv.coroot_lattice);
    inv.mu_minus_one = tors.group;
    if (!(inv.mu_minus_one.canon() == inv.mu_star.canon()))
        throw InternalError("mu(-1) does not match the torsion of pi1");

    AbHom incl(tors.group, inv.pi1, tors.basis);
    AbHom proj(inv.pi1, inv.cochar_torus_quotient, IntMatrix::identity(n));
    inv.torsion_sequence = {AbHom::zero(FgAbGroup::zero(), tors.group), incl, proj,
                            AbHom::zero(inv.cochar_torus_quotient, FgAbGroup::zero())};
    if (!is_exact(inv.torsion_sequence))
        throw InternalError("mu(-1) -> pi1 -> torus cocharacters failed exactness");

    inv.is_semisimple = d.semisimple_rank() == n;
    inv.is_simply_connected = inv.is_semisimple && inv.pi1.is_trivial();
    inv.is_adjoint = inv.is_semisimple && inv.center_chars.is_trivial();

    if (d.gamma()) {
        std::vector<IntMatrix> act;
        for (int g = 0; g < d.gamma()->group.order(); ++g) act.push_back(d.cochar_action(g));
        inv.pi1_module = GammaModule(d.gamma()->group, inv.pi1, std::move(act));
    }
    return inv;
}

CoveringData simply_connected_cover(const RootDatum& d) {
    int l = d.semisimple_rank();
    IntMatrix j = d.simple_coroot_cols();
    IntMatrix res = d.restriction_matrix();
    ColSolver coroot_coords(j);
    std::vector<IntVec> roots, coroots;
    for (size_t i = 0; i < d.roots().size(); ++i) {
        roots.push_back(res.apply(d.roots()[i]));
        auto c = coroot_coords.solve(d.coroots()[i]);
        if (!c) throw InternalError("coroot does not lie in the lattice of simple coroots");
        coroots.push_back(*c);
    }
    std::optional<GammaAction> gamma;
    if (d.gamma()) {
        std::vector<IntMatrix> char_act;
        for (int g = 0; g < d.gamma()->group.order(); ++g) {
            IntMatrix b = d.cochar_action(g);
            IntMatrix cochar(l, l);
            for (int s = 0; s < l; ++s) {
                auto c = coroot_coords.solve(b.apply(j.col(s)));
                if (!c) throw InternalError("gamma action does not preserve the coroot lattice");
                cochar.set_col(s, *c);
            }
            char_act.push_back(inverse_unimodular(cochar).transpose());
        }
        gamma = GammaAction{d.gamma()->group, std::move(char_act)};
    }
    FgAbGroup mu = cokernel(AbHom(FgAbGroup::free_group(d.rank()), FgAbGroup::free_group(l), res))
                       .group;
    return CoveringData{RootDatum(l, std::move(roots), std::move(coroots), std::move(gamma)), j,
                        res, std::move(mu)};
}

RootDatum central_quotient(const RootDatum& d, const IntMatrix& numerators,
                           const Int& denominator) {
    int n = d.rank();
    if (denominator < 1) throw InputError("denominator must be positive");
    if (numerators.cols() > 0 && numerators.rows() != n)
        throw InputError("central quotient generators must live in the cocharacter lattice");
    for (size_t i = 0; i < d.roots().size(); ++i)
        for (int jc = 0; jc < numerators.cols(); ++jc)
            if (dot(d.roots()[i], numerators.col(jc)) % denominator != 0)
                throw InputError("not central: root " + std::to_string(i) +
                                 " pairs fractionally with generator " + std::to_string(jc));
    // basis of the enlarged cocharacter lattice, scaled by the denominator
    IntMatrix scaled = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) scaled(i, i) = denominator;
    IntMatrix h = col_lattice_basis(IntMatrix::hcat(scaled, numerators));
    ColSolver solver(h);

    std::vector<IntVec> roots, coroots;
    for (size_t i = 0; i < d.roots().size(); ++i) {
        IntVec r(n);
        for (int jc = 0; jc < n; ++jc) {
            Int p = dot(d.roots()[i], h.col(jc));
            if (p % denominator != 0) throw InternalError("root pairing not integral on quotient");
            r[jc] = p / denominator;
        }
        roots.push_back(std::move(r));
        auto c = solver.solve(scale(denominator, d.coroots()[i]));
        if (!c) throw InternalError("coroot missing from the enlarged lattice");
        coroots.push_back(*c);
    }
    std::optional<GammaAction> gamma;
    if (d.gamma()) {
        std::vector<IntMatrix> char_act;
        for (int g = 0; g < d.gamma()->group.order(); ++g) {
            IntMatrix b = d.cochar_action(g);
            IntMatrix cochar(n, n);
            for (int s = 0; s < n; ++s) {
                auto c = solver.solve(b.apply(h.col(s)));
                if (!c) throw InputError("gamma action does not preserve the quotient lattice");
                cochar.set_col(s, *c);
            }
            char_act.push_back(inverse_unimodular(cochar).transpose());
        }
        gamma = GammaAction{d.gamma()->group, std::move(char_act)};
    }
    return RootDatum(n, std::move(roots), std::move(coroots), std::move(gamma));
}

RootDatum product_datum(const RootDatum& a, const RootDatum& b) {
    std::vector<IntVec> roots, coroots;
    IntVec zb(b.rank(), Int(0)), za(a.rank(), Int(0));
    for (size_t i = 0; i < a.roots().size(); ++i) {
        roots.push_back(concat(a.roots()[i], zb));
        coroots.push_back(concat(a.coroots()[i], zb));
    }
    for (size_t i = 0; i < b.roots().size(); ++i) {
        roots.push_back(concat(za, b.roots()[i]));
        coroots.push_back(concat(za, b.coroots()[i]));
    }
    std::optional<GammaAction> gamma;
    if (a.gamma() && b.gamma()) {
        if (!(a.gamma()->group == b.gamma()->group))
            throw InputError("product of data with different acting groups");
        std::vector<IntMatrix> act;
        for (int g = 0; g < a.gamma()->group.order(); ++g)
            act.push_back(
                IntMatrix::block_diag(a.gamma()->char_action[g], b.gamma()->char_action[g]));
        gamma = GammaAction{a.gamma()->group, std::move(act)};
    } else if (a.gamma() || b.gamma()) {
        throw InputError("product requires gamma actions on both factors or neither");
    }
    return RootDatum(a.rank() + b.rank(), std::move(roots), std::move(coroots), std::move(gamma));
}

}  // namespace pi1
