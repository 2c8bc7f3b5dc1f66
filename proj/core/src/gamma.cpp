#include "pi1/gamma.hpp"

#include <algorithm>
#include <numeric>

namespace pi1 {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    order_ = static_cast<int>(table_.size());
    if (order_ == 0) throw InputError("group table is empty");
    if (order_ > kMaxOrder) throw InputError("group order exceeds the supported cap of 48");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != order_) throw InputError("group table is not square");
        for (int v : row)
            if (v < 0 || v >= order_) throw InputError("group table entry out of range");
    }
    for (int e = 0; e < order_; ++e) {
        bool is_id = true;
        for (int a = 0; a < order_ && is_id; ++a)
            if (table_[e][a] != a || table_[a][e] != a) is_id = false;
        if (is_id) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw InputError("group table has no identity element");
    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0) throw InputError("group table has a non-invertible element");
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InputError("group table is not associative");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw InputError("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4) throw InputError("symmetric group supported for n <= 4");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        for (int i = 0; i < m; ++i)
            if (perms[i] == q) return i;
        throw InternalError("permutation index lookup failed");
    };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    if (n > kMaxOrder) throw InputError("product group exceeds the supported cap of 48");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup(std::move(t));
}

GammaModule::GammaModule()
    : group_(FiniteGroup::trivial()), carrier_(FgAbGroup::zero()),
      action_{IntMatrix::identity(0)} {}

GammaModule::GammaModule(FiniteGroup group, FgAbGroup carrier, std::vector<IntMatrix> action)
    : group_(std::move(group)), carrier_(std::move(carrier)), action_(std::move(action)) {
    if (static_cast<int>(action_.size()) != group_.order())
        throw InputError("action must provide one matrix per group element");
    std::vector<AbHom> homs;
    homs.reserve(action_.size());
    for (const auto& m : action_) homs.emplace_back(carrier_, carrier_, m);  // well-definedness
    if (!hom_equal(homs[group_.identity()], AbHom::identity(carrier_)))
        throw InputError("action of the identity is not the identity map");
    for (int a = 0; a < group_.order(); ++a)
        for (int b = 0; b < group_.order(); ++b)
            if (!hom_equal(homs[group_.mul(a, b)], compose(homs[a], homs[b])))
                throw InputError("action is not multiplicative at elements " + std::to_string(a) +
                                 ", " + std::to_string(b));
}

GammaModule GammaModule::with_trivial_action(const FiniteGroup& g, const FgAbGroup& carrier) {
    std::vector<IntMatrix> act(g.order(), IntMatrix::identity(carrier.gens()));
    return GammaModule(g, carrier, std::move(act));
}

GammaModule GammaModule::over_trivial_group(const FgAbGroup& carrier) {
    return with_trivial_action(FiniteGroup::trivial(), carrier);
}

GammaModule GammaModule::permutation(const FiniteGroup& g,
                                     const std::vector<std::vector<int>>& perms) {
    if (static_cast<int>(perms.size()) != g.order())
        throw InputError("permutation action must cover every group element");
    int k = perms.empty() ? 0 : static_cast<int>(perms[0].size());
    std::vector<IntMatrix> act;
    for (const auto& p : perms) {
        IntMatrix m(k, k);
        for (int i = 0; i < k; ++i) m(p[i], i) = 1;
        act.push_back(std::move(m));
    }
    return GammaModule(g, FgAbGroup::free_group(k), std::move(act));
}

GammaModule GammaModule::direct_sum(const GammaModule& other) const {
    if (!(group_ == other.group_)) throw InputError("direct sum of modules over different groups");
    std::vector<IntMatrix> act;
    for (int g = 0; g < group_.order(); ++g)
        act.push_back(IntMatrix::block_diag(action_[g], other.action_[g]));
    return GammaModule(group_, FgAbGroup::direct_sum(carrier_, other.carrier_), std::move(act));
}

GammaModule GammaModule::direct_power(int m) const {
    std::vector<IntMatrix> act;
    for (int g = 0; g < group_.order(); ++g)
        act.push_back(IntMatrix::block_diag_power(action_[g], m));
    return GammaModule(group_, FgAbGroup::direct_power(carrier_, m), std::move(act));
}

GammaModule GammaModule::dual() const {
    if (carrier_.relation_cols().cols() != 0) throw InputError("dual of non-lattice");
    std::vector<IntMatrix> act;
    for (int g = 0; g < group_.order(); ++g) act.push_back(action_[group_.inv(g)].transpose());
    return GammaModule(group_, carrier_, std::move(act));
}

EquivariantHom make_equivariant_hom(const GammaModule& m, const GammaModule& n, const AbHom& f) {
    if (!(m.group() == n.group()))
        throw InputError("equivariant hom requires the same acting group");
    if (!f.source().same_presentation(m.carrier()) || !f.target().same_presentation(n.carrier()))
        throw InputError("hom does not match the module carriers");
    for (int g = 0; g < m.group().order(); ++g) {
        AbHom lhs(m.carrier(), n.carrier(), f.matrix() * m.action_matrix(g));
        AbHom rhs(m.carrier(), n.carrier(), n.action_matrix(g) * f.matrix());
        if (!hom_equal(lhs, rhs))
            throw InputError("hom is not equivariant at group element " + std::to_string(g));
    }
    return EquivariantHom{m, n, f};
}

GammaSubgroup equivariant_kernel(const EquivariantHom& f) {
    Subgroup k = kernel(f.hom);
    const IntMatrix& basis = k.inclusion.matrix();
    std::vector<IntMatrix> act;
    for (int g = 0; g < f.source.group().order(); ++g) {
        IntMatrix moved = f.source.action_matrix(g) * basis;
        IntMatrix coords(k.group.gens(), k.group.gens());
        for (int j = 0; j < k.group.gens(); ++j) {
            auto c = solve_cols(basis, moved.col(j));
            if (!c) throw InternalError("kernel lattice is not action-stable");
            coords.set_col(j, *c);
        }
        act.push_back(std::move(coords));
    }
    return GammaSubgroup{GammaModule(f.source.group(), k.group, std::move(act)), k.inclusion};
}

GammaQuotient equivariant_cokernel(const EquivariantHom& f) {
    Quotient q = cokernel(f.hom);
    std::vector<IntMatrix> act;
    for (int g = 0; g < f.target.group().order(); ++g) act.push_back(f.target.action_matrix(g));
    return GammaQuotient{GammaModule(f.target.group(), q.group, std::move(act)), q.projection};
}

namespace {

int int_pow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<int> decode_tuple(int index, int n, int p) {
    std::vector<int> t(p);
    for (int i = p - 1; i >= 0; --i) {
        t[i] = index % n;
        index /= n;
    }
    return t;
}

int encode_tuple(const std::vector<int>& t, int n) {
    int idx = 0;
    for (int g : t) idx = idx * n + g;
    return idx;
}

}  // namespace

FgAbGroup bar_cochain_group(const GammaModule& m, int p) {
    if (p < 0) throw InputError("negative cochain degree");
    return FgAbGroup::direct_power(m.carrier(), int_pow(m.group().order(), p));
}

IntMatrix bar_differential_matrix(const GammaModule& m, int p) {
    int n = m.group().order();
    int gc = m.carrier().gens();
    int src_blocks = int_pow(n, p);
    int dst_blocks = int_pow(n, p + 1);
    IntMatrix d(gc * dst_blocks, gc * src_blocks);
    auto add_block = [&](int dst_b, int src_b, const IntMatrix& blk, int sign) {
        for (int i = 0; i < gc; ++i)
            for (int j = 0; j < gc; ++j)
                if (blk(i, j) != 0) d(dst_b * gc + i, src_b * gc + j) += sign * blk(i, j);
    };
    IntMatrix id = IntMatrix::identity(gc);
    for (int t = 0; t < dst_blocks; ++t) {
        std::vector<int> g = decode_tuple(t, n, p + 1);
        // (df)(g_1..g_{p+1}) = g_1.f(g_2..) + sum_i (-1)^i f(..g_i g_{i+1}..)
        //                      + (-1)^{p+1} f(g_1..g_p)
        add_block(t, encode_tuple(std::vector<int>(g.begin() + 1, g.end()), n),
                  m.action_matrix(g[0]), +1);
        for (int i = 1; i <= p; ++i) {
            std::vector<int> merged;
            merged.reserve(p);
            for (int k = 0; k < i - 1; ++k) merged.push_back(g[k]);
            merged.push_back(m.group().mul(g[i - 1], g[i]));
            for (int k = i + 1; k <= p; ++k) merged.push_back(g[k]);
            add_block(t, encode_tuple(merged, n), id, (i % 2 == 0) ? +1 : -1);
        }
        add_block(t, encode_tuple(std::vector<int>(g.begin(), g.end() - 1), n), id,
                  (p % 2 == 0) ? -1 : +1);
    }
    return d;
}

AbHom bar_differential(const GammaModule& m, int p) {
    return AbHom(bar_cochain_group(m, p), bar_cochain_group(m, p + 1),
                 bar_differential_matrix(m, p));
}

FgAbGroup group_cohomology(const GammaModule& m, int degree) {
    if (degree < 0 || degree > 2) throw InputError("unsupported degree");
    FgAbGroup ci = bar_cochain_group(m, degree);
    FgAbGroup cnext = bar_cochain_group(m, degree + 1);
    IntMatrix cocycles = preimage_cols(bar_differential_matrix(m, degree), cnext.relation_cols());
    IntMatrix boundaries =
        degree == 0 ? ci.relation_cols()
                    : IntMatrix::hcat(bar_differential_matrix(m, degree - 1), ci.relation_cols());
    return make_subquotient(ci.gens(), cocycles, boundaries).group;
}

}  // namespace pi1
