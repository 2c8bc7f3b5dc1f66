#include "pi1/cohomology_profile.hpp"

namespace pi1 {

namespace {

// The cocharacter complex of a resolution as a two-term Gamma-complex in
// degrees (-1, 0): T_* with the restricted action, R_* = X_H^vee/sat(Q^vee)
// with the descended one.
TwoTermComplex cochar_complex(const TResolution& r) {
    FgAbGroup rstar = resolution_r_star(r);
    FgAbGroup tstar = FgAbGroup::free_group(r.kernel_rank());
    if (r.is_equivariant()) {
        const FiniteGroup& grp = r.base.gamma()->group;
        std::vector<IntMatrix> t_act, r_act;
        IntMatrix e = r.kernel_embedding();
        ColSolver esolver(e);
        for (int g = 0; g < grp.order(); ++g) {
            IntMatrix big = r.total.cochar_action(g);
            r_act.push_back(big);
            IntMatrix on_t(r.kernel_rank(), r.kernel_rank());
            IntMatrix moved = big * e;
            for (int j = 0; j < r.kernel_rank(); ++j) {
                auto c = esolver.solve(moved.col(j));
                if (!c) throw InternalError("kernel cocharacters are not action-stable");
                on_t.set_col(j, *c);
            }
            t_act.push_back(std::move(on_t));
        }
        GammaModule lower(grp, tstar, std::move(t_act));
        GammaModule upper(grp, rstar, std::move(r_act));
        return make_two_term(-1, lower, upper, r.kernel_embedding());
    }
    if (r.base.gamma())
        throw InputError("non-equivariant resolution of a datum with a group action");
    return make_two_term(-1, GammaModule::over_trivial_group(tstar),
                         GammaModule::over_trivial_group(rstar), r.kernel_embedding());
}

std::vector<FgAbGroup> profile_values(const TwoTermComplex& c) {
    std::vector<FgAbGroup> out;
    for (int i = -1; i <= 2; ++i) out.push_back(hypercohomology(c, i));
    return out;
}

// Column filtration of the bar total complex:
//   0 -> (bar complex of R_*, at degrees >= 0) -> Tot -> (bar of T_*, from -1) -> 0
std::vector<AbHom> torus_les(const TwoTermComplex& c) {
    const int maxp = 4;
    Complex total = bar_total_complex(c, maxp);

    std::vector<FgAbGroup> sub_terms, quot_terms;
    std::vector<AbHom> sub_diffs, quot_diffs;
    std::vector<IntMatrix> incl, proj;
    for (int t = -1; t <= maxp; ++t) {
        int p = t + 1;  // bar degree in the lower column
        int q = t;      // bar degree in the upper column
        FgAbGroup up = (q >= 0) ? bar_cochain_group(c.upper, q) : FgAbGroup::zero();
        FgAbGroup low = (p <= maxp) ? bar_cochain_group(c.lower, p) : FgAbGroup::zero();
        sub_terms.push_back(up);
        quot_terms.push_back(low);
        int total_gens = total.term(t).gens();
        IntMatrix in(total_gens, up.gens());
        for (int i = 0; i < up.gens(); ++i) in(total_gens - up.gens() + i, i) = 1;
        incl.push_back(std::move(in));
        IntMatrix pr(low.gens(), total_gens);
        for (int i = 0; i < low.gens(); ++i) pr(i, i) = 1;
        proj.push_back(std::move(pr));
    }
    for (int t = -1; t < maxp; ++t) {
        int idx = t + 1;
        int q = t;
        IntMatrix dsub = (q >= 0) ? bar_differential_matrix(c.upper, q)
                                  : IntMatrix(sub_terms[idx + 1].gens(), sub_terms[idx].gens());
        sub_diffs.emplace_back(sub_terms[idx], sub_terms[idx + 1], std::move(dsub));
        int p = t + 1;
        IntMatrix dquot = (p + 1 <= maxp)
                              ? bar_differential_matrix(c.lower, p)
                              : IntMatrix(quot_terms[idx + 1].gens(), quot_terms[idx].gens());
        quot_diffs.emplace_back(quot_terms[idx], quot_terms[idx + 1], std::move(dquot));
    }
    Complex sub(-1, std::move(sub_terms), std::move(sub_diffs));
    Complex quot(-1, std::move(quot_terms), std::move(quot_diffs));
    auto les = les_of_complexes(sub, total, quot, incl, proj, -1, 2);
    auto ex = is_exact(les);
    if (!ex)
        throw InternalError("torus long exact sequence failed at node " +
                            std::to_string(ex.failing_node) + ": " + ex.reason);
    return les;
}

}  // namespace

AbCohProfile ab_cohomology_profile(const RootDatum& d, const TResolution& r) {
    if (!(r.base == d)) throw InputError("profile: resolution does not resolve the datum");
    TwoTermComplex c = cochar_complex(r);
    AbCohProfile p;
    p.values = profile_values(c);
    p.torus_sequence = torus_les(c);

    // certify resolution independence by recomputation through a padded
    // from-torus resolution (equivariant whenever the datum acts)
    TResolution second = t_resolution_from_torus(d, r.kernel_rank() == d.semisimple_rank() ? 1 : 0);
    std::vector<FgAbGroup> check = profile_values(cochar_complex(second));
    for (size_t i = 0; i < p.values.size(); ++i)
        if (!(p.values[i].canon() == check[i].canon()))
            throw InternalError("profile values depend on the resolution at degree " +
                                std::to_string(static_cast<int>(i) - 1));

    auto dual = dual_profile(d);
    p.dual_hom = dual.first;
    p.dual_ext = dual.second;
    return p;
}

std::pair<FgAbGroup, FgAbGroup> dual_profile(const RootDatum& d) {
    GroupInvariants inv = fundamental_invariants(d);
    auto [hom_part, ext_part] = derived_dual(inv.pi1);
    if (hom_part.canon().free_rank != inv.cochar_torus_quotient.canon().free_rank)
        throw InternalError("dual profile free part does not match the torus cocharacters");
    if (!(ext_part.canon() == inv.mu_minus_one.canon()))
        throw InternalError("dual profile torsion does not match mu(-1)");
    return {hom_part, ext_part};
}

std::vector<AbHom> ab_long_sequence(const SESData& s) {
    Pi1Exactness ex = check_pi1_exact(s);
    const AbHom& f1 = ex.sequence[1];
    const AbHom& f2 = ex.sequence[2];

    bool equivariant = s.g1.gamma() && s.g2.gamma() && s.g3.gamma() &&
                       s.g1.gamma()->group == s.g2.gamma()->group &&
                       s.g2.gamma()->group == s.g3.gamma()->group;
    GammaModule m1, m2, m3;
    if (equivariant) {
        m1 = *fundamental_invariants(s.g1).pi1_module;
        m2 = *fundamental_invariants(s.g2).pi1_module;
        m3 = *fundamental_invariants(s.g3).pi1_module;
    } else {
        m1 = GammaModule::over_trivial_group(f1.source());
        m2 = GammaModule::over_trivial_group(f1.target());
        m3 = GammaModule::over_trivial_group(f2.target());
    }
    EquivariantHom incl = make_equivariant_hom(m1, m2, f1);
    EquivariantHom proj = make_equivariant_hom(m2, m3, f2);
    auto les = cohomology_long_sequence(incl, proj);
    auto check = is_exact(les);
    if (!check)
        throw InternalError("abelianized long exact sequence failed at node " +
                            std::to_string(check.failing_node) + ": " + check.reason);
    return les;
}

}  // namespace pi1
