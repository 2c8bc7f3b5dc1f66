#include "pi1/verify.hpp"

#include "pi1/catalog.hpp"
#include "pi1/cohomology_profile.hpp"
#include "pi1/json_io.hpp"

#include <chrono>
#include <functional>

namespace pi1::verify {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult run_timed(const std::string& name, double limit_seconds,
                      const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
        r.detail = body();
        r.passed = true;
    } catch (const std::exception& e) {
        r.detail = e.what();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.passed && limit_seconds > 0 && r.seconds > limit_seconds) {
        r.passed = false;
        r.detail += " [exceeded the " + std::to_string(limit_seconds) + "s budget]";
    }
    return r;
}

struct Failure : std::runtime_error {
    explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

// ---- shared generators ------------------------------------------------------

// Derives the root partition of an exact 1 -> G1 -> G2 -> G3 -> 1 from the
// two cocharacter maps and validates the result.
SESData build_ses_auto(const RootDatum& g1, const RootDatum& g2, const RootDatum& g3,
                       const IntMatrix& f1, const IntMatrix& f2) {
    IntMatrix f1t = f1.transpose(), f2t = f2.transpose();
    std::vector<int> from1, from3;
    for (size_t i = 0; i < g1.roots().size(); ++i) {
        int found = -1;
        IntVec want = f1.apply(g1.coroots()[i]);
        for (size_t j = 0; j < g2.roots().size(); ++j)
            if (g2.coroots()[j] == want && f1t.apply(g2.roots()[j]) == g1.roots()[i]) {
                found = static_cast<int>(j);
                break;
            }
        require(found >= 0, "could not match a kernel root");
        from1.push_back(found);
    }
    for (size_t j = 0; j < g3.roots().size(); ++j) {
        int found = -1;
        IntVec want = f2t.apply(g3.roots()[j]);
        for (size_t i = 0; i < g2.roots().size(); ++i)
            if (g2.roots()[i] == want && f2.apply(g2.coroots()[i]) == g3.coroots()[j]) {
                found = static_cast<int>(i);
                break;
            }
        require(found >= 0, "could not match a quotient root");
        from3.push_back(found);
    }
    return make_ses(g1, g2, g3, f1, f2, std::move(from1), std::move(from3));
}

// Central quotient together with the cocharacter matrix of the projection.
struct QuotientHom {
    RootDatum quotient;
    IntMatrix cochar;  // old X^vee coordinates -> enlarged basis coordinates
};

QuotientHom central_quotient_hom(const RootDatum& d, const IntMatrix& nums, const Int& den) {
    RootDatum q = central_quotient(d, nums, den);
    int n = d.rank();
    IntMatrix scaled = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) scaled(i, i) = den;
    IntMatrix h = col_lattice_basis(IntMatrix::hcat(scaled, nums));
    ColSolver solver(h);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = den;
        auto x = solver.solve(e);
        if (!x) throw InternalError("old lattice missing from the enlarged one");
        m.set_col(i, *x);
    }
    return {std::move(q), std::move(m)};
}

// Random central class of a semisimple datum: an integer combination of the
// fundamental coweights of its simply connected root system, embedded into
// X^vee via the simple coroots. Returned as numerators over `den`.
IntVec random_central_numerators(Rng& rng, const RootDatum& s, Int& den) {
    IntMatrix ct = s.cartan_matrix().transpose();
    Int det = ct.determinant();
    den = abs(det);
    int l = s.semisimple_rank();
    IntVec combo(l, Int(0));
    for (int j = 0; j < l; ++j) {
        Int c = rng.range(0, 3);
        if (c == 0) continue;
        IntVec e(l, Int(0));
        e[j] = c * det;
        auto x = solve_cols(ct, e);  // det * (C^T)^{-1} e_j, integral
        if (!x) throw InternalError("Cartan matrix is singular");
        combo = add(combo, *x);
    }
    for (auto& x : combo) x = ((x % den) + den) % den;
    IntVec embedded = s.simple_coroot_cols().apply(combo);
    return embedded;
}

std::vector<std::string> sc_pool() {
    return {"SL(2)", "SL(3)", "SL(4)", "SL(5)", "Sp(4)", "Sp(6)",
            "Spin(5)", "Spin(7)", "Spin(8)", "SC(G,2)"};
}

struct RandomQuotientInstance {
    RootDatum semisimple;       // S, a product of simply connected factors
    RootDatum ambient;          // S x T
    RootDatum quotient;         // (S x T)/K
    IntMatrix quotient_cochar;  // X(S x T)^vee -> X(quotient)^vee
    IntMatrix k_nums;
    Int k_den = 1;
    int torus_rank = 0;
};

RandomQuotientInstance random_quotient_instance(Rng& rng, bool need_torus) {
    auto pool = sc_pool();
    int factors = 1 + static_cast<int>(rng.below(3));
    RootDatum s = standard_group(pool[rng.below(pool.size())]);
    for (int i = 1; i < factors; ++i)
        s = product_datum(s, standard_group(pool[rng.below(pool.size())]));
    int trank =
        need_torus ? 1 + static_cast<int>(rng.below(2)) : static_cast<int>(rng.below(3));
    RootDatum ambient = product_datum(s, RootDatum(trank, {}, {}));

    int gens = 1 + static_cast<int>(rng.below(2));
    std::vector<IntVec> nums;
    std::vector<Int> dens;
    for (int g = 0; g < gens; ++g) {
        Int sden = 1;
        IntVec spart = random_central_numerators(rng, s, sden);
        Int tden = 1 + static_cast<long long>(rng.below(3));
        IntVec tpart(trank, Int(0));
        for (int i = 0; i < trank; ++i) tpart[i] = rng.range(0, 3);
        Int gden = lcm(sden, tden);
        nums.push_back(concat(scale(gden / sden, spart), scale(gden / tden, tpart)));
        dens.push_back(gden);
    }
    Int den = 1;
    for (const auto& dd : dens) den = lcm(den, dd);
    IntMatrix numm(ambient.rank(), gens);
    for (int g = 0; g < gens; ++g) numm.set_col(g, scale(den / dens[g], nums[g]));

    QuotientHom qh = central_quotient_hom(ambient, numm, den);
    return RandomQuotientInstance{std::move(s),       std::move(ambient), std::move(qh.quotient),
                                  std::move(qh.cochar), std::move(numm),    den,
                                  trank};
}

// 1 -> S -> (SxT)/K -> torus -> 1; empty when K meets S.
std::optional<SESData> ses_group_by_torus(const RandomQuotientInstance& inst) {
    int srank = inst.semisimple.rank();
    int arank = inst.ambient.rank();
    IntMatrix incl_ambient(arank, srank);
    for (int i = 0; i < srank; ++i) incl_ambient(i, i) = 1;
    IntMatrix f1 = inst.quotient_cochar * incl_ambient;
    IntMatrix img = col_lattice_basis(f1);
    SnfOptions opts;
    opts.with_u = true;
    SmithResult sm = smith_normal_form(img, opts);
    for (int i = 0; i < sm.rank; ++i)
        if (sm.d(i, i) != 1) return std::nullopt;  // quotient has torsion: K meets S
    int free = arank - sm.rank;
    IntMatrix f2 = sm.u.submatrix(sm.rank, 0, free, arank);
    try {
        return build_ses_auto(inst.semisimple, inst.quotient, RootDatum(free, {}, {}), f1, f2);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// 1 -> T -> (SxT)/K -> S/pr_S(K) -> 1; empty when K meets T.
std::optional<SESData> ses_torus_by_group(const RandomQuotientInstance& inst) {
    if (inst.torus_rank == 0) return std::nullopt;
    int srank = inst.semisimple.rank();
    int arank = inst.ambient.rank();
    IntMatrix s_nums = inst.k_nums.submatrix(0, 0, srank, inst.k_nums.cols());
    QuotientHom q3 = central_quotient_hom(inst.semisimple, s_nums, inst.k_den);

    IntMatrix scaled = IntMatrix::identity(arank);
    for (int i = 0; i < arank; ++i) scaled(i, i) = inst.k_den;
    IntMatrix h2 = col_lattice_basis(IntMatrix::hcat(scaled, inst.k_nums));
    IntMatrix scaled3 = IntMatrix::identity(srank);
    for (int i = 0; i < srank; ++i) scaled3(i, i) = inst.k_den;
    IntMatrix h3 = col_lattice_basis(IntMatrix::hcat(scaled3, s_nums));
    ColSolver h3_solver(h3);
    IntMatrix f2(srank, arank);
    for (int j = 0; j < arank; ++j) {
        IntVec hs(h2.col(j).begin(), h2.col(j).begin() + srank);
        auto x = h3_solver.solve(hs);
        if (!x) return std::nullopt;
        f2.set_col(j, *x);
    }
    ColSolver h2_solver(h2);
    IntMatrix f1(arank, inst.torus_rank);
    for (int j = 0; j < inst.torus_rank; ++j) {
        IntVec e(arank, Int(0));
        e[srank + j] = inst.k_den;
        auto x = h2_solver.solve(e);
        if (!x) return std::nullopt;
        f1.set_col(j, *x);
    }
    try {
        return build_ses_auto(RootDatum(inst.torus_rank, {}, {}), inst.quotient, q3.quotient, f1,
                              f2);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<SESData> fixed_ses_instances() {
    std::vector<SESData> out;
    for (int n : {2, 3, 4}) {
        RootDatum sl = standard_group("SL(" + std::to_string(n) + ")");
        RootDatum gl = standard_group("GL(" + std::to_string(n) + ")");
        RootDatum gm = standard_group("Torus(1)");
        IntMatrix f1(n, n - 1);
        for (int j = 0; j < n - 1; ++j) {
            f1(j, j) = 1;
            f1(j + 1, j) = -1;
        }
        IntMatrix f2(1, n);
        for (int j = 0; j < n; ++j) f2(0, j) = 1;
        out.push_back(build_ses_auto(sl, gl, gm, f1, f2));
    }
    out.push_back(build_ses_auto(standard_group("Torus(1)"), standard_group("GL(2)"),
                                 standard_group("PGL(2)"), IntMatrix{{1}, {1}},
                                 IntMatrix{{1, -1}}));
    RootDatum sp4 = standard_group("Sp(4)");
    out.push_back(build_ses_auto(sp4, sp4, standard_group("Torus(0)"), IntMatrix::identity(2),
                                 IntMatrix(0, 2)));
    return out;
}

std::vector<std::string> catalog_list() {
    return {"SL(2)",   "SL(3)",   "SL(5)",   "PGL(2)",   "PGL(3)",  "PGL(4)",
            "GL(1)",   "GL(2)",   "GL(3)",   "Sp(2)",    "Sp(4)",   "Sp(6)",
            "SO(3)",   "SO(5)",   "SO(7)",   "SO(4)",    "SO(6)",   "SO(8)",
            "Spin(5)", "Spin(7)", "Spin(8)", "Spin(10)", "SC(G,2)", "SC(F,4)",
            "SC(E,6)", "ADJ(E,6)", "Torus(0)", "Torus(1)", "Torus(3)",
            "Product(SL(2),Torus(2))", "CentralQuotient(Product(SL(2),SL(2)),[1/2,1/2])"};
}

// First-principles Z/2 cochain oracles, assembled directly from the cocycle
// conditions (independent of the bar-complex assembler).
FgAbGroup brute_h1_z2(const IntMatrix& sigma, const FgAbGroup& carrier) {
    int g = carrier.gens();
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    std::vector<IntMatrix> act = {IntMatrix::identity(g), sigma};
    IntMatrix cond(4 * g, 2 * g);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            int row = (a * 2 + b) * g;
            int ab = z2.mul(a, b);
            for (int i = 0; i < g; ++i) {
                for (int jj = 0; jj < g; ++jj) cond(row + i, b * g + jj) += act[a](i, jj);
                cond(row + i, ab * g + i) -= 1;
                cond(row + i, a * g + i) += 1;
            }
        }
    FgAbGroup c2 = FgAbGroup::direct_power(carrier, 4);
    IntMatrix cocycles = preimage_cols(cond, c2.relation_cols());
    IntMatrix cob(2 * g, g);
    for (int i = 0; i < g; ++i)
        for (int jj = 0; jj < g; ++jj) {
            cob(g + i, jj) += sigma(i, jj);
            if (i == jj) cob(g + i, jj) -= 1;
        }
    FgAbGroup c1 = FgAbGroup::direct_power(carrier, 2);
    return make_subquotient(2 * g, cocycles, IntMatrix::hcat(cob, c1.relation_cols())).group;
}

FgAbGroup brute_h2_z2_trivial() {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix cond(8, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                int row = (a * 2 + b) * 2 + c;
                cond(row, b * 2 + c) += 1;
                cond(row, z2.mul(a, b) * 2 + c) -= 1;
                cond(row, a * 2 + z2.mul(b, c)) += 1;
                cond(row, a * 2 + b) -= 1;
            }
    IntMatrix cocycles = kernel_cols(cond);
    IntMatrix cob(4, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            int row = a * 2 + b;
            cob(row, b) += 1;
            cob(row, z2.mul(a, b)) -= 1;
            cob(row, a) += 1;
        }
    return make_subquotient(4, cocycles, cob).group;
}

GammaAction block_permutation_action(const FiniteGroup& grp,
                                     const std::vector<std::vector<int>>& perms, int block) {
    std::vector<IntMatrix> act;
    int b = static_cast<int>(perms[0].size());
    for (int g = 0; g < grp.order(); ++g) {
        IntMatrix m(b * block, b * block);
        for (int j = 0; j < b; ++j)
            for (int i = 0; i < block; ++i) m(perms[g][j] * block + i, j * block + i) = 1;
        act.push_back(std::move(m));
    }
    return GammaAction{grp, std::move(act)};
}

}  // namespace

CheckResult catalog_pi1_values() {
    return run_timed("catalog-pi1", 5.0, []() {
        struct Row {
            std::string spec;
            CanonicalForm expected;
        };
        std::vector<Row> rows;
        auto cyc = [](long long n) {
            CanonicalForm c;
            if (n > 1) c.divisors.push_back(n);
            return c;
        };
        auto freeform = [](int r) {
            CanonicalForm c;
            c.free_rank = r;
            return c;
        };
        for (int n = 2; n <= 9; ++n) rows.push_back({"SL(" + std::to_string(n) + ")", cyc(1)});
        for (int n = 2; n <= 9; ++n) rows.push_back({"PGL(" + std::to_string(n) + ")", cyc(n)});
        for (int n = 1; n <= 9; ++n)
            rows.push_back({"GL(" + std::to_string(n) + ")", freeform(1)});
        for (int n = 1; n <= 9; ++n)
            rows.push_back({"Sp(" + std::to_string(2 * n) + ")", cyc(1)});
        for (int n = 1; n <= 9; ++n)
            rows.push_back({"SO(" + std::to_string(2 * n + 1) + ")", cyc(2)});
        for (int n = 2; n <= 9; ++n)
            rows.push_back({"SO(" + std::to_string(2 * n) + ")", cyc(2)});
        for (int n = 3; n <= 16; ++n)
            rows.push_back({"Spin(" + std::to_string(n) + ")", cyc(1)});
        for (const char* s : {"SC(E,6)", "SC(E,7)", "SC(E,8)", "SC(F,4)", "SC(G,2)"})
            rows.push_back({s, cyc(1)});
        for (int r = 0; r <= 5; ++r)
            rows.push_back({"Torus(" + std::to_string(r) + ")", freeform(r)});

        int checked = 0;
        for (const auto& row : rows) {
            RootDatum d = standard_group(row.spec);
            FgAbGroup pi1 = fundamental_invariants(d).pi1;
            require(pi1.canon() == row.expected, row.spec + ": pi1 = " + pi1.to_string() +
                                                     ", expected " + row.expected.to_string());
            // independent oracle: Smith form of the coroot inclusion matrix
            IntVec divs = smith_divisors(d.coroot_cols());
            CanonicalForm oracle;
            oracle.free_rank = d.rank() - static_cast<int>(divs.size());
            for (const auto& x : divs)
                if (x >= 2) oracle.divisors.push_back(x);
            require(oracle == row.expected, row.spec + ": oracle disagrees");
            ++checked;
        }
        return std::to_string(checked) + " catalog values confirmed against the Smith oracle";
    });
}

CheckResult ses_exactness(std::uint64_t seed) {
    return run_timed("ses-exactness", 60.0, [seed]() {
        std::vector<SESData> instances = fixed_ses_instances();
        Rng rng(seed);
        int attempts = 0;
        while (instances.size() < 30 && attempts < 400) {
            ++attempts;
            RandomQuotientInstance inst = random_quotient_instance(rng, attempts % 2 == 0);
            std::optional<SESData> s =
                (attempts % 2 == 0) ? ses_torus_by_group(inst) : ses_group_by_torus(inst);
            if (s) instances.push_back(std::move(*s));
        }
        require(instances.size() >= 30, "could not generate 30 instances (got " +
                                            std::to_string(instances.size()) + ")");
        for (size_t i = 0; i < instances.size(); ++i) {
            Pi1Exactness res = check_pi1_exact(instances[i]);
            require(is_exact(res.sequence).exact,
                    "instance " + std::to_string(i) + ": functorial route not exact");
            require(is_exact(res.snake_route).exact,
                    "instance " + std::to_string(i) + ": snake route not exact");
            require(hom_equal(res.sequence[1], res.snake_route[1]) &&
                        hom_equal(res.sequence[2], res.snake_route[2]),
                    "instance " + std::to_string(i) + ": routes disagree");
        }
        return std::to_string(instances.size()) + " sequences exact via both routes";
    });
}

CheckResult resolution_independence() {
    return run_timed("resolution-independence", 0.0, []() {
        int groups = 0;
        for (const auto& spec : catalog_list()) {
            RootDatum d = standard_group(spec);
            FgAbGroup ref = fundamental_invariants(d).pi1;
            TResolution rt = t_resolution_from_torus(d);
            TResolution rg1 = t_resolution_generic(d, default_embedding_choice(d));
            TResolution rg2 = t_resolution_generic(d, padded_embedding_choice(d, 1));
            FgAbGroup v1 = pi1_of_resolution(rt);
            FgAbGroup v2 = pi1_of_resolution(rg1);
            FgAbGroup v3 = pi1_of_resolution(rg2);
            FgAbGroup v4 = pi1_via_m_resolution(d);
            for (const FgAbGroup* v : {&v1, &v2, &v3, &v4})
                require(v->canon() == ref.canon(), spec + ": route disagrees with the formula");
            resolution_pi1_to_datum(rt);
            resolution_pi1_to_datum(rg1);
            resolution_pi1_to_datum(rg2);
            AbHom psi12 = canonical_iso(rt, rg1);
            AbHom psi23 = canonical_iso(rg1, rg2);
            AbHom psi13 = canonical_iso(rt, rg2);
            require(hom_equal(psi13, compose(psi23, psi12)), spec + ": triangle fails");
            ++groups;
        }
        return std::to_string(groups) + " groups with five matching routes and triangles";
    });
}

CheckResult duality_fuzz(std::uint64_t seed) {
    return run_timed("duality-fuzz", 30.0, [seed]() {
        Rng rng(seed);
        for (int i = 0; i < 200; ++i) {
            ComplexMorphism f = random_quasi_isomorphism(rng, 6);
            require(is_quasi_isomorphism(f), "generator produced a non-quasi-isomorphism");
            ComplexMorphism fd = dual_morphism(f);
            require(is_quasi_isomorphism(fd),
                    "dual of instance " + std::to_string(i) + " is not a quasi-isomorphism");
            require(cone(f).dualized().structurally_equal(cone(fd).shifted(-1)),
                    "cone-shift identity failed at instance " + std::to_string(i));
        }
        return "200/200 duals are quasi-isomorphisms, cone-shift identity structural";
    });
}

CheckResult fundamental_diagrams(std::uint64_t seed) {
    return run_timed("fundamental-diagrams", 0.0, [seed]() {
        int resolutions = 0, groups = 0;
        for (const auto& spec : catalog_list()) {
            RootDatum d = standard_group(spec);
            GroupInvariants inv = fundamental_invariants(d);
            require(is_exact(inv.torsion_sequence).exact, spec + ": mu sequence not exact");
            require(inv.mu_minus_one.canon() == inv.mu_star.canon(),
                    spec + ": mu(-1) mismatch");
            CanonicalForm torsion;
            torsion.divisors = inv.pi1.canon().divisors;
            require(torsion == inv.mu_minus_one.canon(), spec + ": torsion(pi1) != mu(-1)");
            CanonicalForm freepart;
            freepart.free_rank = inv.pi1.canon().free_rank;
            require(freepart == inv.cochar_torus_quotient.canon(),
                    spec + ": free quotient of pi1 is not the torus cocharacters");

            for (const TResolution& r :
                 {t_resolution_from_torus(d), t_resolution_generic(d, default_embedding_choice(d)),
                  t_resolution_generic(d, padded_embedding_choice(d, 1))}) {
                fundamental_sequence(r);
                qiso_certificate(r);
                ++resolutions;
            }
            ++groups;
        }
        Rng rng(seed);
        for (int i = 0; i < 3; ++i) {
            RandomQuotientInstance inst = random_quotient_instance(rng, true);
            for (const RootDatum* d : {&inst.semisimple, &inst.quotient}) {
                TResolution r = t_resolution_from_torus(*d);
                fundamental_sequence(r);
                qiso_certificate(r);
                ++resolutions;
            }
        }
        return std::to_string(groups) + " groups, " + std::to_string(resolutions) +
               " resolutions with verified sequences and certificates";
    });
}

CheckResult gamma_cohomology(std::uint64_t seed) {
    return run_timed("gamma-cohomology", 0.0, [seed]() {
        (void)seed;
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        GammaModule sign(z2, FgAbGroup::free_group(1), {IntMatrix{{1}}, IntMatrix{{-1}}});
        GammaModule triv = GammaModule::with_trivial_action(z2, FgAbGroup::free_group(1));
        require(group_cohomology(sign, 1).to_string() == "Z/2", "H1(Z/2, sign) != Z/2");
        require(group_cohomology(triv, 2).to_string() == "Z/2", "H2(Z/2, triv) != Z/2");
        require(group_cohomology(triv, 1).to_string() == "0", "H1(Z/2, triv) != 0");
        require(group_cohomology(sign, 1).canon() ==
                    brute_h1_z2(IntMatrix{{-1}}, FgAbGroup::free_group(1)).canon(),
                "bar H1 disagrees with the cocycle oracle (sign)");
        require(group_cohomology(triv, 1).canon() ==
                    brute_h1_z2(IntMatrix{{1}}, FgAbGroup::free_group(1)).canon(),
                "bar H1 disagrees with the cocycle oracle (trivial)");
        require(group_cohomology(triv, 2).canon() == brute_h2_z2_trivial().canon(),
                "bar H2 disagrees with the cocycle oracle");

        // module-level long exact sequences over Z/2, Z/3 and S3: split a
        // permutation module by an equivariant map and chase both sides
        int les_count = 0;
        auto les_from_projection = [&](const GammaModule& b, const GammaModule& c,
                                       const IntMatrix& proj_matrix) {
            EquivariantHom proj =
                make_equivariant_hom(b, c, AbHom(b.carrier(), c.carrier(), proj_matrix));
            GammaSubgroup k = equivariant_kernel(proj);
            EquivariantHom incl = make_equivariant_hom(k.module, b, k.inclusion);
            auto les = cohomology_long_sequence(incl, proj);
            require(is_exact(les).exact, "module long exact sequence failed");
            ++les_count;
        };
        auto les_from_injection = [&](const GammaModule& a, const GammaModule& b,
                                      const IntMatrix& incl_matrix) {
            EquivariantHom incl =
                make_equivariant_hom(a, b, AbHom(a.carrier(), b.carrier(), incl_matrix));
            GammaQuotient q = equivariant_cokernel(incl);
            EquivariantHom proj = make_equivariant_hom(b, q.module, q.projection);
            auto les = cohomology_long_sequence(incl, proj);
            require(is_exact(les).exact, "module long exact sequence failed");
            ++les_count;
        };

        GammaModule swap2 = GammaModule::permutation(z2, {{0, 1}, {1, 0}});
        les_from_projection(swap2, triv, IntMatrix{{1, 1}});
        les_from_injection(triv, swap2, IntMatrix{{1}, {1}});
        les_from_injection(sign, swap2, IntMatrix{{1}, {-1}});
        GammaModule z2triv(z2, FgAbGroup::cyclic(2), {IntMatrix{{1}}, IntMatrix{{1}}});
        les_from_projection(sign, z2triv, IntMatrix{{1}});  // x2 kernel, torsion quotient

        FiniteGroup z3 = FiniteGroup::cyclic(3);
        GammaModule reg3 = GammaModule::permutation(z3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
        GammaModule triv3 = GammaModule::with_trivial_action(z3, FgAbGroup::free_group(1));
        les_from_projection(reg3, triv3, IntMatrix{{1, 1, 1}});
        les_from_injection(triv3, reg3, IntMatrix{{1}, {1}, {1}});
        les_from_injection(reg3, reg3.direct_sum(triv3),
                           IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});

        FiniteGroup s3 = FiniteGroup::symmetric(3);
        std::vector<std::vector<int>> nat;
        {
            std::vector<int> p = {0, 1, 2};
            do nat.push_back(p); while (std::next_permutation(p.begin(), p.end()));
        }
        GammaModule nat3 = GammaModule::permutation(s3, nat);
        GammaModule trivs3 = GammaModule::with_trivial_action(s3, FgAbGroup::free_group(1));
        les_from_projection(nat3, trivs3, IntMatrix{{1, 1, 1}});
        les_from_injection(trivs3, nat3, IntMatrix{{1}, {1}, {1}});
        les_from_injection(trivs3, trivs3.direct_sum(nat3), IntMatrix{{1}, {0}, {0}, {0}});

        // abelianized sequences of group data with actions
        int ab_count = 0;
        {
            IntMatrix swap{{0, 1}, {1, 0}};
            RootDatum middle(2, {}, {}, GammaAction{z2, {IntMatrix::identity(2), swap}});
            RootDatum kernel(1, {}, {},
                             GammaAction{z2, {IntMatrix::identity(1), IntMatrix::identity(1)}});
            RootDatum quot(1, {}, {},
                           GammaAction{z2, {IntMatrix::identity(1), IntMatrix{{-1}}}});
            SESData s =
                make_ses(kernel, middle, quot, IntMatrix{{1}, {1}}, IntMatrix{{1, -1}}, {}, {});
            require(is_exact(ab_long_sequence(s)).exact, "swap torus sequence failed");
            ++ab_count;
        }
        {
            // swapped SL(2) x SL(2) x Gm with a diagonal central quotient:
            // 1 -> Gm -> (SL2^2 x Gm)/K -> (SL2^2)/diag -> 1
            RootDatum pair = standard_group("Product(SL(2),SL(2))");
            GammaAction swap_pair = block_permutation_action(z2, {{0, 1}, {1, 0}}, 1);
            RootDatum spair(2, pair.roots(), pair.coroots(), swap_pair);
            RootDatum base = product_datum(pair, RootDatum(1, {}, {}));
            std::vector<IntMatrix> act;
            for (const auto& m : swap_pair.char_action)
                act.push_back(IntMatrix::block_diag(m, IntMatrix::identity(1)));
            RootDatum ambient(3, base.roots(), base.coroots(), GammaAction{z2, std::move(act)});
            IntMatrix nums(3, 1);
            nums(0, 0) = 1;
            nums(1, 0) = 1;
            nums(2, 0) = 1;
            QuotientHom qh = central_quotient_hom(ambient, nums, 2);
            IntMatrix sn(2, 1);
            sn(0, 0) = 1;
            sn(1, 0) = 1;
            QuotientHom q3 = central_quotient_hom(spair, sn, 2);
            IntMatrix f1 = qh.cochar * IntMatrix{{0}, {0}, {1}};
            // projection between the enlarged lattices, dropping the torus
            IntMatrix scaled = IntMatrix::identity(3);
            for (int i = 0; i < 3; ++i) scaled(i, i) = 2;
            IntMatrix h2 = col_lattice_basis(IntMatrix::hcat(scaled, nums));
            IntMatrix scaled2 = IntMatrix::identity(2);
            scaled2(0, 0) = scaled2(1, 1) = 2;
            IntMatrix h3 = col_lattice_basis(IntMatrix::hcat(scaled2, sn));
            ColSolver h3s(h3);
            IntMatrix f2(2, 3);
            for (int j = 0; j < 3; ++j) {
                IntVec hs(h2.col(j).begin(), h2.col(j).begin() + 2);
                auto x = h3s.solve(hs);
                require(x.has_value(), "projection missed the quotient lattice");
                f2.set_col(j, *x);
            }
            RootDatum gm(1, {}, {},
                         GammaAction{z2, {IntMatrix::identity(1), IntMatrix::identity(1)}});
            SESData s = build_ses_auto(gm, qh.quotient, q3.quotient, f1, f2);
            require(is_exact(ab_long_sequence(s)).exact, "swapped SL2 pair sequence failed");
            ++ab_count;
        }
        {
            // cyclic rotation of three torus coordinates
            FiniteGroup z3g = FiniteGroup::cyclic(3);
            GammaAction rot =
                block_permutation_action(z3g, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 1);
            RootDatum middle(3, {}, {}, rot);
            RootDatum kern(1, {}, {},
                           GammaAction{z3g, {IntMatrix::identity(1), IntMatrix::identity(1),
                                             IntMatrix::identity(1)}});
            IntMatrix f1{{1}, {1}, {1}};
            IntMatrix f2{{1, -1, 0}, {0, 1, -1}};
            // induced action on the quotient in the basis (e1-e2, e2-e3)
            IntMatrix a1{{0, -1}, {1, -1}};
            RootDatum quot(2, {}, {}, GammaAction{z3g, {IntMatrix::identity(2), a1, a1 * a1}});
            SESData s = make_ses(kern, middle, quot, f1, f2, {}, {});
            require(is_exact(ab_long_sequence(s)).exact, "rotation torus sequence failed");
            ++ab_count;
        }

        // profile resolution independence on acting data and a plain datum
        int profile_pairs = 0;
        {
            RootDatum pair = standard_group("Product(SL(2),SL(2))");
            RootDatum with(2, pair.roots(), pair.coroots(),
                           block_permutation_action(z2, {{0, 1}, {1, 0}}, 1));
            AbCohProfile a = ab_cohomology_profile(with, t_resolution_from_torus(with));
            AbCohProfile b = ab_cohomology_profile(with, t_resolution_from_torus(with, 2));
            for (int i = -1; i <= 2; ++i)
                require(a.value(i).canon() == b.value(i).canon(),
                        "equivariant profile depends on the resolution");
            ++profile_pairs;
            RootDatum pgl3 = standard_group("PGL(3)");
            AbCohProfile c = ab_cohomology_profile(pgl3, t_resolution_from_torus(pgl3));
            AbCohProfile d2 = ab_cohomology_profile(
                pgl3, t_resolution_generic(pgl3, padded_embedding_choice(pgl3, 1)));
            for (int i = -1; i <= 2; ++i)
                require(c.value(i).canon() == d2.value(i).canon(),
                        "profile depends on the resolution");
            ++profile_pairs;
        }
        return "oracle values matched; " + std::to_string(les_count) + " module sequences, " +
               std::to_string(ab_count) + " abelianized sequences, " +
               std::to_string(profile_pairs) + " profile pairs";
    });
}

CheckResult integer_oracles(std::uint64_t seed) {
    return run_timed("integer-oracles", 0.0, [seed]() {
        Rng rng(seed);
        for (int iter = 0; iter < 500; ++iter) {
            int m = 1 + static_cast<int>(rng.below(5));
            int n = 1 + static_cast<int>(rng.below(5));
            IntMatrix a(m, n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) a(i, j) = rng.range(-10, 10);
            IntVec divs = smith_divisors(a);
            IntVec oracle;
            Int prev = 1;
            int maxk = std::min(m, n);
            std::vector<int> cur;
            std::function<void(int, int, int, std::vector<std::vector<int>>&)> gen =
                [&](int total, int want, int start, std::vector<std::vector<int>>& out) {
                    if (static_cast<int>(cur.size()) == want) {
                        out.push_back(cur);
                        return;
                    }
                    for (int i = start; i < total; ++i) {
                        cur.push_back(i);
                        gen(total, want, i + 1, out);
                        cur.pop_back();
                    }
                };
            for (int k = 1; k <= maxk; ++k) {
                std::vector<std::vector<int>> rsets, csets;
                cur.clear();
                gen(m, k, 0, rsets);
                cur.clear();
                gen(n, k, 0, csets);
                Int g = 0;
                for (const auto& rs : rsets) {
                    for (const auto& cs : csets) {
                        IntMatrix sub(k, k);
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
                        g = gcd(g, sub.determinant());
                        if (g == 1) break;
                    }
                    if (g == 1) break;
                }
                if (g == 0) break;
                oracle.push_back(g / prev);
                prev = g;
            }
            require(divs == oracle, "invariant factors disagree with the minor oracle at " +
                                        std::to_string(iter));
        }

        int done = 0;
        while (done < 25) {
            long long d1 = rng.range(1, 8), d2 = rng.range(1, 8);
            if (d1 * d2 > 64) continue;
            FgAbGroup g = FgAbGroup::direct_sum(FgAbGroup::cyclic(d1), FgAbGroup::cyclic(d2));
            IntMatrix m(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m(i, j) = rng.range(-4, 4);
            try {
                AbHom f(g, g, m);
                auto elems = g.all_elements();
                int ker_count = 0;
                std::vector<IntVec> image;
                for (const auto& e : elems) {
                    IntVec fe = f.apply(e);
                    if (g.element_is_zero(fe)) ++ker_count;
                    bool seen = false;
                    for (const auto& im : image)
                        if (g.elements_equal(im, fe)) {
                            seen = true;
                            break;
                        }
                    if (!seen) image.push_back(fe);
                }
                require(kernel(f).group.canon().torsion_order() == ker_count,
                        "kernel size disagrees with enumeration");
                require(cokernel(f).group.canon().torsion_order() *
                                Int(static_cast<long long>(image.size())) ==
                            g.canon().torsion_order(),
                        "cokernel size disagrees with enumeration");
                ++done;
            } catch (const InputError&) {
                // the random matrix did not define a hom; draw again
            }
        }
        return "500 Smith forms against the minor oracle, 25 kernel/cokernel enumerations";
    });
}

CheckResult functoriality(std::uint64_t seed) {
    return run_timed("functoriality", 0.0, [seed]() {
        Rng rng(seed);
        std::vector<GroupHomData> pool;
        auto add_group_chain = [&](const std::string& a, const std::string& b) {
            RootDatum da = standard_group(a);
            RootDatum db = standard_group(b);
            RootDatum prod = product_datum(da, db);
            IntMatrix incl(prod.rank(), da.rank());
            for (int i = 0; i < da.rank(); ++i) incl(i, i) = 1;
            pool.push_back(make_group_hom(da, prod, incl, false));
            IntMatrix proj(db.rank(), prod.rank());
            for (int i = 0; i < db.rank(); ++i) proj(i, da.rank() + i) = 1;
            pool.push_back(make_group_hom(prod, db, proj, false));
            pool.push_back(identity_hom(prod));
        };
        add_group_chain("SL(2)", "Torus(1)");
        add_group_chain("GL(2)", "PGL(2)");
        add_group_chain("Sp(4)", "GL(2)");
        add_group_chain("Torus(2)", "SO(4)");
        {
            RootDatum gl2 = standard_group("GL(2)");
            RootDatum gm = standard_group("Torus(1)");
            pool.push_back(make_group_hom(gl2, gm, IntMatrix{{1, 1}}, false));
            pool.push_back(make_group_hom(gm, gl2, IntMatrix{{1}, {1}}, false));
            pool.push_back(
                make_group_hom(standard_group("SL(2)"), gl2, IntMatrix{{1}, {-1}}, false));
            pool.push_back(
                make_group_hom(gl2, standard_group("PGL(2)"), IntMatrix{{1, -1}}, false));
            pool.push_back(make_group_hom(standard_group("SL(2)"), standard_group("PGL(2)"),
                                          IntMatrix{{2}}, false));
            RootDatum sl2 = standard_group("SL(2)");
            IntMatrix half(1, 1);
            half(0, 0) = 1;
            QuotientHom qh = central_quotient_hom(sl2, half, 2);
            pool.push_back(make_group_hom(sl2, qh.quotient, qh.cochar, false));
        }
        for (int i = 0; i < 4; ++i) {
            RootDatum t2 = standard_group("Torus(2)");
            IntMatrix m(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) m(r, c) = rng.range(-3, 3);
            pool.push_back(make_group_hom(t2, t2, m, false));
        }

        for (const char* spec : {"GL(2)", "PGL(3)", "Torus(2)", "Sp(4)"}) {
            AbHom idf = pi1_functor(identity_hom(standard_group(spec)));
            require(hom_equal(idf, AbHom::identity(idf.source())),
                    std::string(spec) + ": pi1(id) != id");
        }

        int pairs = 0, attempts = 0;
        while (pairs < 50 && attempts < 4000) {
            ++attempts;
            const GroupHomData& inner = pool[rng.below(pool.size())];
            const GroupHomData& outer = pool[rng.below(pool.size())];
            if (!(inner.target == outer.source)) continue;
            GroupHomData comp = compose(outer, inner);
            AbHom lhs = pi1_functor(comp);
            AbHom rhs = compose(pi1_functor(outer), pi1_functor(inner));
            require(hom_equal(lhs, rhs), "pi1 does not respect composition");
            ++pairs;
        }
        require(pairs >= 50,
                "could not draw 50 composable pairs (got " + std::to_string(pairs) + ")");
        return "50 composable pairs satisfy pi1(lambda . kappa) = pi1(lambda) . pi1(kappa)";
    });
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
    return {catalog_pi1_values(),
            ses_exactness(seed),
            resolution_independence(),
            duality_fuzz(seed + 1),
            fundamental_diagrams(seed + 2),
            gamma_cohomology(seed + 3),
            integer_oracles(seed + 4),
            functoriality(seed + 5)};
}

}  // namespace pi1::verify
