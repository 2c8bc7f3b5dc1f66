#include "pi1/fgab.hpp"

namespace pi1 {

ExactnessResult is_exact(const std::vector<AbHom>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!seq[i].target().same_presentation(seq[i + 1].source()))
            throw InputError("sequence is not composable at position " + std::to_string(i));

    ExactnessResult res;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        const AbHom& f = seq[i];
        const AbHom& g = seq[i + 1];
        IntMatrix img = image_lattice(f);
        IntMatrix ker = preimage_cols(g.matrix(), g.target().relation_cols());
        if (col_lattice_equal(img, ker)) continue;

        res.exact = false;
        res.failing_node = static_cast<int>(i);
        // Distinguish the two failure modes and produce a witness.
        IntMatrix imgb = col_lattice_basis(img);
        for (int j = 0; j < imgb.cols(); ++j) {
            if (!col_lattice_contains(ker, imgb.col(j))) {
                res.witness = imgb.col(j);
                res.reason = "composite is nonzero: image element falls outside the kernel";
                return res;
            }
        }
        for (int j = 0; j < ker.cols(); ++j) {
            if (!col_lattice_contains(img, ker.col(j))) {
                res.witness = ker.col(j);
                res.reason = "kernel element is not in the image";
                return res;
            }
        }
        throw InternalError("lattice comparison inconsistency in is_exact");
    }
    return res;
}

namespace {

std::vector<AbHom> cap(const AbHom& first, std::vector<AbHom> middle, const AbHom& last) {
    std::vector<AbHom> out;
    out.push_back(first);
    for (auto& h : middle) out.push_back(std::move(h));
    out.push_back(last);
    return out;
}

void require_short_exact(const AbHom& l, const AbHom& r, const char* which) {
    auto res = is_exact(cap(AbHom::zero(FgAbGroup::zero(), l.source()), {l, r},
                            AbHom::zero(r.target(), FgAbGroup::zero())));
    if (!res)
        throw InputError(std::string("snake: ") + which + " row is not short exact (node " +
                         std::to_string(res.failing_node) + ": " + res.reason + ")");
}

}  // namespace

std::vector<AbHom> snake_sequence(const SnakeDiagram& d) {
    const AbHom& iota = d.top_left;
    const AbHom& pr = d.top_right;
    const AbHom& iota2 = d.bottom_left;
    const AbHom& pr2 = d.bottom_right;

    require_short_exact(iota, pr, "top");
    require_short_exact(iota2, pr2, "bottom");
    if (!hom_equal(compose(d.vert_b, iota), compose(iota2, d.vert_a)))
        throw InputError("snake: left square does not commute");
    if (!hom_equal(compose(d.vert_c, pr), compose(pr2, d.vert_b)))
        throw InputError("snake: right square does not commute");

    Subgroup ka = kernel(d.vert_a);
    Subgroup kb = kernel(d.vert_b);
    Subgroup kc = kernel(d.vert_c);
    Quotient ca = cokernel(d.vert_a);
    Quotient cb = cokernel(d.vert_b);
    Quotient cc = cokernel(d.vert_c);

    // Kernel maps: push a kernel basis vector along the row and express it in
    // the next kernel's basis.
    auto induced_on_kernels = [](const Subgroup& from, const Subgroup& to, const AbHom& row) {
        IntMatrix mat(to.group.gens(), from.group.gens());
        for (int j = 0; j < from.group.gens(); ++j) {
            IntVec moved = row.apply(from.inclusion.matrix().col(j));
            auto c = solve_cols_mod(to.inclusion.matrix(), row.target().relation_cols(), moved);
            if (!c) throw InternalError("snake: kernel image failed to land in kernel");
            mat.set_col(j, *c);
        }
        return AbHom(from.group, to.group, std::move(mat));
    };
    AbHom ka_kb = induced_on_kernels(ka, kb, iota);
    AbHom kb_kc = induced_on_kernels(kb, kc, pr);

    // Connecting map ker c -> cok a by the usual chase: lift through pr,
    // apply b, pull back through iota'.
    IntMatrix delta(ca.group.gens(), kc.group.gens());
    for (int j = 0; j < kc.group.gens(); ++j) {
        IntVec x = kc.inclusion.matrix().col(j);
        auto y = solve_cols_mod(pr.matrix(), pr.target().relation_cols(), x);
        if (!y) throw InternalError("snake: top projection is not surjective");
        IntVec w = d.vert_b.apply(*y);
        auto z = solve_cols_mod(iota2.matrix(), iota2.target().relation_cols(), w);
        if (!z) throw InternalError("snake: chase element missed the bottom-left image");
        delta.set_col(j, *z);
    }
    AbHom connecting(kc.group, ca.group, std::move(delta));

    // Cokernel maps are induced directly (cokernels reuse ambient generators).
    AbHom ca_cb(ca.group, cb.group, iota2.matrix());
    AbHom cb_cc(cb.group, cc.group, pr2.matrix());

    std::vector<AbHom> out;
    out.push_back(AbHom::zero(FgAbGroup::zero(), ka.group));
    out.push_back(std::move(ka_kb));
    out.push_back(std::move(kb_kc));
    out.push_back(std::move(connecting));
    out.push_back(std::move(ca_cb));
    out.push_back(std::move(cb_cc));
    out.push_back(AbHom::zero(cc.group, FgAbGroup::zero()));
    return out;
}

}  // namespace pi1
