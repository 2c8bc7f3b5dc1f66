#include "pi1/cli.hpp"

#include "pi1/catalog.hpp"
#include "pi1/cohomology_profile.hpp"
#include "pi1/json_io.hpp"
#include "pi1/verify.hpp"

#include <ostream>

namespace pi1 {

namespace {

constexpr const char* kUsage =
    "usage: pi1 <verb> [options] [spec...]\n"
    "\n"
    "verbs:\n"
    "  pi1 <spec>           fundamental group of a catalog group or datum file\n"
    "  invariants <spec>    derived invariants (pi1, mu, center, torus part)\n"
    "  resolve <spec>       build a resolution and report it\n"
    "  check-exact <file>   verify a short exact sequence file on pi1\n"
    "  qiso <spec>          quasi-isomorphism certificate for a resolution\n"
    "  cohomology ...       group cohomology of a module file, or --profile <spec>\n"
    "  catalog list|show    list catalog names or print a datum\n"
    "  verify-suite         run the full verification suites\n"
    "\n"
    "options:\n"
    "  --file <path>        read the group datum from a JSON file\n"
    "  --gamma <path>       attach a finite-group action from a JSON file\n"
    "  --resolution <kind>  direct | torus | generic | m   (default: direct)\n"
    "  --degree <i>         cohomology degree (0, 1, 2 or all)\n"
    "  --profile            compute the abelianized cohomology profile\n"
    "  --seed <n>           seed for the fuzzing suites (default 2024)\n"
    "  --json               machine-readable output\n";

struct Options {
    std::string verb;
    std::vector<std::string> positional;
    std::string file;
    std::string gamma_file;
    std::string resolution = "direct";
    std::string degree = "all";
    bool profile = false;
    bool json = false;
    std::uint64_t seed = 2024;
};

Options parse_options(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw InputError("no verb given");
    o.verb = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need_value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                throw InputError(std::string(flag) + " requires a value");
            return args[++i];
        };
        if (a == "--json") {
            o.json = true;
        } else if (a == "--profile") {
            o.profile = true;
        } else if (a == "--file") {
            o.file = need_value("--file");
        } else if (a == "--gamma") {
            o.gamma_file = need_value("--gamma");
        } else if (a == "--resolution") {
            o.resolution = need_value("--resolution");
        } else if (a == "--degree") {
            o.degree = need_value("--degree");
        } else if (a == "--seed") {
            o.seed = std::stoull(need_value("--seed"));
        } else if (!a.empty() && a[0] == '-') {
            throw InputError("unknown option: " + a);
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

// "PGL 3" and "PGL(3)" both name the same catalog entry.
std::string spec_from_positional(const std::vector<std::string>& pos) {
    if (pos.empty()) throw InputError("missing group spec");
    if (pos.size() == 1) return pos[0];
    std::string s = pos[0] + "(";
    for (size_t i = 1; i < pos.size(); ++i) {
        if (i > 1) s += ",";
        s += pos[i];
    }
    return s + ")";
}

RootDatum load_datum(const Options& o) {
    RootDatum d = [&]() {
        if (!o.file.empty()) {
            ParsedInput p = parse_input_file(o.file);
            if (auto* rd = std::get_if<RootDatum>(&p)) return *rd;
            throw InputError(o.file + ": expected a root_datum file");
        }
        return standard_group(spec_from_positional(o.positional));
    }();
    if (!o.gamma_file.empty()) {
        std::ifstream probe(o.gamma_file);
        Json j;
        {
            std::ifstream in(o.gamma_file);
            if (!in) throw InputError("cannot open file: " + o.gamma_file);
            in >> j;
        }
        GammaAction ga = gamma_action_from_json(j, "");
        return RootDatum(d.rank(), d.roots(), d.coroots(), std::move(ga));
    }
    return d;
}

TResolution build_resolution(const RootDatum& d, const std::string& kind) {
    if (kind == "torus" || kind == "direct") return t_resolution_from_torus(d);
    if (kind == "generic") return t_resolution_generic(d, default_embedding_choice(d));
    throw InputError("unknown resolution kind: " + kind);
}

FgAbGroup pi1_by_route(const RootDatum& d, const std::string& kind) {
    if (kind == "direct") return fundamental_invariants(d).pi1;
    if (kind == "m") return pi1_via_m_resolution(d);
    return pi1_of_resolution(build_resolution(d, kind));
}

int cmd_pi1(const Options& o, std::ostream& out) {
    RootDatum d = load_datum(o);
    FgAbGroup pi1 = pi1_by_route(d, o.resolution);
    if (o.json) {
        Json j{{"pi1", pi1.to_string()}, {"route", o.resolution}};
        out << j.dump(2) << "\n";
    } else {
        out << pi1.to_string() << "\n";
    }
    return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
    RootDatum d = load_datum(o);
    GroupInvariants inv = fundamental_invariants(d);
    if (o.json) {
        Json j{{"pi1", inv.pi1.to_string()},
               {"mu_star", inv.mu_star.to_string()},
               {"mu_minus_one", inv.mu_minus_one.to_string()},
               {"center_chars", inv.center_chars.to_string()},
               {"torus_cochars", inv.cochar_torus_quotient.to_string()},
               {"semisimple", inv.is_semisimple},
               {"simply_connected", inv.is_simply_connected},
               {"adjoint", inv.is_adjoint}};
        out << j.dump(2) << "\n";
    } else {
        out << "pi1: " << inv.pi1.to_string() << "\n";
        out << "mu*: " << inv.mu_star.to_string() << "\n";
        out << "mu(-1): " << inv.mu_minus_one.to_string() << "\n";
        out << "center characters: " << inv.center_chars.to_string() << "\n";
        out << "torus cocharacters: " << inv.cochar_torus_quotient.to_string() << "\n";
        out << "semisimple: " << (inv.is_semisimple ? "yes" : "no") << "\n";
        out << "simply connected: " << (inv.is_simply_connected ? "yes" : "no") << "\n";
        out << "adjoint: " << (inv.is_adjoint ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_resolve(const Options& o, std::ostream& out) {
    RootDatum d = load_datum(o);
    if (o.resolution == "m") {
        MResolution m = m_resolution(d);
        if (o.json) {
            Json j{{"kind", "m"},
                   {"kernel_chars", m.kernel_chars.to_string()},
                   {"total", to_json(m.total)},
                   {"pi1", m.pi1.to_string()}};
            out << j.dump(2) << "\n";
        } else {
            out << "m-resolution kernel characters: " << m.kernel_chars.to_string() << "\n";
            out << "total rank: " << m.total.rank() << "\n";
            out << "pi1: " << m.pi1.to_string() << "\n";
        }
        return 0;
    }
    std::string kind = o.resolution == "direct" ? "torus" : o.resolution;
    TResolution r = build_resolution(d, kind);
    if (o.json) {
        Json j = to_json(r);
        j["pi1"] = pi1_of_resolution(r).to_string();
        out << j.dump(2) << "\n";
    } else {
        out << "kernel rank: " << r.kernel_rank() << "\n";
        out << "total rank: " << r.total.rank() << "\n";
        out << "pi1: " << pi1_of_resolution(r).to_string() << "\n";
    }
    return 0;
}

int cmd_check_exact(const Options& o, std::ostream& out, std::ostream& err) {
    std::string path = !o.file.empty()
                           ? o.file
                           : (o.positional.empty() ? std::string() : o.positional[0]);
    if (path.empty()) throw InputError("check-exact requires a sequence file");
    ParsedInput p = parse_input_file(path);
    auto* ses = std::get_if<SESData>(&p);
    if (!ses) throw InputError(path + ": expected a ses file");
    try {
        Pi1Exactness res = check_pi1_exact(*ses);
        std::string rendered = "0 -> " + res.sequence[1].source().to_string() + " -> " +
                               res.sequence[1].target().to_string() + " -> " +
                               res.sequence[2].target().to_string() + " -> 0";
        if (o.json) {
            Json j{{"exact", true}, {"sequence", rendered}};
            out << j.dump(2) << "\n";
        } else {
            out << "exact\n" << rendered << "\n";
        }
        return 0;
    } catch (const InternalError& e) {
        err << "not exact: " << e.what() << "\n";
        return 1;
    }
}

int cmd_qiso(const Options& o, std::ostream& out) {
    RootDatum d = load_datum(o);
    std::string kind = o.resolution == "direct" ? "torus" : o.resolution;
    TResolution r = build_resolution(d, kind);
    QisoCertificate cert = qiso_certificate(r);
    if (o.json) {
        Json j{{"legs", cert.legs.size()},
               {"h_minus_one", cert.h_minus_one.to_string()},
               {"h_zero", cert.h_zero.to_string()}};
        out << j.dump(2) << "\n";
    } else {
        out << "zig-zag of " << cert.legs.size() << " verified quasi-isomorphisms\n";
        out << "H^-1: " << cert.h_minus_one.to_string() << "\n";
        out << "H^0: " << cert.h_zero.to_string() << "\n";
    }
    return 0;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    if (o.profile) {
        RootDatum d = load_datum(o);
        std::string kind = o.resolution == "direct" ? "torus" : o.resolution;
        AbCohProfile p = ab_cohomology_profile(d, build_resolution(d, kind));
        if (o.json) {
            out << to_json(p).dump(2) << "\n";
        } else {
            for (int i = -1; i <= 2; ++i)
                out << "H^" << i << "_ab: " << p.value(i).to_string() << "\n";
            out << "dual hom: " << p.dual_hom.to_string() << "\n";
            out << "dual ext: " << p.dual_ext.to_string() << "\n";
        }
        return 0;
    }
    std::string path = !o.file.empty()
                           ? o.file
                           : (o.positional.empty() ? std::string() : o.positional[0]);
    if (path.empty()) throw InputError("cohomology requires a gamma_module file or --profile");
    ParsedInput p = parse_input_file(path);
    auto* m = std::get_if<GammaModule>(&p);
    if (!m) throw InputError(path + ": expected a gamma_module file");
    auto print_one = [&](int i) {
        out << "H^" << i << ": " << group_cohomology(*m, i).to_string() << "\n";
    };
    if (o.degree == "all") {
        for (int i = 0; i <= 2; ++i) print_one(i);
    } else {
        print_one(std::stoi(o.degree));
    }
    return 0;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    if (o.positional.empty()) throw InputError("catalog requires 'list' or 'show <spec>'");
    if (o.positional[0] == "list") {
        for (const auto& name : catalog_names()) out << name << "\n";
        return 0;
    }
    if (o.positional[0] == "show") {
        std::vector<std::string> rest(o.positional.begin() + 1, o.positional.end());
        RootDatum d = standard_group(spec_from_positional(rest));
        out << to_json(d).dump(2) << "\n";
        return 0;
    }
    throw InputError("catalog requires 'list' or 'show <spec>'");
}

int cmd_verify_suite(const Options& o, std::ostream& out) {
    auto results = verify::run_all(o.seed);
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
        all = all && r.passed;
    }
    out << (all ? "all suites passed\n" : "some suites failed\n");
    return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    try {
        o = parse_options(args);
        if (o.verb == "help" || o.verb == "--help") {
            out << kUsage;
            return 0;
        }
        if (o.verb == "pi1") return cmd_pi1(o, out);
        if (o.verb == "invariants") return cmd_invariants(o, out);
        if (o.verb == "resolve") return cmd_resolve(o, out);
        if (o.verb == "check-exact") return cmd_check_exact(o, out, err);
        if (o.verb == "qiso") return cmd_qiso(o, out);
        if (o.verb == "cohomology") return cmd_cohomology(o, out);
        if (o.verb == "catalog") return cmd_catalog(o, out);
        if (o.verb == "verify-suite") return cmd_verify_suite(o, out);
        throw InputError("unknown verb: " + o.verb);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        if (o.verb.empty() || std::string(e.what()).rfind("unknown verb", 0) == 0 ||
            std::string(e.what()) == "no verb given")
            err << kUsage;
        return 2;
    } catch (const InternalError& e) {
        err << "mathematical failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pi1
