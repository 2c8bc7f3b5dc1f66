#include "pi1/json_io.hpp"

#include <fstream>

namespace pi1 {

namespace {

Json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

Int int_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(path + ": not an integer string");
        }
    }
    throw InputError(path + ": expected an integer");
}

const Json& field(const Json& j, const char* name, const std::string& path) {
    if (!j.is_object()) throw InputError(path + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw InputError(path + ": missing field \"" + name + "\"");
    return *it;
}

int int_field(const Json& j, const char* name, const std::string& path) {
    const Json& f = field(j, name, path);
    if (!f.is_number_integer()) throw InputError(path + "/" + name + ": expected an integer");
    return f.get<int>();
}

std::vector<IntVec> vector_list_from_json(const Json& j, int dim, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected an array of vectors");
    std::vector<IntVec> out;
    for (size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        std::string p = path + "/" + std::to_string(i);
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw InputError(p + ": expected a vector of length " + std::to_string(dim));
        IntVec v;
        for (size_t k = 0; k < row.size(); ++k)
            v.push_back(int_from_json(row[k], p + "/" + std::to_string(k)));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> index_list_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected an array of indices");
    std::vector<int> out;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw InputError(path + "/" + std::to_string(i) + ": expected an index");
        out.push_back(j[i].get<int>());
    }
    return out;
}

}  // namespace

Json to_json(const IntMatrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
    int rows = int_field(j, "rows", path);
    int cols = int_field(j, "cols", path);
    const Json& entries = field(j, "entries", path);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw InputError(path + "/entries: expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries[i];
        std::string p = path + "/entries/" + std::to_string(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError(p + ": expected " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k)
            m(i, k) = int_from_json(row[k], p + "/" + std::to_string(k));
    }
    return m;
}

Json to_json(const FgAbGroup& g) {
    return Json{{"generators", g.gens()},
                {"relations", to_json(g.relation_rows())},
                {"canonical", g.to_string()}};
}

FgAbGroup fgab_from_json(const Json& j, const std::string& path) {
    int gens = int_field(j, "generators", path);
    IntMatrix rel = matrix_from_json(field(j, "relations", path), path + "/relations");
    return FgAbGroup::from_relation_rows(gens, rel);
}

Json to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (const auto& row : g.table()) table.push_back(row);
    return Json{{"order", g.order()}, {"table", std::move(table)}};
}

FiniteGroup finite_group_from_json(const Json& j, const std::string& path) {
    int order = int_field(j, "order", path);
    const Json& t = field(j, "table", path);
    if (!t.is_array() || static_cast<int>(t.size()) != order)
        throw InputError(path + "/table: expected " + std::to_string(order) + " rows");
    std::vector<std::vector<int>> table;
    for (size_t i = 0; i < t.size(); ++i)
        table.push_back(index_list_from_json(t[i], path + "/table/" + std::to_string(i)));
    return FiniteGroup(std::move(table));
}

Json to_json(const GammaModule& m) {
    Json act = Json::array();
    for (int g = 0; g < m.group().order(); ++g) act.push_back(to_json(m.action_matrix(g)));
    return Json{{"type", "gamma_module"},
                {"group", to_json(m.group())},
                {"carrier", to_json(m.carrier())},
                {"action", std::move(act)}};
}

GammaModule gamma_module_from_json(const Json& j, const std::string& path) {
    FiniteGroup g = finite_group_from_json(field(j, "group", path), path + "/group");
    FgAbGroup carrier = fgab_from_json(field(j, "carrier", path), path + "/carrier");
    const Json& act = field(j, "action", path);
    if (!act.is_array()) throw InputError(path + "/action: expected an array of matrices");
    std::vector<IntMatrix> matrices;
    for (size_t i = 0; i < act.size(); ++i)
        matrices.push_back(matrix_from_json(act[i], path + "/action/" + std::to_string(i)));
    return GammaModule(std::move(g), std::move(carrier), std::move(matrices));
}

Json to_json(const RootDatum& d) {
    Json roots = Json::array(), coroots = Json::array();
    for (const auto& r : d.roots()) {
        Json v = Json::array();
        for (const auto& x : r) v.push_back(int_to_json(x));
        roots.push_back(std::move(v));
    }
    for (const auto& c : d.coroots()) {
        Json v = Json::array();
        for (const auto& x : c) v.push_back(int_to_json(x));
        coroots.push_back(std::move(v));
    }
    Json out{{"type", "root_datum"},
             {"rank", d.rank()},
             {"roots", std::move(roots)},
             {"coroots", std::move(coroots)}};
    if (d.gamma()) {
        Json act = Json::array();
        for (const auto& m : d.gamma()->char_action) act.push_back(to_json(m));
        out["gamma"] = Json{{"group", to_json(d.gamma()->group)}, {"action", std::move(act)}};
    }
    return out;
}

GammaAction gamma_action_from_json(const Json& j, const std::string& path) {
    FiniteGroup g = finite_group_from_json(field(j, "group", path), path + "/group");
    const Json& act = field(j, "action", path);
    if (!act.is_array()) throw InputError(path + "/action: expected an array of matrices");
    std::vector<IntMatrix> matrices;
    for (size_t i = 0; i < act.size(); ++i)
        matrices.push_back(matrix_from_json(act[i], path + "/action/" + std::to_string(i)));
    return GammaAction{std::move(g), std::move(matrices)};
}

RootDatum root_datum_from_json(const Json& j, const std::string& path) {
    int rank = int_field(j, "rank", path);
    auto roots = vector_list_from_json(field(j, "roots", path), rank, path + "/roots");
    auto coroots = vector_list_from_json(field(j, "coroots", path), rank, path + "/coroots");
    std::optional<GammaAction> gamma;
    if (j.contains("gamma") && !j["gamma"].is_null())
        gamma = gamma_action_from_json(j["gamma"], path + "/gamma");
    return RootDatum(rank, std::move(roots), std::move(coroots), std::move(gamma));
}

Json to_json(const TwoTermComplex& c) {
    return Json{{"type", "two_term_complex"},
                {"base_degree", c.base_degree},
                {"lower", to_json(c.lower)},
                {"upper", to_json(c.upper)},
                {"differential", to_json(c.differential.matrix())}};
}

TwoTermComplex two_term_from_json(const Json& j, const std::string& path) {
    int base = int_field(j, "base_degree", path);
    GammaModule lower = gamma_module_from_json(field(j, "lower", path), path + "/lower");
    GammaModule upper = gamma_module_from_json(field(j, "upper", path), path + "/upper");
    IntMatrix diff = matrix_from_json(field(j, "differential", path), path + "/differential");
    return make_two_term(base, lower, upper, diff);
}

Json to_json(const TResolution& r) {
    return Json{{"type", "t_resolution"},
                {"base", to_json(r.base)},
                {"total", to_json(r.total)},
                {"char_injection", to_json(r.char_injection)},
                {"kernel_restriction", to_json(r.kernel_restriction)},
                {"root_match", r.root_match}};
}

TResolution t_resolution_from_json(const Json& j, const std::string& path) {
    RootDatum base = root_datum_from_json(field(j, "base", path), path + "/base");
    RootDatum total = root_datum_from_json(field(j, "total", path), path + "/total");
    IntMatrix ci = matrix_from_json(field(j, "char_injection", path), path + "/char_injection");
    IntMatrix kr = matrix_from_json(field(j, "kernel_restriction", path),
                                    path + "/kernel_restriction");
    std::vector<int> match = index_list_from_json(field(j, "root_match", path),
                                                  path + "/root_match");
    return make_t_resolution(std::move(base), std::move(total), std::move(ci), std::move(kr),
                             std::move(match));
}

Json to_json(const GroupHomData& h) {
    return Json{{"type", "group_hom"},
                {"source", to_json(h.source)},
                {"target", to_json(h.target)},
                {"cochar_map", to_json(h.cochar_map)},
                {"normal", h.normal}};
}

GroupHomData group_hom_from_json(const Json& j, const std::string& path) {
    RootDatum source = root_datum_from_json(field(j, "source", path), path + "/source");
    RootDatum target = root_datum_from_json(field(j, "target", path), path + "/target");
    IntMatrix m = matrix_from_json(field(j, "cochar_map", path), path + "/cochar_map");
    bool normal = false;
    if (j.contains("normal")) {
        if (!j["normal"].is_boolean()) throw InputError(path + "/normal: expected a boolean");
        normal = j["normal"].get<bool>();
    }
    return make_group_hom(std::move(source), std::move(target), std::move(m), normal);
}

Json to_json(const SESData& s) {
    return Json{{"type", "ses"},
                {"g1", to_json(s.g1)},
                {"g2", to_json(s.g2)},
                {"g3", to_json(s.g3)},
                {"iota_cochar", to_json(s.iota_cochar)},
                {"proj_cochar", to_json(s.proj_cochar)},
                {"roots_from_g1", s.roots_from_g1},
                {"roots_from_g3", s.roots_from_g3}};
}

SESData ses_from_json(const Json& j, const std::string& path) {
    RootDatum g1 = root_datum_from_json(field(j, "g1", path), path + "/g1");
    RootDatum g2 = root_datum_from_json(field(j, "g2", path), path + "/g2");
    RootDatum g3 = root_datum_from_json(field(j, "g3", path), path + "/g3");
    IntMatrix iota = matrix_from_json(field(j, "iota_cochar", path), path + "/iota_cochar");
    IntMatrix proj = matrix_from_json(field(j, "proj_cochar", path), path + "/proj_cochar");
    std::vector<int> from1 = index_list_from_json(field(j, "roots_from_g1", path),
                                                  path + "/roots_from_g1");
    std::vector<int> from3 = index_list_from_json(field(j, "roots_from_g3", path),
                                                  path + "/roots_from_g3");
    return make_ses(std::move(g1), std::move(g2), std::move(g3), std::move(iota),
                    std::move(proj), std::move(from1), std::move(from3));
}

Json to_json(const AbCohProfile& p) {
    Json values = Json::object();
    for (size_t i = 0; i < p.values.size(); ++i)
        values[std::to_string(p.lowest_degree + static_cast<int>(i))] = p.values[i].to_string();
    return Json{{"type", "ab_cohomology_profile"},
                {"values", std::move(values)},
                {"dual_hom", p.dual_hom.to_string()},
                {"dual_ext", p.dual_ext.to_string()}};
}

ParsedInput parse_input_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    const Json& t = field(j, "type", "");
    if (!t.is_string()) throw InputError("/type: expected a string");
    std::string type = t.get<std::string>();
    if (type == "root_datum") return root_datum_from_json(j, "");
    if (type == "ses") return ses_from_json(j, "");
    if (type == "t_resolution") return t_resolution_from_json(j, "");
    if (type == "gamma_module") return gamma_module_from_json(j, "");
    if (type == "two_term_complex") return two_term_from_json(j, "");
    if (type == "group_hom") return group_hom_from_json(j, "");
    throw InputError("/type: unknown input type \"" + type + "\"");
}

ParsedInput parse_input_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw InputError("cannot open file: " + filename);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_input_text(text);
}

}  // namespace pi1
