#include "pi1/catalog.hpp"

#include <cctype>
#include <map>

namespace pi1 {

IntMatrix cartan_matrix_of_type(char type, int rank) {
    auto chain = [](int l) {
        IntMatrix c(l, l);
        for (int i = 0; i < l; ++i) {
            c(i, i) = 2;
            if (i + 1 < l) {
                c(i, i + 1) = -1;
                c(i + 1, i) = -1;
            }
        }
        return c;
    };
    switch (type) {
        case 'A': {
            if (rank < 1) throw InputError("type A needs rank >= 1");
            return chain(rank);
        }
        case 'B': {
            if (rank < 1) throw InputError("type B needs rank >= 1");
            IntMatrix c = chain(rank);
            if (rank >= 2) c(rank - 1, rank - 2) = -2;  // short last root
            return c;
        }
        case 'C': {
            if (rank < 1) throw InputError("type C needs rank >= 1");
            IntMatrix c = chain(rank);
            if (rank >= 2) c(rank - 2, rank - 1) = -2;  // long last root
            return c;
        }
        case 'D': {
            if (rank < 2) throw InputError("type D needs rank >= 2");
            IntMatrix c = chain(rank - 1);
            IntMatrix full(rank, rank);
            for (int i = 0; i < rank - 1; ++i)
                for (int j = 0; j < rank - 1; ++j) full(i, j) = c(i, j);
            full(rank - 1, rank - 1) = 2;
            if (rank >= 3) {
                full(rank - 3, rank - 1) = -1;
                full(rank - 1, rank - 3) = -1;
            }
            return full;
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw InputError("type E needs rank 6, 7 or 8");
            IntMatrix c(rank, rank);
            for (int i = 0; i < rank; ++i) c(i, i) = 2;
            std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (rank >= 7) edges.push_back({6, 7});
            if (rank == 8) edges.push_back({7, 8});
            for (auto [a, b] : edges) {
                c(a - 1, b - 1) = -1;
                c(b - 1, a - 1) = -1;
            }
            return c;
        }
        case 'F': {
            if (rank != 4) throw InputError("type F needs rank 4");
            return IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
        }
        case 'G': {
            if (rank != 2) throw InputError("type G needs rank 2");
            return IntMatrix{{2, -3}, {-1, 2}};
        }
        default:
            throw InputError(std::string("unknown type '") + type + "'");
    }
}

std::pair<std::vector<IntVec>, std::vector<IntVec>> close_root_system(
    const std::vector<IntVec>& simple_roots, const std::vector<IntVec>& simple_coroots) {
    std::vector<IntVec> roots, coroots;
    std::map<IntVec, int> seen;
    auto add = [&](const IntVec& r, const IntVec& c) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            if (!(coroots[it->second] == c))
                throw InternalError("inconsistent coroot during closure");
            return false;
        }
        seen.emplace(r, static_cast<int>(roots.size()));
        roots.push_back(r);
        coroots.push_back(c);
        return true;
    };
    for (size_t i = 0; i < simple_roots.size(); ++i) {
        add(simple_roots[i], simple_coroots[i]);
        add(scale(-1, simple_roots[i]), scale(-1, simple_coroots[i]));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t s = 0; s < simple_roots.size(); ++s) {
            const IntVec& a = simple_roots[s];
            const IntVec& av = simple_coroots[s];
            for (size_t i = 0; i < roots.size(); ++i) {
                IntVec r = sub(roots[i], scale(dot(roots[i], av), a));
                IntVec c = sub(coroots[i], scale(dot(a, coroots[i]), av));
                if (add(r, c)) changed = true;
            }
        }
    }
    return {std::move(roots), std::move(coroots)};
}

RootDatum simply_connected_datum(char type, int rank) {
    IntMatrix c = cartan_matrix_of_type(type, rank);
    std::vector<IntVec> sroots, scoroots;
    for (int j = 0; j < rank; ++j) {
        sroots.push_back(c.col(j));  // alpha_j in the weight basis
        IntVec e(rank, Int(0));
        e[j] = 1;
        scoroots.push_back(std::move(e));
    }
    auto [roots, coroots] = close_root_system(sroots, scoroots);
    return RootDatum(rank, std::move(roots), std::move(coroots));
}

RootDatum adjoint_datum(char type, int rank) {
    IntMatrix c = cartan_matrix_of_type(type, rank);
    std::vector<IntVec> sroots, scoroots;
    for (int j = 0; j < rank; ++j) {
        IntVec e(rank, Int(0));
        e[j] = 1;
        sroots.push_back(std::move(e));  // alpha_j in the root basis
        scoroots.push_back(c.row(j));
    }
    auto [roots, coroots] = close_root_system(sroots, scoroots);
    return RootDatum(rank, std::move(roots), std::move(coroots));
}

namespace {

RootDatum torus_datum(int r) { return RootDatum(r, {}, {}); }

RootDatum gl_datum(int n) {
    if (n < 1) throw InputError("GL needs n >= 1");
    std::vector<IntVec> roots, coroots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            IntVec v(n, Int(0));
            v[i] = 1;
            v[j] = -1;
            roots.push_back(v);
            coroots.push_back(v);
        }
    return RootDatum(n, std::move(roots), std::move(coroots));
}

RootDatum so_even_datum(int n) {
    // SO(2n), the split orthogonal group: neither simply connected nor
    // adjoint for n >= 2
    std::vector<IntVec> roots, coroots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    IntVec v(n, Int(0));
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(v);
                    coroots.push_back(v);
                }
    return RootDatum(n, std::move(roots), std::move(coroots));
}

// --- spec parser -----------------------------------------------------------

struct Parser {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw InputError("catalog spec parse error: expected '" + std::string(1, c) +
                             "' at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos]))))
            ++pos;
        if (start == pos)
            throw InputError("catalog spec parse error: expected a name at position " +
                             std::to_string(pos) + " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw InputError("catalog spec parse error: expected an integer at position " +
                             std::to_string(pos) + " in \"" + s + "\"");
        return std::stoll(s.substr(start, pos - start));
    }

    RootDatum parse_spec();
};

RootDatum Parser::parse_spec() {
    std::string name = ident();
    expect('(');
    auto close = [&]() { expect(')'); };
    if (name == "Torus") {
        long long r = integer();
        close();
        return torus_datum(static_cast<int>(r));
    }
    if (name == "GL") {
        long long n = integer();
        close();
        return gl_datum(static_cast<int>(n));
    }
    if (name == "SL") {
        long long n = integer();
        close();
        if (n < 1) throw InputError("SL needs n >= 1");
        return n == 1 ? torus_datum(0) : simply_connected_datum('A', static_cast<int>(n - 1));
    }
    if (name == "PGL") {
        long long n = integer();
        close();
        if (n < 1) throw InputError("PGL needs n >= 1");
        return n == 1 ? torus_datum(0) : adjoint_datum('A', static_cast<int>(n - 1));
    }
    if (name == "Sp") {
        long long m = integer();
        close();
        if (m < 2 || m % 2 != 0) throw InputError("Sp needs an even argument >= 2");
        return simply_connected_datum('C', static_cast<int>(m / 2));
    }
    if (name == "SO") {
        long long m = integer();
        close();
        if (m < 2) throw InputError("SO needs an argument >= 2");
        if (m == 2) return torus_datum(1);
        if (m % 2 == 1) return adjoint_datum('B', static_cast<int>((m - 1) / 2));
        return so_even_datum(static_cast<int>(m / 2));
    }
    if (name == "Spin") {
        long long m = integer();
        close();
        if (m < 3) throw InputError("Spin needs an argument >= 3");
        if (m % 2 == 1) return simply_connected_datum('B', static_cast<int>((m - 1) / 2));
        return simply_connected_datum('D', static_cast<int>(m / 2));
    }
    if (name == "SC" || name == "ADJ") {
        std::string t = ident();
        if (t.size() != 1) throw InputError("type must be a single letter A-G");
        expect(',');
        long long l = integer();
        close();
        return name == "SC" ? simply_connected_datum(t[0], static_cast<int>(l))
                            : adjoint_datum(t[0], static_cast<int>(l));
    }
    if (name == "Product") {
        RootDatum acc = parse_spec();
        while (eat(',')) acc = product_datum(acc, parse_spec());
        close();
        return acc;
    }
    if (name == "CentralQuotient") {
        RootDatum base = parse_spec();
        expect(',');
        // generators: [a/b, c, ...] separated by ';'
        std::vector<std::vector<std::pair<long long, long long>>> gens;
        do {
            expect('[');
            std::vector<std::pair<long long, long long>> vec;
            if (!eat(']')) {
                do {
                    long long num = integer();
                    long long den = 1;
                    if (eat('/')) den = integer();
                    if (den <= 0) throw InputError("generator denominators must be positive");
                    vec.emplace_back(num, den);
                } while (eat(','));
                expect(']');
            }
            gens.push_back(std::move(vec));
        } while (eat(';'));
        close();
        Int d = 1;
        for (const auto& v : gens)
            for (const auto& [num, den] : v) d = lcm(d, Int(den));
        IntMatrix nums(base.rank(), static_cast<int>(gens.size()));
        for (size_t j = 0; j < gens.size(); ++j) {
            if (static_cast<int>(gens[j].size()) != base.rank())
                throw InputError("central quotient generator " + std::to_string(j) +
                                 " has wrong dimension");
            for (int i = 0; i < base.rank(); ++i)
                nums(i, static_cast<int>(j)) = Int(gens[j][i].first) * (d / Int(gens[j][i].second));
        }
        return central_quotient(base, nums, d);
    }
    throw InputError("unknown catalog name: " + name);
}

}  // namespace

RootDatum standard_group(const std::string& spec) {
    Parser p{spec};
    RootDatum d = p.parse_spec();
    p.skip_ws();
    if (p.pos != spec.size())
        throw InputError("catalog spec parse error: trailing input in \"" + spec + "\"");
    return d;
}

std::vector<std::string> catalog_names() {
    return {"Torus(r)",
            "GL(n)",
            "SL(n)",
            "PGL(n)",
            "Sp(2n)",
            "SO(n)",
            "Spin(n)",
            "SC(T,l)  T in A..G",
            "ADJ(T,l)  T in A..G",
            "Product(spec, spec, ...)",
            "CentralQuotient(spec, [a/b, ...]; ...)"};
}

}  // namespace pi1
