#include "latinpp/latin.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace latinpp {

namespace {

std::string key_of(const std::vector<uint8_t>& table) {
    return std::string(table.begin(), table.end());
}

void require_lpp(const BiPoly& f, const char* who) {
    if (!is_lpp(f))
        throw domain_error(std::string(who) + " requires a local permutation polynomial");
}

// All q! permutations of [0, q) in lexicographic order.
std::vector<std::vector<uint8_t>> all_permutations(int q) {
    std::vector<uint8_t> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<uint8_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<uint8_t> invert_table(const std::vector<uint8_t>& t) {
    std::vector<uint8_t> inv(t.size());
    for (size_t i = 0; i < t.size(); ++i) inv[t[i]] = static_cast<uint8_t>(i);
    return inv;
}

}  // namespace

LatinSquare::LatinSquare(const Field& field, std::vector<uint8_t> cells)
    : field_(&field), q_(field.order()), cells_(std::move(cells)) {
    if (cells_.size() != static_cast<size_t>(q_ * q_))
        throw usage_error("Latin square needs q*q cells");
    if (!is_latin(field, cells_))
        throw domain_error("array is not a Latin square");
}

bool LatinSquare::is_latin(const Field& field, const std::vector<uint8_t>& cells) {
    int q = field.order();
    if (cells.size() != static_cast<size_t>(q * q)) return false;
    uint32_t full = (uint32_t(1) << q) - 1;
    for (int r = 0; r < q; ++r) {
        uint32_t seen = 0;
        for (int c = 0; c < q; ++c) {
            uint8_t v = cells[r * q + c];
            if (v >= q) return false;
            seen |= uint32_t(1) << v;
        }
        if (seen != full) return false;
    }
    for (int c = 0; c < q; ++c) {
        uint32_t seen = 0;
        for (int r = 0; r < q; ++r) seen |= uint32_t(1) << cells[r * q + c];
        if (seen != full) return false;
    }
    return true;
}

bool LatinSquare::is_reduced() const {
    for (int i = 0; i < q_; ++i)
        if (cell(0, i) != i || cell(i, 0) != i) return false;
    return true;
}

bool LatinSquare::is_symmetric() const {
    for (int r = 0; r < q_; ++r)
        for (int c = r + 1; c < q_; ++c)
            if (cell(r, c) != cell(c, r)) return false;
    return true;
}

Isotopism Isotopism::identity(int q) {
    Isotopism iso;
    iso.row.resize(q);
    iso.col.resize(q);
    iso.sym.resize(q);
    std::iota(iso.row.begin(), iso.row.end(), 0);
    std::iota(iso.col.begin(), iso.col.end(), 0);
    std::iota(iso.sym.begin(), iso.sym.end(), 0);
    return iso;
}

Isotopism Isotopism::inverse() const {
    return Isotopism{invert_table(row), invert_table(col), invert_table(sym)};
}

Isotopism Isotopism::then(const Isotopism& next) const {
    int q = static_cast<int>(row.size());
    Isotopism out;
    out.row.resize(q);
    out.col.resize(q);
    out.sym.resize(q);
    for (int i = 0; i < q; ++i) {
        out.row[i] = next.row[row[i]];
        out.col[i] = next.col[col[i]];
        out.sym[i] = next.sym[sym[i]];
    }
    return out;
}

bool Isotopism::is_identity() const {
    return is_principal() && sym == row && sym == col;
}

bool Isotopism::is_principal() const {
    for (size_t i = 0; i < sym.size(); ++i)
        if (sym[i] != i) return false;
    return true;
}

std::array<UniPoly, 3> Isotopism::to_polynomials(const Field& field) const {
    return {interp_uni(field, row), interp_uni(field, col), interp_uni(field, sym)};
}

long long LppCensus::total() const {
    long long t = 0;
    for (const auto& [d, n] : all) t += n;
    return t;
}

long long LppCensus::reduced_total() const {
    long long t = 0;
    for (const auto& [d, n] : reduced) t += n;
    return t;
}

bool is_lpp(const BiPoly& f) {
    // f is an LPP exactly when its value table is a Latin square.
    return LatinSquare::is_latin(f.field(), f.value_table());
}

bool is_reduced(const BiPoly& f) {
    int q = f.order();
    for (int i = 0; i < q; ++i)
        if (f.eval(static_cast<uint8_t>(i), 0) != i ||
            f.eval(0, static_cast<uint8_t>(i)) != i)
            return false;
    return true;
}

LatinSquare square_from_lpp(const BiPoly& f) {
    require_lpp(f, "square_from_lpp");
    return LatinSquare(f.field(), f.value_table());
}

BiPoly lpp_from_square(const LatinSquare& square) {
    return interp_bi(square.field(), square.cells());
}

void enumerate_latin_squares(const Field& field,
                             const std::function<void(const LatinSquare&)>& fn) {
    int q = field.order();
    if (q > 6) throw capacity_error("Latin square enumeration is limited to q <= 6");

    std::vector<uint8_t> cells(q * q, 0);
    std::vector<uint32_t> row_used(q, 0), col_used(q, 0);

    // Cell-by-cell backtracking in row-major order, symbols ascending.
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == q * q) {
            fn(LatinSquare(field, cells));
            return;
        }
        int r = idx / q, c = idx % q;
        for (int v = 0; v < q; ++v) {
            uint32_t bit = uint32_t(1) << v;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            cells[idx] = static_cast<uint8_t>(v);
            row_used[r] |= bit;
            col_used[c] |= bit;
            self(self, idx + 1);
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
        }
    };
    rec(rec, 0);
}

LppCensus lpp_census(const Field& field) {
    int q = field.order();
    if (q > 5) throw capacity_error("LPP census is limited to q <= 5");
    LppCensus census;
    census.q = q;
    enumerate_latin_squares(field, [&](const LatinSquare& square) {
        BiPoly f = lpp_from_square(square);
        int d = f.total_degree().value();
        ++census.all[d];
        if (square.is_symmetric()) ++census.symmetric[d];
        if (square.is_reduced()) ++census.reduced[d];
    });
    return census;
}

BiPoly apply_isotopism(const BiPoly& f, const Isotopism& iso) {
    require_lpp(f, "apply_isotopism");
    const Field& k = f.field();
    int q = k.order();
    if (iso.row.size() != static_cast<size_t>(q))
        throw usage_error("isotopism order does not match the polynomial");
    std::vector<uint8_t> t = f.value_table(), out(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            out[iso.row[a] * q + iso.col[b]] = iso.sym[t[a * q + b]];
    return interp_bi(k, out);
}

std::optional<Isotopism> are_isotopic(const BiPoly& f, const BiPoly& g) {
    require_same_field(f.field(), g.field());
    const Field& k = f.field();
    int q = k.order();
    if (q > 5) throw capacity_error("isotopism search is limited to q <= 5");
    require_lpp(f, "are_isotopic");
    require_lpp(g, "are_isotopic");

    std::vector<uint8_t> tf = f.value_table(), tg = g.value_table();

    // Transversal count is an isotopy invariant; reject cheap mismatches.
    if (transversal_count(LatinSquare(k, tf)) !=
        transversal_count(LatinSquare(k, tg)))
        return std::nullopt;

    auto perms = all_permutations(q);
    std::vector<uint8_t> sym(q);
    for (const auto& theta1 : perms) {
        for (const auto& theta2 : perms) {
            // Derive the symbol map from row 0, then verify everywhere.
            for (int b = 0; b < q; ++b)
                sym[tf[b]] = tg[theta1[0] * q + theta2[b]];
            bool ok = true;
            for (int a = 0; a < q && ok; ++a)
                for (int b = 0; b < q; ++b)
                    if (tg[theta1[a] * q + theta2[b]] != sym[tf[a * q + b]]) {
                        ok = false;
                        break;
                    }
            if (ok) return Isotopism{theta1, theta2, sym};
        }
    }
    return std::nullopt;
}

std::pair<BiPoly, Isotopism> reduce_lpp(const BiPoly& f, uint8_t a, uint8_t b) {
    require_lpp(f, "reduce_lpp");
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> t = f.value_table();
    if (t[a * q + b] != 0)
        throw domain_error("reduce_lpp requires f(a, b) = 0");

    // p = (f(x+a, b))^-1 and s = (f(a, y+b))^-1, as value tables.
    std::vector<uint8_t> px(q), sy(q);
    for (int x = 0; x < q; ++x) px[x] = t[k.add(static_cast<uint8_t>(x), a) * q + b];
    for (int y = 0; y < q; ++y) sy[y] = t[a * q + k.add(static_cast<uint8_t>(y), b)];
    std::vector<uint8_t> p = invert_table(px), s = invert_table(sy);

    Isotopism witness = Isotopism::identity(q);
    for (int x = 0; x < q; ++x) witness.row[x] = k.add(p[x], a);
    for (int y = 0; y < q; ++y) witness.col[y] = k.add(s[y], b);

    std::vector<uint8_t> rho(q * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            rho[x * q + y] = t[witness.row[x] * q + witness.col[y]];
    return {interp_bi(k, rho), witness};
}

bool is_isolinear(const BiPoly& f) {
    const Field& k = f.field();
    int q = k.order();
    if (q > 7) throw capacity_error("isolinearity test is limited to q <= 7");
    require_lpp(f, "is_isolinear");

    std::vector<uint8_t> t = f.value_table();
    std::vector<uint8_t> r0(q), c0(q);
    for (int x = 0; x < q; ++x) r0[x] = t[x * q + 0];
    for (int y = 0; y < q; ++y) c0[y] = t[0 * q + y];

    // f = h3(h1(x) + h2(y)) can be normalized so h2(0) = 0; then h1 and h2
    // are forced by the boundary sections and only h3 needs enumerating.
    std::vector<uint8_t> h3(q), h1(q), h2(q);
    std::iota(h3.begin(), h3.end(), 0);
    do {
        std::vector<uint8_t> h3inv = invert_table(h3);
        for (int x = 0; x < q; ++x) h1[x] = h3inv[r0[x]];
        uint8_t shift = h1[0];
        for (int y = 0; y < q; ++y) h2[y] = k.sub(h3inv[c0[y]], shift);
        bool ok = true;
        for (int x = 0; x < q && ok; ++x)
            for (int y = 0; y < q; ++y)
                if (t[x * q + y] != h3[k.add(h1[x], h2[y])]) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(h3.begin(), h3.end()));
    return false;
}

std::vector<BiPoly> reduced_lpps(const Field& field) {
    int q = field.order();
    if (q > 5) throw capacity_error("reduced LPP enumeration is limited to q <= 5");
    std::vector<BiPoly> out;
    enumerate_latin_squares(field, [&](const LatinSquare& square) {
        if (square.is_reduced()) out.push_back(lpp_from_square(square));
    });
    return out;
}

std::vector<BiPoly> generate_from_reduced(const Field& field) {
    int q = field.order();
    if (q > 5) throw capacity_error("LPP generation is limited to q <= 5");

    std::vector<std::vector<uint8_t>> reduced_tables;
    enumerate_latin_squares(field, [&](const LatinSquare& square) {
        if (square.is_reduced()) reduced_tables.push_back(square.cells());
    });
    auto perms = all_permutations(q);

    std::unordered_set<std::string> seen;
    std::vector<std::vector<uint8_t>> tables;
    std::vector<uint8_t> composite(q * q);
    for (const auto& base : reduced_tables)
        for (const auto& h : perms)
            for (const auto& h2 : perms) {
                for (int x = 0; x < q; ++x)
                    for (int y = 0; y < q; ++y)
                        composite[x * q + y] = base[h[x] * q + h2[y]];
                if (seen.insert(key_of(composite)).second) tables.push_back(composite);
            }
    std::sort(tables.begin(), tables.end());
    std::vector<BiPoly> out;
    out.reserve(tables.size());
    for (const auto& t : tables) out.push_back(interp_bi(field, t));
    return out;
}

std::vector<IsotopismClass> isotopism_classes(const Field& field) {
    int q = field.order();
    if (q > 5) throw capacity_error("isotopism classification is limited to q <= 5");

    std::vector<std::vector<uint8_t>> tables;
    std::unordered_map<std::string, int> index;
    enumerate_latin_squares(field, [&](const LatinSquare& square) {
        index.emplace(key_of(square.cells()), static_cast<int>(tables.size()));
        tables.push_back(square.cells());
    });

    // Orbit BFS under adjacent-transposition generators in each coordinate.
    std::vector<int> cls(tables.size(), -1);
    std::vector<long long> sizes;
    std::vector<const std::vector<uint8_t>*> reps;
    std::vector<uint8_t> img(q * q);
    auto push_neighbors = [&](const std::vector<uint8_t>& t,
                              std::vector<int>& stack, int id) {
        auto visit = [&]() {
            int j = index.at(key_of(img));
            if (cls[j] < 0) {
                cls[j] = id;
                stack.push_back(j);
            }
        };
        for (int i = 0; i + 1 < q; ++i) {
            // rows i, i+1 swapped
            img = t;
            for (int c = 0; c < q; ++c)
                std::swap(img[i * q + c], img[(i + 1) * q + c]);
            visit();
            // columns i, i+1 swapped
            img = t;
            for (int r = 0; r < q; ++r)
                std::swap(img[r * q + i], img[r * q + i + 1]);
            visit();
            // symbols i, i+1 exchanged
            img = t;
            for (auto& v : img) {
                if (v == i) v = static_cast<uint8_t>(i + 1);
                else if (v == i + 1) v = static_cast<uint8_t>(i);
            }
            visit();
        }
    };

    for (size_t start = 0; start < tables.size(); ++start) {
        if (cls[start] >= 0) continue;
        int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        reps.push_back(nullptr);
        cls[start] = id;
        std::vector<int> stack{static_cast<int>(start)};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++sizes[id];
            const auto& t = tables[i];
            bool reduced = true;
            for (int v = 0; v < q && reduced; ++v)
                reduced = t[v] == v && t[v * q] == v;
            if (reduced && (!reps[id] || t < *reps[id])) reps[id] = &tables[i];
            push_neighbors(t, stack, id);
        }
    }

    std::vector<IsotopismClass> out;
    out.reserve(sizes.size());
    for (size_t id = 0; id < sizes.size(); ++id)
        out.push_back({sizes[id], interp_bi(field, *reps[id])});
    std::sort(out.begin(), out.end(), [](const IsotopismClass& a, const IsotopismClass& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.representative.coeffs() < b.representative.coeffs();
    });
    return out;
}

BiPoly conjugate(const BiPoly& f, const std::array<int, 3>& role) {
    require_lpp(f, "conjugate");
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> t = f.value_table(), out(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::array<uint8_t, 3> e = {static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                                        t[a * q + b]};
            out[e[role[0]] * q + e[role[1]]] = e[role[2]];
        }
    return interp_bi(k, out);
}

std::array<BiPoly, 6> conjugates(const BiPoly& f) {
    return {conjugate(f, {0, 1, 2}), conjugate(f, {1, 0, 2}),
            conjugate(f, {0, 2, 1}), conjugate(f, {2, 0, 1}),
            conjugate(f, {2, 1, 0}), conjugate(f, {1, 2, 0})};
}

bool is_totally_symmetric(const BiPoly& f) {
    for (const BiPoly& g : conjugates(f))
        if (g != f) return false;
    return true;
}

UniPoly hadamard_uni(const BiPoly& f, const UniPoly& g1, const UniPoly& g2) {
    require_same_field(f.field(), g1.field());
    require_same_field(f.field(), g2.field());
    require_lpp(f, "hadamard_uni");
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> vals(q);
    for (int a = 0; a < q; ++a)
        vals[a] = f.eval(g1.eval(static_cast<uint8_t>(a)), g2.eval(static_cast<uint8_t>(a)));
    return interp_uni(k, vals);
}

BiPoly hadamard_bi(const BiPoly& f, const BiPoly& g1, const BiPoly& g2) {
    require_same_field(f.field(), g1.field());
    require_same_field(f.field(), g2.field());
    require_lpp(f, "hadamard_bi");
    require_lpp(g1, "hadamard_bi");
    require_lpp(g2, "hadamard_bi");
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> vals(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            vals[a * q + b] =
                f.eval(g1.eval(static_cast<uint8_t>(a), static_cast<uint8_t>(b)),
                       g2.eval(static_cast<uint8_t>(a), static_cast<uint8_t>(b)));
    return interp_bi(k, vals);
}

namespace {

// Shared kernel: complete-mapping tables of f paired with the orthomorphism
// tables f(x, g(x)).
std::vector<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>>
complete_mapping_tables(const BiPoly& f) {
    const Field& k = f.field();
    int q = k.order();
    if (q > 9) throw capacity_error("complete-mapping search is limited to q <= 9");
    require_lpp(f, "complete_mappings");

    std::vector<uint8_t> t = f.value_table();
    std::vector<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>> out;
    std::vector<uint8_t> g(q), prod(q);
    std::iota(g.begin(), g.end(), 0);
    uint32_t full = (uint32_t(1) << q) - 1;
    do {
        uint32_t seen = 0;
        for (int a = 0; a < q; ++a) {
            prod[a] = t[a * q + g[a]];
            seen |= uint32_t(1) << prod[a];
        }
        if (seen == full) out.emplace_back(g, prod);
    } while (std::next_permutation(g.begin(), g.end()));
    return out;
}

}  // namespace

std::vector<UniPoly> complete_mappings(const BiPoly& f) {
    std::vector<UniPoly> out;
    for (const auto& [g, prod] : complete_mapping_tables(f))
        out.push_back(interp_uni(f.field(), g));
    return out;
}

std::vector<UniPoly> orthomorphisms(const BiPoly& f) {
    std::vector<UniPoly> out;
    for (const auto& [g, prod] : complete_mapping_tables(f))
        out.push_back(interp_uni(f.field(), prod));
    return out;
}

UniPoly map_complete_mapping(const UniPoly& g, const Isotopism& iso) {
    const Field& k = g.field();
    int q = k.order();
    if (iso.row.size() != static_cast<size_t>(q))
        throw usage_error("isotopism order does not match the polynomial");
    std::vector<uint8_t> gt = g.value_table();
    if (!is_permutation_table(k, gt))
        throw domain_error("map_complete_mapping requires a permutation polynomial");
    std::vector<uint8_t> h1inv = invert_table(iso.row), out(q);
    for (int x = 0; x < q; ++x) out[x] = iso.col[gt[h1inv[x]]];
    return interp_uni(k, out);
}

namespace {

template <class Visit>
void for_each_transversal(const LatinSquare& square, Visit&& visit) {
    int q = square.order();
    if (q > 9) throw capacity_error("transversal enumeration is limited to q <= 9");
    std::vector<std::array<uint8_t, 3>> cells(q);
    uint32_t cols_used = 0, syms_used = 0;
    auto rec = [&](auto&& self, int r) -> void {
        if (r == q) {
            visit(cells);
            return;
        }
        for (int c = 0; c < q; ++c) {
            uint32_t cbit = uint32_t(1) << c;
            if (cols_used & cbit) continue;
            uint8_t s = square.cell(r, c);
            uint32_t sbit = uint32_t(1) << s;
            if (syms_used & sbit) continue;
            cells[r] = {static_cast<uint8_t>(r), static_cast<uint8_t>(c), s};
            cols_used |= cbit;
            syms_used |= sbit;
            self(self, r + 1);
            cols_used &= ~cbit;
            syms_used &= ~sbit;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Transversal> transversals(const LatinSquare& square) {
    std::vector<Transversal> out;
    for_each_transversal(square,
                         [&](const std::vector<std::array<uint8_t, 3>>& cells) {
                             out.push_back(Transversal{cells});
                         });
    return out;
}

long long transversal_count(const LatinSquare& square) {
    long long n = 0;
    for_each_transversal(square, [&](const auto&) { ++n; });
    return n;
}

LatinSquare read_square(const Field& field, std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw usage_error("empty Latin square input");
    if (header.rfind("q=", 0) != 0)
        throw usage_error("Latin square input must start with a 'q=<n>' line");
    int q = 0;
    try {
        q = std::stoi(header.substr(2));
    } catch (const std::exception&) {
        throw usage_error("malformed order in Latin square header");
    }
    if (q != field.order())
        throw usage_error("Latin square order does not match the field");
    std::vector<uint8_t> cells;
    cells.reserve(q * q);
    for (int i = 0; i < q * q; ++i) {
        int v;
        if (!(in >> v)) throw usage_error("Latin square input ended early");
        if (v < 0 || v >= q) throw usage_error("cell code out of range");
        cells.push_back(static_cast<uint8_t>(v));
    }
    return LatinSquare(field, std::move(cells));
}

LatinSquare read_square_any_order(std::istream& in) {
    std::string header;
    auto pos = in.tellg();
    if (!std::getline(in, header)) throw usage_error("empty Latin square input");
    if (header.rfind("q=", 0) != 0)
        throw usage_error("Latin square input must start with a 'q=<n>' line");
    int q = 0;
    try {
        q = std::stoi(header.substr(2));
    } catch (const std::exception&) {
        throw usage_error("malformed order in Latin square header");
    }
    in.seekg(pos);
    return read_square(Field::of(q), in);
}

void write_square(std::ostream& out, const LatinSquare& square) {
    int q = square.order();
    out << "q=" << q << "\n";
    for (int r = 0; r < q; ++r) {
        for (int c = 0; c < q; ++c) {
            if (c) out << ' ';
            out << int(square.cell(r, c));
        }
        out << "\n";
    }
}

void write_transversal(std::ostream& out, const Transversal& t) {
    for (const auto& cell : t.cells)
        out << int(cell[0]) << ' ' << int(cell[1]) << ' ' << int(cell[2]) << "\n";
}

}  // namespace latinpp
