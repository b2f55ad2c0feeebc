#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>

#include "latinpp/poly.hpp"

namespace latinpp {

/// A q x q array over GF(q) in which every row and every column is a
/// permutation of the field. cell(r, c) is the symbol at row r, column c.
class LatinSquare {
public:
    LatinSquare(const Field& field, std::vector<uint8_t> cells);  // row-major

    const Field& field() const { return *field_; }
    int order() const { return q_; }
    uint8_t cell(int r, int c) const { return cells_[r * q_ + c]; }
    const std::vector<uint8_t>& cells() const { return cells_; }

    bool is_reduced() const;    // first row and first column are the identity
    bool is_symmetric() const;  // cell(r, c) == cell(c, r)

    bool operator==(const LatinSquare& o) const { return cells_ == o.cells_; }
    bool operator!=(const LatinSquare& o) const { return !(*this == o); }

    static bool is_latin(const Field& field, const std::vector<uint8_t>& cells);

private:
    const Field* field_;
    int q_;
    std::vector<uint8_t> cells_;
};

/// A triple of permutations of GF(q) acting on rows, columns and symbols,
/// stored as value tables.
struct Isotopism {
    std::vector<uint8_t> row, col, sym;

    static Isotopism identity(int q);
    Isotopism inverse() const;
    /// Composition as actions: (a.then(b)) applies a first, then b.
    Isotopism then(const Isotopism& next) const;
    bool is_identity() const;
    bool is_principal() const;  // symbol component is the identity

    /// The three components as permutation polynomials.
    std::array<UniPoly, 3> to_polynomials(const Field& field) const;
};

/// q cells of a Latin square covering every row, column and symbol once.
struct Transversal {
    std::vector<std::array<uint8_t, 3>> cells;  // (row, col, symbol), row-sorted
};

/// Per-degree counts of all / symmetric / reduced local permutation
/// polynomials of a given order.
struct LppCensus {
    int q = 0;
    std::map<int, long long> all, symmetric, reduced;

    long long total() const;
    long long reduced_total() const;
};

struct IsotopismClass {
    long long size = 0;
    BiPoly representative;  // lexicographically least reduced member
};

/// True iff every section f(x, b) and f(a, y) permutes GF(q).
bool is_lpp(const BiPoly& f);

/// f(x, 0) = x and f(0, y) = y; equivalently f = g*x*y + x + y.
bool is_reduced(const BiPoly& f);

/// Mutually inverse bijections between LPPs and Latin squares.
LatinSquare square_from_lpp(const BiPoly& f);
BiPoly lpp_from_square(const LatinSquare& square);

/// Deterministic row-by-row backtracking over all Latin squares of order q,
/// symbols tried in ascending code order. Guarded at q <= 6.
void enumerate_latin_squares(const Field& field,
                             const std::function<void(const LatinSquare&)>& fn);

/// Interpolates every Latin square of order q and buckets by total degree.
/// Guarded at q <= 5.
LppCensus lpp_census(const Field& field);

/// The image g of f under an isotopism: g = sym . f . (row^-1, col^-1),
/// i.e. the unique g with g[row, col] = sym f.
BiPoly apply_isotopism(const BiPoly& f, const Isotopism& iso);

/// Searches for an isotopism mapping f onto g (exhaustive over row/column
/// permutations with the symbol map derived from one row). Guarded q <= 5.
std::optional<Isotopism> are_isotopic(const BiPoly& f, const BiPoly& g);

/// Principal reduction at a zero (a, b) of f: returns the reduced polynomial
/// rho = f[p + a, s + b] with p = (f(x+a, b))^-1 and s = (f(a, x+b))^-1,
/// together with the witness triple (p + a, s + b, id). The witness satisfies
/// apply_isotopism(rho, witness) == f.
std::pair<BiPoly, Isotopism> reduce_lpp(const BiPoly& f, uint8_t a, uint8_t b);

/// True iff f is isotopic to x + y, i.e. f = h3(h1(x) + h2(y)) for some
/// permutation polynomials. Enumerates only h3 (q! candidates); h1 and h2
/// are forced by the boundary sections. Guarded q <= 7.
bool is_isolinear(const BiPoly& f);

/// All LPPs of order q, generated as f[h, h'] over every reduced LPP f and
/// every pair of PPs, deduplicated. Guarded q <= 5.
std::vector<BiPoly> generate_from_reduced(const Field& field);

/// All reduced LPPs of order q in ascending value-table order. Guarded q <= 5.
std::vector<BiPoly> reduced_lpps(const Field& field);

/// Partition of all LPPs of order q into isotopism classes, sorted by
/// ascending class size (ties by representative value table). Guarded q <= 5.
std::vector<IsotopismClass> isotopism_classes(const Field& field);

/// The conjugate of f under a permutation of the (row, column, symbol)
/// roles. role[k] names which original role lands in position k
/// (0 = row, 1 = column, 2 = symbol).
BiPoly conjugate(const BiPoly& f, const std::array<int, 3>& role);

/// The six conjugates in the fixed order
/// (r,c,s), (c,r,s), (r,s,c), (s,r,c), (s,c,r), (c,s,r).
std::array<BiPoly, 6> conjugates(const BiPoly& f);

/// All six conjugates equal f itself.
bool is_totally_symmetric(const BiPoly& f);

/// Hadamard quasigroup products: pointwise f applied to g1, g2.
UniPoly hadamard_uni(const BiPoly& f, const UniPoly& g1, const UniPoly& g2);
BiPoly hadamard_bi(const BiPoly& f, const BiPoly& g1, const BiPoly& g2);

/// All PPs g with x -> f(x, g(x)) again a PP, in ascending value-table
/// order; orthomorphisms are the corresponding products f(x, g(x)).
/// Guarded q <= 9.
std::vector<UniPoly> complete_mappings(const BiPoly& f);
std::vector<UniPoly> orthomorphisms(const BiPoly& f);

/// h2 . g . h1^-1 for an isotopism (h1, h2, h3): maps complete mappings of f
/// onto complete mappings of apply_isotopism(f, iso).
UniPoly map_complete_mapping(const UniPoly& g, const Isotopism& iso);

/// Backtracking enumeration of all transversals, in ascending order of the
/// column sequence. Guarded q <= 9.
std::vector<Transversal> transversals(const LatinSquare& square);
long long transversal_count(const LatinSquare& square);

/// Text format: first line "q=<n>", then q rows of q space-separated codes.
LatinSquare read_square(const Field& field, std::istream& in);
LatinSquare read_square_any_order(std::istream& in);  // derives the field
void write_square(std::ostream& out, const LatinSquare& square);

/// One transversal as q lines "row col symbol".
void write_transversal(std::ostream& out, const Transversal& t);

}  // namespace latinpp
