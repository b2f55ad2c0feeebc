#pragma once

#include <optional>

#include "latinpp/multipoly.hpp"

namespace latinpp {

struct GroebnerOptions {
    /// S-polynomial reductions attempted before giving up. Exhaustion is
    /// reported through GroebnerBasis::complete, not an exception.
    size_t spair_budget = 1u << 20;
};

/// A Groebner basis for an ideal under a fixed monomial order. After
/// reduce_basis the generators are monic, mutually irreducible and sorted
/// ascending by leading monomial; that form is unique per (ideal, order).
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<MultiPoly> gens;
    bool reduced = false;
    bool complete = true;
    size_t spairs_reduced = 0;
};

/// Buchberger's algorithm with the normal selection strategy (minimal lcm
/// degree first), the coprimality criterion and the chain criterion.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order,
                         GroebnerOptions options = {});

/// The unique reduced basis of the same ideal.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

/// Remainder of f under full division by the basis; zero iff f lies in the
/// ideal (when the basis is a complete Groebner basis).
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

/// Every variable has a pure-power leading monomial in the basis.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Number of standard monomials (monomials outside the initial ideal).
/// Requires a complete zero-dimensional basis.
long long quotient_dimension(const GroebnerBasis& gb);

/// All common zeros, as code vectors indexed by ring variable, in ascending
/// lexicographic order. Brute force when q^n is small, otherwise recursive
/// substitution with pruning; a node budget guards runaway inputs.
std::vector<std::vector<uint8_t>> variety(const GroebnerBasis& gb);

/// Generators with the pure field equations x^q - x of variables that occur
/// in no other generator removed (free variables are conventionally
/// suppressed when bases are displayed).
std::vector<MultiPoly> suppress_free_field_equations(const GroebnerBasis& gb);

/// One line per generator in the shared polynomial grammar.
std::vector<std::string> serialize_basis(const GroebnerBasis& gb,
                                         bool suppress_free = false);

}  // namespace latinpp
