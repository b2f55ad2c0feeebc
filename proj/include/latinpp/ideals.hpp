#pragma once

#include <optional>

#include "latinpp/groebner.hpp"

namespace latinpp {

/// A generator list together with its ring.
struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly> gens;
};

/// Rings of coefficient variables: x0..x{q-2} for univariate polynomials,
/// x{i}{j} (i, j in 0..q-2, row-major) for bivariate ones.
RingPtr pp_ring(const Field& field);
RingPtr lpp_ring(const Field& field);

/// Default orders: precedence x1 > x2 > ... > x{q-2} > x0 on the univariate
/// coefficient ring, row-major (x00 highest) on the bivariate one.
MonomialOrder pp_order(const Field& field, MonomialOrder::Kind kind);
MonomialOrder lpp_order(const Field& field, MonomialOrder::Kind kind);

/// Vanishing ideal of the permutation-polynomial coefficient set: the
/// generators F(sum_i (a^i - b^i) x_i) with F(t) = t^{q-1} - 1, one per
/// unordered pair of distinct field elements, plus all field equations.
/// Requires q >= 3 (degrees then stay below q - 1).
Ideal build_ideal_pp(const Field& field);

/// The bivariate analogue: row and column section constraints for every
/// pair (a, b) and every section index c, plus field equations. The
/// optimized form replaces the section constraints by the reduced basis of
/// build_ideal_pp with x_i substituted by sum_j c^j x_{ji} (rows) and
/// sum_j c^j x_{ij} (columns).
Ideal build_ideal_lpp(const Field& field, bool optimized = true);

/// Degree-restricted variants: coefficients above degree d vanish and some
/// coefficient of degree exactly d is a unit.
Ideal build_ideal_pp_degree(const Field& field, int d);
Ideal build_ideal_lpp_degree(const Field& field, int d, bool optimized = true);

/// Symmetric (x_ij = x_ji) and reduced (first row and column fixed)
/// refinements, optionally degree-restricted.
Ideal build_ideal_symmetric(const Field& field, std::optional<int> d = {},
                            bool optimized = true);
Ideal build_ideal_reduced(const Field& field, std::optional<int> d = {},
                          bool optimized = true);

/// Monic-without-constant-term variant for counting: forces x0 = 0 and
/// x_d = 1; the quotient dimension is N_q(d) / (q (q-1)).
Ideal build_ideal_pp_normalized(const Field& field, int d);

/// N_q(d) computed through build_ideal_pp_normalized.
long long normalized_pp_count(const Field& field, int d,
                              GroebnerOptions options = {});

/// Builder registry for the command line: pp, pp-deg, lpp, lpp-deg,
/// symmetric, reduced.
Ideal build_named_ideal(const Field& field, const std::string& name,
                        std::optional<int> degree, bool optimized);

}  // namespace latinpp
