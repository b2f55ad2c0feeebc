#include "latinpp/ideals.hpp"

#include <numeric>

namespace latinpp {

namespace {

int lpp_var(const Field& field, int i, int j) { return i * (field.order() - 1) + j; }

void require_small_degree_ring(const Field& field) {
    if (field.order() < 3)
        throw usage_error("coefficient ideals need q >= 3 (degrees up to q-2)");
}

MultiPoly field_equation(const RingPtr& ring, int var) {
    int q = ring->field->order();
    return MultiPoly::variable(ring, var, q) - MultiPoly::variable(ring, var);
}

/// F(linear) = linear^{q-1} - 1 for a linear form given by per-variable
/// coefficient codes.
MultiPoly section_constraint(const RingPtr& ring, const std::vector<uint8_t>& coeffs) {
    std::vector<MultiPoly::Term> terms;
    for (int v = 0; v < ring->arity(); ++v) {
        if (coeffs[v] == 0) continue;
        Monomial m(ring->arity());
        m.set_exp(v, 1);
        terms.push_back({m, coeffs[v]});
    }
    MultiPoly linear(ring, std::move(terms));
    MultiPoly power = MultiPoly::constant(ring, 1);
    for (int e = 0; e < ring->field->order() - 1; ++e) power = power * linear;
    return power - MultiPoly::constant(ring, 1);
}

/// Rewrites a polynomial over pp_ring into another ring, replacing variable
/// i by images[i].
MultiPoly transplant(const MultiPoly& f, const RingPtr& target,
                     const std::vector<MultiPoly>& images) {
    MultiPoly out = MultiPoly::zero(target);
    for (const auto& t : f.terms()) {
        MultiPoly piece = MultiPoly::constant(target, t.coeff);
        for (int v = 0; v < t.mono.arity(); ++v)
            for (int e = 0; e < t.mono.exp(v); ++e) piece = piece * images[v];
        out = out + piece;
    }
    return out;
}

}  // namespace

RingPtr pp_ring(const Field& field) {
    std::vector<std::string> vars;
    for (int i = 0; i <= field.order() - 2; ++i) vars.push_back("x" + std::to_string(i));
    return make_ring(field, std::move(vars));
}

RingPtr lpp_ring(const Field& field) {
    std::vector<std::string> vars;
    for (int i = 0; i <= field.order() - 2; ++i)
        for (int j = 0; j <= field.order() - 2; ++j)
            vars.push_back("x" + std::to_string(i) + std::to_string(j));
    return make_ring(field, std::move(vars));
}

MonomialOrder pp_order(const Field& field, MonomialOrder::Kind kind) {
    // x1 > x2 > ... > x{q-2} > x0
    std::vector<int> prec;
    for (int i = 1; i <= field.order() - 2; ++i) prec.push_back(i);
    prec.push_back(0);
    return kind == MonomialOrder::Kind::lex ? MonomialOrder::lex(prec)
                                            : MonomialOrder::degrevlex(prec);
}

MonomialOrder lpp_order(const Field& field, MonomialOrder::Kind kind) {
    // Row-major: x00 > x01 > ... > x{q-2}{q-2}
    int n = (field.order() - 1) * (field.order() - 1);
    std::vector<int> prec(n);
    std::iota(prec.begin(), prec.end(), 0);
    return kind == MonomialOrder::Kind::lex ? MonomialOrder::lex(prec)
                                            : MonomialOrder::degrevlex(prec);
}

Ideal build_ideal_pp(const Field& field) {
    require_small_degree_ring(field);
    const Field& k = field;
    int q = k.order();
    RingPtr ring = pp_ring(field);

    Ideal ideal{ring, {}};
    for (int v = 0; v < ring->arity(); ++v)
        ideal.gens.push_back(field_equation(ring, v));
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            std::vector<uint8_t> coeffs(ring->arity(), 0);
            for (int i = 1; i <= q - 2; ++i)
                coeffs[i] = k.sub(k.pow(static_cast<uint8_t>(a), i),
                                  k.pow(static_cast<uint8_t>(b), i));
            ideal.gens.push_back(section_constraint(ring, coeffs));
        }
    return ideal;
}

Ideal build_ideal_lpp(const Field& field, bool optimized) {
    require_small_degree_ring(field);
    const Field& k = field;
    int q = k.order();
    RingPtr ring = lpp_ring(field);

    Ideal ideal{ring, {}};
    for (int v = 0; v < ring->arity(); ++v)
        ideal.gens.push_back(field_equation(ring, v));

    if (!optimized) {
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    std::vector<uint8_t> row(ring->arity(), 0), col(ring->arity(), 0);
                    for (int i = 1; i <= q - 2; ++i) {
                        uint8_t di = k.sub(k.pow(static_cast<uint8_t>(a), i),
                                           k.pow(static_cast<uint8_t>(b), i));
                        if (di == 0) continue;
                        for (int j = 0; j <= q - 2; ++j) {
                            uint8_t cj = k.mul(di, k.pow(static_cast<uint8_t>(c), j));
                            row[lpp_var(k, j, i)] = k.add(row[lpp_var(k, j, i)], cj);
                            col[lpp_var(k, i, j)] = k.add(col[lpp_var(k, i, j)], cj);
                        }
                    }
                    ideal.gens.push_back(section_constraint(ring, row));
                    ideal.gens.push_back(section_constraint(ring, col));
                }
        return ideal;
    }

    // Substitute the reduced univariate-coefficient basis into each section.
    Ideal base = build_ideal_pp(field);
    GroebnerBasis gb =
        reduce_basis(buchberger(base.gens, pp_order(field, MonomialOrder::Kind::degrevlex)));
    std::vector<MultiPoly> reduced = suppress_free_field_equations(gb);

    for (int c = 0; c < q; ++c) {
        std::vector<MultiPoly> row_images, col_images;
        for (int i = 0; i <= q - 2; ++i) {
            std::vector<MultiPoly::Term> row_terms, col_terms;
            for (int j = 0; j <= q - 2; ++j) {
                uint8_t cj = k.pow(static_cast<uint8_t>(c), j);
                if (cj == 0) continue;
                Monomial mr(ring->arity());
                mr.set_exp(lpp_var(k, j, i), 1);
                row_terms.push_back({mr, cj});
                Monomial mc(ring->arity());
                mc.set_exp(lpp_var(k, i, j), 1);
                col_terms.push_back({mc, cj});
            }
            row_images.push_back(MultiPoly(ring, std::move(row_terms)));
            col_images.push_back(MultiPoly(ring, std::move(col_terms)));
        }
        for (const MultiPoly& g : reduced) {
            ideal.gens.push_back(transplant(g, ring, row_images).fold_exponents());
            ideal.gens.push_back(transplant(g, ring, col_images).fold_exponents());
        }
    }
    return ideal;
}

Ideal build_ideal_pp_degree(const Field& field, int d) {
    int q = field.order();
    if (d < 1 || d > q - 2)
        throw usage_error("degree must lie in [1, q-2]");
    Ideal ideal = build_ideal_pp(field);
    const RingPtr& ring = ideal.ring;
    for (int i = d + 1; i <= q - 2; ++i)
        ideal.gens.push_back(MultiPoly::variable(ring, i));
    ideal.gens.push_back(MultiPoly::variable(ring, d, q - 1) -
                         MultiPoly::constant(ring, 1));
    return ideal;
}

Ideal build_ideal_lpp_degree(const Field& field, int d, bool optimized) {
    int q = field.order();
    if (d < 1 || d > 2 * q - 4)
        throw usage_error("total degree must lie in [1, 2q-4]");
    Ideal ideal = build_ideal_lpp(field, optimized);
    const RingPtr& ring = ideal.ring;
    for (int i = 0; i <= q - 2; ++i)
        for (int j = 0; j <= q - 2; ++j)
            if (i + j > d)
                ideal.gens.push_back(MultiPoly::variable(ring, lpp_var(field, i, j)));
    MultiPoly prod = MultiPoly::constant(ring, 1);
    for (int i = 0; i <= q - 2; ++i) {
        int j = d - i;
        if (j < 0 || j > q - 2) continue;
        prod = prod * (MultiPoly::variable(ring, lpp_var(field, i, j), q - 1) -
                       MultiPoly::constant(ring, 1));
    }
    ideal.gens.push_back(prod.fold_exponents());
    return ideal;
}

Ideal build_ideal_symmetric(const Field& field, std::optional<int> d, bool optimized) {
    Ideal ideal = d ? build_ideal_lpp_degree(field, *d, optimized)
                    : build_ideal_lpp(field, optimized);
    int q = field.order();
    for (int i = 0; i <= q - 2; ++i)
        for (int j = i + 1; j <= q - 2; ++j)
            ideal.gens.push_back(MultiPoly::variable(ideal.ring, lpp_var(field, i, j)) -
                                 MultiPoly::variable(ideal.ring, lpp_var(field, j, i)));
    return ideal;
}

Ideal build_ideal_reduced(const Field& field, std::optional<int> d, bool optimized) {
    Ideal ideal = d ? build_ideal_lpp_degree(field, *d, optimized)
                    : build_ideal_lpp(field, optimized);
    const RingPtr& ring = ideal.ring;
    int q = field.order();
    ideal.gens.push_back(MultiPoly::variable(ring, lpp_var(field, 0, 0)));
    ideal.gens.push_back(MultiPoly::variable(ring, lpp_var(field, 1, 0)) -
                         MultiPoly::constant(ring, 1));
    ideal.gens.push_back(MultiPoly::variable(ring, lpp_var(field, 0, 1)) -
                         MultiPoly::constant(ring, 1));
    for (int i = 2; i <= q - 2; ++i) {
        ideal.gens.push_back(MultiPoly::variable(ring, lpp_var(field, 0, i)));
        ideal.gens.push_back(MultiPoly::variable(ring, lpp_var(field, i, 0)));
    }
    return ideal;
}

Ideal build_ideal_pp_normalized(const Field& field, int d) {
    int q = field.order();
    if (d < 1 || d > q - 2)
        throw usage_error("degree must lie in [1, q-2]");
    Ideal ideal = build_ideal_pp(field);
    const RingPtr& ring = ideal.ring;
    for (int i = d + 1; i <= q - 2; ++i)
        ideal.gens.push_back(MultiPoly::variable(ring, i));
    ideal.gens.push_back(MultiPoly::variable(ring, 0));
    ideal.gens.push_back(MultiPoly::variable(ring, d) - MultiPoly::constant(ring, 1));
    return ideal;
}

long long normalized_pp_count(const Field& field, int d, GroebnerOptions options) {
    Ideal ideal = build_ideal_pp_normalized(field, d);
    GroebnerBasis gb = reduce_basis(
        buchberger(ideal.gens, pp_order(field, MonomialOrder::Kind::degrevlex), options));
    if (!gb.complete)
        throw capacity_error("Groebner computation exhausted its step budget");
    long long q = field.order();
    return quotient_dimension(gb) * q * (q - 1);
}

Ideal build_named_ideal(const Field& field, const std::string& name,
                        std::optional<int> degree, bool optimized) {
    if (name == "pp") return build_ideal_pp(field);
    if (name == "pp-deg") {
        if (!degree) throw usage_error("ideal pp-deg needs --degree");
        return build_ideal_pp_degree(field, *degree);
    }
    if (name == "pp-norm") {
        if (!degree) throw usage_error("ideal pp-norm needs --degree");
        return build_ideal_pp_normalized(field, *degree);
    }
    if (name == "lpp") return build_ideal_lpp(field, optimized);
    if (name == "lpp-deg") {
        if (!degree) throw usage_error("ideal lpp-deg needs --degree");
        return build_ideal_lpp_degree(field, *degree, optimized);
    }
    if (name == "symmetric") return build_ideal_symmetric(field, degree, optimized);
    if (name == "reduced") return build_ideal_reduced(field, degree, optimized);
    throw usage_error("unknown ideal '" + name +
                      "' (expected pp, pp-deg, pp-norm, lpp, lpp-deg, symmetric, reduced)");
}

}  // namespace latinpp
