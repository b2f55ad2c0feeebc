#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latinpp/field.hpp"

namespace latinpp {

/// Univariate polynomial over GF(q) in canonical form: degree < q, the
/// unique representative modulo x^q - x. coeff(i) is the coefficient of x^i.
/// The zero polynomial has no degree (degree() is empty).
class UniPoly {
public:
    explicit UniPoly(const Field& field);             // zero polynomial
    UniPoly(const Field& field, std::vector<uint8_t> coeffs);

    static UniPoly constant(const Field& field, uint8_t c);
    static UniPoly identity(const Field& field);      // the polynomial x
    static UniPoly monomial(const Field& field, int deg, uint8_t coeff = 1);

    const Field& field() const { return *field_; }
    int order() const { return q_; }
    uint8_t coeff(int i) const { return coeffs_[i]; }
    const std::vector<uint8_t>& coeffs() const { return coeffs_; }

    std::optional<int> degree() const;
    bool is_zero() const { return !degree().has_value(); }

    uint8_t eval(uint8_t a) const;                    // Horner
    FieldElement operator()(FieldElement a) const;
    std::vector<uint8_t> value_table() const;         // index = point code

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;      // canonical ring product
    UniPoly scaled(uint8_t c) const;

    bool operator==(const UniPoly& rhs) const;
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    std::string str() const;
    static UniPoly parse(const Field& field, std::string_view text);

private:
    const Field* field_;
    int q_;
    std::vector<uint8_t> coeffs_;
};

/// Bivariate polynomial over GF(q) with per-variable degree < q, the unique
/// representative modulo x^q - x and y^q - y. coeff(i, j) multiplies x^i y^j.
class BiPoly {
public:
    explicit BiPoly(const Field& field);
    BiPoly(const Field& field, std::vector<uint8_t> coeffs);  // size q*q, [i*q+j]

    const Field& field() const { return *field_; }
    int order() const { return q_; }
    uint8_t coeff(int i, int j) const { return coeffs_[i * q_ + j]; }
    const std::vector<uint8_t>& coeffs() const { return coeffs_; }
    void set_coeff(int i, int j, uint8_t c) { coeffs_[i * q_ + j] = c; }

    std::optional<int> total_degree() const;
    bool is_zero() const { return !total_degree().has_value(); }
    bool is_symmetric() const;

    uint8_t eval(uint8_t a, uint8_t b) const;
    FieldElement operator()(FieldElement a, FieldElement b) const;
    std::vector<uint8_t> value_table() const;         // [a*q+b] = f(a,b)

    /// Univariate sections f(x, b) and f(a, y).
    UniPoly section_x(uint8_t b) const;
    UniPoly section_y(uint8_t a) const;

    BiPoly operator+(const BiPoly& rhs) const;
    BiPoly operator-(const BiPoly& rhs) const;
    BiPoly operator*(const BiPoly& rhs) const;
    BiPoly scaled(uint8_t c) const;

    bool operator==(const BiPoly& rhs) const;
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    std::string str() const;
    static BiPoly parse(const Field& field, std::string_view text);

private:
    const Field* field_;
    int q_;
    std::vector<uint8_t> coeffs_;
};

/// Interpolation: the unique canonical polynomial matching a full value
/// table. values[a] (resp. values[a*q+b]) is the image of the point with
/// code a (resp. (a, b)). An incomplete table is a usage error.
UniPoly interp_uni(const Field& field, const std::vector<uint8_t>& values);
BiPoly interp_bi(const Field& field, const std::vector<uint8_t>& values);

/// f(g(x)), reduced modulo x^q - x.
UniPoly compose_uni(const UniPoly& f, const UniPoly& g);

/// f(g(x), h(y)), reduced modulo both field equations.
BiPoly substitute_bi(const BiPoly& f, const UniPoly& g, const UniPoly& h);

/// g(f(x, y)), reduced modulo both field equations.
BiPoly post_compose(const UniPoly& g, const BiPoly& f);

/// Compositional inverse of a permutation polynomial. Throws domain_error
/// if f is not a bijection.
UniPoly inverse_pp(const UniPoly& f);

/// True iff the table is a bijection of [0, q).
bool is_permutation_table(const Field& field, const std::vector<uint8_t>& values);

}  // namespace latinpp
