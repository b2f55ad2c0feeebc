#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "latinpp/field.hpp"

namespace latinpp {

/// A polynomial ring context: the coefficient field plus named variables.
struct PolyRing {
    const Field* field;
    std::vector<std::string> vars;

    int arity() const { return static_cast<int>(vars.size()); }
    int var_index(std::string_view name) const;  // -1 when absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(const Field& field, std::vector<std::string> vars);

/// Exponent vector over the ring's variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<uint8_t> exps) : e_(std::move(exps)) {}

    int arity() const { return static_cast<int>(e_.size()); }
    uint8_t exp(int i) const { return e_[i]; }
    void set_exp(int i, uint8_t e) { e_[i] = e; }
    const std::vector<uint8_t>& exps() const { return e_; }

    int degree() const;
    bool is_one() const;

    static bool divides(const Monomial& a, const Monomial& b);  // a | b
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // assumes divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// Structural (order-independent) comparison used for canonical storage.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<uint8_t> e_;
};

/// A total order on monomials: lexicographic or degree-reverse-lexicographic
/// over an explicit variable precedence (precedence[0] is the largest
/// variable).
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex };

    static MonomialOrder lex(std::vector<int> precedence);
    static MonomialOrder degrevlex(std::vector<int> precedence);
    static MonomialOrder by_name(std::string_view name, std::vector<int> precedence);

    Kind kind() const { return kind_; }
    const std::vector<int>& precedence() const { return prec_; }
    std::string name() const { return kind_ == Kind::lex ? "lex" : "degrevlex"; }

    /// Three-way comparison: negative, zero or positive as a <, ==, > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    Kind kind_ = Kind::degrevlex;
    std::vector<int> prec_;
};

/// Sparse multivariate polynomial over GF(q). Terms are stored sorted by
/// descending structural exponent order with nonzero coefficients only,
/// independent of any monomial order.
class MultiPoly {
public:
    struct Term {
        Monomial mono;
        uint8_t coeff;
    };

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, std::vector<Term> terms);

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, uint8_t c);
    static MultiPoly variable(RingPtr ring, int index, int power = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(uint8_t c) const;
    MultiPoly times_term(const Monomial& m, uint8_t c) const;

    /// Largest term under the given order.
    const Term& leading_term(const MonomialOrder& order) const;

    /// Exponent folding modulo the field equations x^q = x (valid inside any
    /// ideal that contains them).
    MultiPoly fold_exponents() const;

    /// Substitute a polynomial for one variable.
    MultiPoly substitute(int var, const MultiPoly& value) const;
    /// Evaluate at a full point (codes per variable).
    uint8_t eval(const std::vector<uint8_t>& point) const;
    /// Partially evaluate one variable at a code.
    MultiPoly eval_var(int var, uint8_t value) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const;  // structural, for canonical sets

    /// Text form: '+'-joined terms, descending under the given order; factors
    /// ordered by ring variable index ("x1^3*x2 + 2*x2 + 1").
    std::string str(const MonomialOrder& order) const;
    static MultiPoly parse(RingPtr ring, std::string_view text);

private:
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace latinpp
