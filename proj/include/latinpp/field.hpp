#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latinpp/errors.hpp"

namespace latinpp {

class Field;

/// An element of GF(p^k), stored as its canonical integer code in [0, q).
/// The code's base-p digits are the coordinates in the basis 1, u, ..., u^{k-1},
/// so code = sum coords[i] * p^i.
class FieldElement {
public:
    FieldElement() : field_(nullptr), code_(0) {}
    FieldElement(const Field& field, int code);

    uint8_t code() const { return code_; }
    const Field& field() const { return *field_; }

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator-(FieldElement rhs) const;
    FieldElement operator*(FieldElement rhs) const;
    FieldElement operator/(FieldElement rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;

    bool is_zero() const { return code_ == 0; }

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.code_ == b.code_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }
    friend bool operator<(FieldElement a, FieldElement b) {
        return a.code_ < b.code_;
    }

private:
    friend class Field;
    const Field* field_;
    uint8_t code_;
};

/// GF(p^k) with an explicit monic irreducible modulus over GF(p).
/// All arithmetic is table-driven; instances are immutable once built and
/// safe to share across threads. Orders are capped at 16: every algorithm
/// in this library is exhaustive at desk scale.
class Field {
public:
    static constexpr int kMaxOrder = 16;

    /// Canonical field of the given prime-power order, using the built-in
    /// modulus table (u^2+u+1 for GF(4), u^3+u+1 for GF(8), u^2+2u+2 for
    /// GF(9), u^4+u+1 for GF(16)). The returned reference is to a cached
    /// immutable instance with program lifetime.
    static const Field& of(int q);

    /// Explicit construction from characteristic, degree and modulus
    /// coefficients (modulus[i] = coefficient of u^i, length k+1, monic).
    Field(int p, int k, std::vector<int> modulus);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // Code-level arithmetic for hot loops. No argument checking beyond
    // the codes being < order().
    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t pow(uint8_t a, uint64_t e) const;

    FieldElement element(int code) const;
    FieldElement zero() const { return FieldElement(*this, 0); }
    FieldElement one() const { return FieldElement(*this, 1); }
    std::vector<FieldElement> elements() const;

    /// Coefficients of the point indicator 1 - (x - a)^{q-1}, which is 1 at
    /// x = a and 0 elsewhere. Row a, length q, index = power of x.
    const uint8_t* indicator_row(uint8_t a) const {
        return indicator_.data() + a * q_;
    }

    bool operator==(const Field& o) const {
        return this == &o || (p_ == o.p_ && modulus_ == o.modulus_);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;  // e.g. "GF(4)=GF(2^2), modulus u^2+u+1"

private:
    void build_tables();

    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_, indicator_;
};

inline void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw usage_error("elements belong to different fields");
}

}  // namespace latinpp
