#include "latinpp/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace latinpp {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p) as coefficient vectors, used only while
// building the multiplication table and checking the modulus.
using PPoly = std::vector<int>;

PPoly trim(PPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PPoly mul_mod_p(const PPoly& f, const PPoly& g, int p) {
    if (f.empty() || g.empty()) return {};
    PPoly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    return trim(r);
}

// Remainder of f by monic g.
PPoly rem_mod_p(PPoly f, const PPoly& g, int p) {
    f = trim(f);
    while (f.size() >= g.size()) {
        int lead = f.back();
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) {
            int& c = f[shift + i];
            c = ((c - lead * g[i]) % p + p) % p;
        }
        f = trim(f);
    }
    return f;
}

bool is_irreducible(const PPoly& f, int p) {
    int k = static_cast<int>(f.size()) - 1;
    if (k == 1) return true;
    // Trial division by all monic polynomials of degree 1..k/2.
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int tail = 0; tail < count; ++tail) {
            PPoly g(d + 1, 0);
            g[d] = 1;
            int t = tail;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> coords_of(int code, int p, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

int code_of(const PPoly& coords, int p, int k) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i)
        code = code * p + (i < static_cast<int>(coords.size()) ? coords[i] : 0);
    return code;
}

}  // namespace

FieldElement::FieldElement(const Field& field, int code) : field_(&field) {
    if (code < 0 || code >= field.order())
        throw usage_error("element code out of range for " + field.describe());
    code_ = static_cast<uint8_t>(code);
}

FieldElement FieldElement::operator+(FieldElement rhs) const {
    require_same_field(*field_, *rhs.field_);
    return field_->element(field_->add(code_, rhs.code_));
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
    require_same_field(*field_, *rhs.field_);
    return field_->element(field_->sub(code_, rhs.code_));
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
    require_same_field(*field_, *rhs.field_);
    return field_->element(field_->mul(code_, rhs.code_));
}

FieldElement FieldElement::operator/(FieldElement rhs) const {
    require_same_field(*field_, *rhs.field_);
    return field_->element(field_->div(code_, rhs.code_));
}

FieldElement FieldElement::operator-() const {
    return field_->element(field_->neg(code_));
}

FieldElement FieldElement::inv() const {
    return field_->element(field_->inv(code_));
}

FieldElement FieldElement::pow(uint64_t e) const {
    return field_->element(field_->pow(code_, e));
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw usage_error("field characteristic must be prime");
    if (k_ < 1) throw usage_error("extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < k_; ++i) {
        q_ *= p_;
        if (q_ > kMaxOrder)
            throw capacity_error("field order exceeds the supported cap of 16");
    }
    if (static_cast<int>(modulus_.size()) != k_ + 1)
        throw usage_error("modulus must have degree k (k+1 coefficients)");
    for (int& c : modulus_) {
        if (c < 0 || c >= p_) throw usage_error("modulus coefficients must lie in [0, p)");
    }
    if (modulus_.back() != 1) throw usage_error("modulus must be monic");
    if (!is_irreducible(modulus_, p_))
        throw usage_error("modulus is reducible over GF(p)");
    build_tables();
}

void Field::build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        auto ca = coords_of(a, p_, k_);
        for (int b = 0; b < q_; ++b) {
            auto cb = coords_of(b, p_, k_);
            PPoly sum(k_);
            for (int i = 0; i < k_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = static_cast<uint8_t>(code_of(sum, p_, k_));
            PPoly prod = rem_mod_p(mul_mod_p(trim(ca), trim(cb), p_), modulus_, p_);
            mul_[a * q_ + b] = static_cast<uint8_t>(code_of(prod, p_, k_));
        }
        PPoly na(k_);
        for (int i = 0; i < k_; ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = static_cast<uint8_t>(code_of(na, p_, k_));
    }
    for (int a = 1; a < q_; ++a) {
        // a^(q-2) inverts a in the multiplicative group of order q-1.
        uint8_t r = 1, base = static_cast<uint8_t>(a);
        for (int e = 0; e < q_ - 2; ++e) r = mul_[r * q_ + base];
        inv_[a] = r;
    }

    // indicator_[a] = coefficients of 1 - (x - a)^{q-1}.
    indicator_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a) {
        std::vector<uint8_t> pw{1};  // (x - a)^e, starting at e = 0
        std::vector<uint8_t> lin{neg_[a], 1};
        for (int e = 0; e < q_ - 1; ++e) {
            std::vector<uint8_t> nx(pw.size() + 1, 0);
            for (size_t i = 0; i < pw.size(); ++i)
                for (size_t j = 0; j < 2; ++j)
                    nx[i + j] = add(nx[i + j], mul(pw[i], lin[j]));
            pw = std::move(nx);
        }
        for (size_t i = 0; i < pw.size(); ++i)
            indicator_[a * q_ + i] = neg_[pw[i]];
        indicator_[a * q_ + 0] = add(1, indicator_[a * q_ + 0]);
    }
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw domain_error("division by zero in " + describe());
    return inv_[a];
}

uint8_t Field::pow(uint8_t a, uint64_t e) const {
    // 0^0 = 1 by convention.
    uint8_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement Field::element(int code) const { return FieldElement(*this, code); }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> r;
    r.reserve(q_);
    for (int c = 0; c < q_; ++c) r.push_back(element(c));
    return r;
}

std::string Field::describe() const {
    if (k_ == 1) return "GF(" + std::to_string(q_) + ")";
    return "GF(" + std::to_string(q_) + ")=GF(" + std::to_string(p_) + "^" +
           std::to_string(k_) + ")";
}

const Field& Field::of(int q) {
    struct Entry {
        int p, k;
        std::vector<int> modulus;
    };
    // Non-prime moduli are the Conway polynomials.
    static const std::map<int, Entry> known = {
        {2, {2, 1, {0, 1}}},   {3, {3, 1, {0, 1}}},
        {4, {2, 2, {1, 1, 1}}}, {5, {5, 1, {0, 1}}},
        {7, {7, 1, {0, 1}}},   {8, {2, 3, {1, 1, 0, 1}}},
        {9, {3, 2, {2, 2, 1}}}, {11, {11, 1, {0, 1}}},
        {13, {13, 1, {0, 1}}}, {16, {2, 4, {1, 1, 0, 0, 1}}},
    };
    if (q > kMaxOrder)
        throw capacity_error("field order exceeds the supported cap of 16");
    auto it = known.find(q);
    if (it == known.end())
        throw usage_error(std::to_string(q) + " is not a prime power <= 16");

    static std::map<int, Field> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto cached = cache.find(q);
    if (cached == cache.end()) {
        const Entry& e = it->second;
        cached = cache.emplace(q, Field(e.p, e.k, e.modulus)).first;
    }
    return cached->second;
}

}  // namespace latinpp
