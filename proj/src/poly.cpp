#include "latinpp/poly.hpp"

#include <algorithm>
#include <cctype>

namespace latinpp {

namespace {

// Shared text grammar: '+'-separated terms, term = factors joined by '*',
// factor = coefficient code | var ['^' exponent]. Canonical printing orders
// terms by (total degree desc, x-exponent desc) and omits unit coefficients
// when a variable part exists.

struct Parser {
    const Field& field;
    std::string_view text;
    size_t pos = 0;
    bool allow_y;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw usage_error("polynomial syntax error at position " +
                          std::to_string(pos) + ": " + what);
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    // Parses one term into (coeff, ex, ey), exponents unreduced.
    void parse_term(uint8_t& coeff, long& ex, long& ey) {
        coeff = 1;
        ex = ey = 0;
        bool first = true;
        while (true) {
            skip_ws();
            if (!first) {
                if (peek() != '*') break;
                ++pos;  // consume '*'
            }
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                int v = parse_int();
                if (v >= field.order()) fail("coefficient code out of range");
                coeff = field.mul(coeff, static_cast<uint8_t>(v));
            } else if (c == 'x' || (allow_y && c == 'y')) {
                ++pos;
                long e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = parse_int();
                }
                (c == 'x' ? ex : ey) += e;
            } else if (first) {
                fail("expected a term");
            } else {
                fail("expected a factor after '*'");
            }
            first = false;
        }
    }
};

// x^e == x^(1 + (e-1) mod (q-1)) modulo x^q - x, for e >= 1.
int reduce_exp(long e, int q) {
    if (e == 0) return 0;
    return 1 + static_cast<int>((e - 1) % (q - 1));
}

void append_term(std::string& out, uint8_t coeff, int ex, int ey) {
    if (!out.empty()) out += " + ";
    std::string vars;
    if (ex > 0) {
        vars += "x";
        if (ex > 1) vars += "^" + std::to_string(ex);
    }
    if (ey > 0) {
        if (!vars.empty()) vars += "*";
        vars += "y";
        if (ey > 1) vars += "^" + std::to_string(ey);
    }
    if (vars.empty()) {
        out += std::to_string(int(coeff));
    } else {
        if (coeff != 1) out += std::to_string(int(coeff)) + "*";
        out += vars;
    }
}

}  // namespace

UniPoly::UniPoly(const Field& field)
    : field_(&field), q_(field.order()), coeffs_(q_, 0) {}

UniPoly::UniPoly(const Field& field, std::vector<uint8_t> coeffs)
    : field_(&field), q_(field.order()), coeffs_(q_, 0) {
    if (coeffs.size() > static_cast<size_t>(q_))
        throw usage_error("coefficient list longer than the field order");
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
    for (uint8_t c : coeffs_)
        if (c >= q_) throw usage_error("coefficient code out of range");
}

UniPoly UniPoly::constant(const Field& field, uint8_t c) {
    UniPoly f(field);
    f.coeffs_[0] = c;
    return f;
}

UniPoly UniPoly::identity(const Field& field) {
    return monomial(field, 1);
}

UniPoly UniPoly::monomial(const Field& field, int deg, uint8_t coeff) {
    if (deg < 0 || deg >= field.order())
        throw usage_error("monomial degree must lie in [0, q)");
    UniPoly f(field);
    f.coeffs_[deg] = coeff;
    return f;
}

std::optional<int> UniPoly::degree() const {
    for (int i = q_ - 1; i >= 0; --i)
        if (coeffs_[i] != 0) return i;
    return std::nullopt;
}

uint8_t UniPoly::eval(uint8_t a) const {
    uint8_t r = 0;
    for (int i = q_ - 1; i >= 0; --i) r = field_->add(field_->mul(r, a), coeffs_[i]);
    return r;
}

FieldElement UniPoly::operator()(FieldElement a) const {
    require_same_field(*field_, a.field());
    return field_->element(eval(a.code()));
}

std::vector<uint8_t> UniPoly::value_table() const {
    std::vector<uint8_t> t(q_);
    for (int a = 0; a < q_; ++a) t[a] = eval(static_cast<uint8_t>(a));
    return t;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    UniPoly r(*field_);
    for (int i = 0; i < q_; ++i) r.coeffs_[i] = field_->add(coeffs_[i], rhs.coeffs_[i]);
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    UniPoly r(*field_);
    for (int i = 0; i < q_; ++i) r.coeffs_[i] = field_->sub(coeffs_[i], rhs.coeffs_[i]);
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    // Canonical product via the evaluation isomorphism: x^q - x is squarefree
    // and splits, so pointwise multiplication of value tables is exact.
    std::vector<uint8_t> vals(q_);
    for (int a = 0; a < q_; ++a)
        vals[a] = field_->mul(eval(static_cast<uint8_t>(a)),
                              rhs.eval(static_cast<uint8_t>(a)));
    return interp_uni(*field_, vals);
}

UniPoly UniPoly::scaled(uint8_t c) const {
    UniPoly r(*field_);
    for (int i = 0; i < q_; ++i) r.coeffs_[i] = field_->mul(coeffs_[i], c);
    return r;
}

bool UniPoly::operator==(const UniPoly& rhs) const {
    return *field_ == *rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::string UniPoly::str() const {
    std::string out;
    for (int i = q_ - 1; i >= 0; --i)
        if (coeffs_[i] != 0) append_term(out, coeffs_[i], i, 0);
    return out.empty() ? "0" : out;
}

UniPoly UniPoly::parse(const Field& field, std::string_view text) {
    Parser p{field, text, 0, /*allow_y=*/false};
    UniPoly r(field);
    if (p.eof()) p.fail("empty polynomial");
    while (true) {
        uint8_t c;
        long ex, ey;
        p.parse_term(c, ex, ey);
        int i = reduce_exp(ex, field.order());
        r.coeffs_[i] = field.add(r.coeffs_[i], c);
        if (p.eof()) break;
        if (p.peek() != '+') p.fail("expected '+'");
        ++p.pos;
    }
    return r;
}

BiPoly::BiPoly(const Field& field)
    : field_(&field), q_(field.order()), coeffs_(q_ * q_, 0) {}

BiPoly::BiPoly(const Field& field, std::vector<uint8_t> coeffs)
    : field_(&field), q_(field.order()), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(q_ * q_))
        throw usage_error("bivariate coefficient grid must have q*q entries");
    for (uint8_t c : coeffs_)
        if (c >= q_) throw usage_error("coefficient code out of range");
}

std::optional<int> BiPoly::total_degree() const {
    std::optional<int> d;
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < q_; ++j)
            if (coeff(i, j) != 0 && (!d || i + j > *d)) d = i + j;
    return d;
}

bool BiPoly::is_symmetric() const {
    for (int i = 0; i < q_; ++i)
        for (int j = i + 1; j < q_; ++j)
            if (coeff(i, j) != coeff(j, i)) return false;
    return true;
}

uint8_t BiPoly::eval(uint8_t a, uint8_t b) const {
    // Horner in x, with inner Horner in y per row.
    uint8_t r = 0;
    for (int i = q_ - 1; i >= 0; --i) {
        uint8_t row = 0;
        for (int j = q_ - 1; j >= 0; --j)
            row = field_->add(field_->mul(row, b), coeff(i, j));
        r = field_->add(field_->mul(r, a), row);
    }
    return r;
}

FieldElement BiPoly::operator()(FieldElement a, FieldElement b) const {
    require_same_field(*field_, a.field());
    require_same_field(*field_, b.field());
    return field_->element(eval(a.code(), b.code()));
}

std::vector<uint8_t> BiPoly::value_table() const {
    std::vector<uint8_t> t(q_ * q_);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            t[a * q_ + b] = eval(static_cast<uint8_t>(a), static_cast<uint8_t>(b));
    return t;
}

UniPoly BiPoly::section_x(uint8_t b) const {
    // Coefficient of x^i in f(x, b).
    std::vector<uint8_t> c(q_, 0);
    for (int i = 0; i < q_; ++i) {
        uint8_t v = 0;
        for (int j = q_ - 1; j >= 0; --j) v = field_->add(field_->mul(v, b), coeff(i, j));
        c[i] = v;
    }
    return UniPoly(*field_, std::move(c));
}

UniPoly BiPoly::section_y(uint8_t a) const {
    std::vector<uint8_t> c(q_, 0);
    for (int j = 0; j < q_; ++j) {
        uint8_t v = 0;
        for (int i = q_ - 1; i >= 0; --i) v = field_->add(field_->mul(v, a), coeff(i, j));
        c[j] = v;
    }
    return UniPoly(*field_, std::move(c));
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    BiPoly r(*field_);
    for (int i = 0; i < q_ * q_; ++i)
        r.coeffs_[i] = field_->add(coeffs_[i], rhs.coeffs_[i]);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    BiPoly r(*field_);
    for (int i = 0; i < q_ * q_; ++i)
        r.coeffs_[i] = field_->sub(coeffs_[i], rhs.coeffs_[i]);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    std::vector<uint8_t> vals(q_ * q_);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            vals[a * q_ + b] = field_->mul(eval(a, b), rhs.eval(a, b));
    return interp_bi(*field_, vals);
}

BiPoly BiPoly::scaled(uint8_t c) const {
    BiPoly r(*field_);
    for (int i = 0; i < q_ * q_; ++i) r.coeffs_[i] = field_->mul(coeffs_[i], c);
    return r;
}

bool BiPoly::operator==(const BiPoly& rhs) const {
    return *field_ == *rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::string BiPoly::str() const {
    std::string out;
    // (total degree desc, x-exponent desc)
    for (int d = 2 * (q_ - 1); d >= 0; --d)
        for (int i = std::min(d, q_ - 1); i >= 0; --i) {
            int j = d - i;
            if (j < 0 || j >= q_) continue;
            if (coeff(i, j) != 0) append_term(out, coeff(i, j), i, j);
        }
    return out.empty() ? "0" : out;
}

BiPoly BiPoly::parse(const Field& field, std::string_view text) {
    Parser p{field, text, 0, /*allow_y=*/true};
    BiPoly r(field);
    if (p.eof()) p.fail("empty polynomial");
    while (true) {
        uint8_t c;
        long ex, ey;
        p.parse_term(c, ex, ey);
        int i = reduce_exp(ex, field.order());
        int j = reduce_exp(ey, field.order());
        r.set_coeff(i, j, field.add(r.coeff(i, j), c));
        if (p.eof()) break;
        if (p.peek() != '+') p.fail("expected '+'");
        ++p.pos;
    }
    return r;
}

UniPoly interp_uni(const Field& field, const std::vector<uint8_t>& values) {
    int q = field.order();
    if (values.size() != static_cast<size_t>(q))
        throw usage_error("interpolation needs a value for every field element");
    UniPoly f(field);
    std::vector<uint8_t> c(q, 0);
    for (int a = 0; a < q; ++a) {
        uint8_t v = values[a];
        if (v == 0) continue;
        if (v >= q) throw usage_error("value code out of range");
        const uint8_t* row = field.indicator_row(static_cast<uint8_t>(a));
        for (int i = 0; i < q; ++i) c[i] = field.add(c[i], field.mul(v, row[i]));
    }
    return UniPoly(field, std::move(c));
}

BiPoly interp_bi(const Field& field, const std::vector<uint8_t>& values) {
    int q = field.order();
    if (values.size() != static_cast<size_t>(q * q))
        throw usage_error("interpolation needs a q*q value table");
    // Two-stage tensor contraction with the indicator rows.
    // mid[a][j] = sum_b values[a][b] * ind_b[j]
    std::vector<uint8_t> mid(q * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            uint8_t v = values[a * q + b];
            if (v == 0) continue;
            if (v >= q) throw usage_error("value code out of range");
            const uint8_t* row = field.indicator_row(static_cast<uint8_t>(b));
            for (int j = 0; j < q; ++j)
                mid[a * q + j] = field.add(mid[a * q + j], field.mul(v, row[j]));
        }
    std::vector<uint8_t> c(q * q, 0);
    for (int a = 0; a < q; ++a) {
        const uint8_t* row = field.indicator_row(static_cast<uint8_t>(a));
        for (int i = 0; i < q; ++i) {
            if (row[i] == 0) continue;
            for (int j = 0; j < q; ++j)
                c[i * q + j] = field.add(c[i * q + j], field.mul(row[i], mid[a * q + j]));
        }
    }
    return BiPoly(field, std::move(c));
}

UniPoly compose_uni(const UniPoly& f, const UniPoly& g) {
    require_same_field(f.field(), g.field());
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> vals(q);
    for (int a = 0; a < q; ++a) vals[a] = f.eval(g.eval(static_cast<uint8_t>(a)));
    return interp_uni(k, vals);
}

BiPoly substitute_bi(const BiPoly& f, const UniPoly& g, const UniPoly& h) {
    require_same_field(f.field(), g.field());
    require_same_field(f.field(), h.field());
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> gv = g.value_table(), hv = h.value_table();
    std::vector<uint8_t> vals(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) vals[a * q + b] = f.eval(gv[a], hv[b]);
    return interp_bi(k, vals);
}

BiPoly post_compose(const UniPoly& g, const BiPoly& f) {
    require_same_field(f.field(), g.field());
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> vals(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) vals[a * q + b] = g.eval(f.eval(a, b));
    return interp_bi(k, vals);
}

UniPoly inverse_pp(const UniPoly& f) {
    const Field& k = f.field();
    int q = k.order();
    std::vector<uint8_t> table = f.value_table();
    if (!is_permutation_table(k, table))
        throw domain_error("polynomial is not a permutation of the field");
    std::vector<uint8_t> inv(q);
    for (int a = 0; a < q; ++a) inv[table[a]] = static_cast<uint8_t>(a);
    return interp_uni(k, inv);
}

bool is_permutation_table(const Field& field, const std::vector<uint8_t>& values) {
    if (values.size() != static_cast<size_t>(field.order())) return false;
    uint32_t seen = 0;
    for (uint8_t v : values) {
        if (v >= field.order()) return false;
        seen |= 1u << v;
    }
    return seen == (uint32_t(1) << field.order()) - 1;
}

}  // namespace latinpp
