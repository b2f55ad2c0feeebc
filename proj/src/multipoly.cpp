#include "latinpp/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace latinpp {

int PolyRing::var_index(std::string_view name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(const Field& field, std::vector<std::string> vars) {
    auto ring = std::make_shared<PolyRing>();
    ring->field = &field;
    ring->vars = std::move(vars);
    return ring;
}

int Monomial::degree() const {
    int d = 0;
    for (uint8_t e : e_) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (uint8_t e : e_)
        if (e) return false;
    return true;
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.arity(); ++i)
        if (a.e_[i] > b.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < arity(); ++i) r.e_[i] = static_cast<uint8_t>(r.e_[i] + o.e_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < arity(); ++i) r.e_[i] = static_cast<uint8_t>(r.e_[i] - o.e_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int i = 0; i < a.arity(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (int i = 0; i < arity(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

MonomialOrder MonomialOrder::lex(std::vector<int> precedence) {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    o.prec_ = std::move(precedence);
    return o;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<int> precedence) {
    MonomialOrder o;
    o.kind_ = Kind::degrevlex;
    o.prec_ = std::move(precedence);
    return o;
}

MonomialOrder MonomialOrder::by_name(std::string_view name, std::vector<int> precedence) {
    if (name == "lex") return lex(std::move(precedence));
    if (name == "degrevlex") return degrevlex(std::move(precedence));
    throw usage_error("unknown monomial order (expected lex or degrevlex)");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::lex) {
        for (int v : prec_) {
            if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
        }
        return 0;
    }
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Reverse-lexicographic tie break: scanning from the least variable,
    // the monomial with the smaller exponent at the first difference wins.
    for (auto it = prec_.rbegin(); it != prec_.rend(); ++it) {
        if (a.exp(*it) != b.exp(*it)) return a.exp(*it) > b.exp(*it) ? -1 : 1;
    }
    return 0;
}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void MultiPoly::normalize() {
    const Field& k = *ring_->field;
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return b.mono < a.mono; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff = k.add(merged.back().coeff, t.coeff);
        else
            merged.push_back(t);
    }
    terms_.clear();
    for (const Term& t : merged)
        if (t.coeff != 0) terms_.push_back(t);
}

MultiPoly MultiPoly::constant(RingPtr ring, uint8_t c) {
    MultiPoly f(ring);
    if (c != 0) f.terms_.push_back({Monomial(ring->arity()), c});
    return f;
}

MultiPoly MultiPoly::variable(RingPtr ring, int index, int power) {
    if (index < 0 || index >= ring->arity())
        throw usage_error("variable index out of range");
    MultiPoly f(ring);
    if (power < 0) throw usage_error("negative exponent");
    Monomial m(ring->arity());
    m.set_exp(index, static_cast<uint8_t>(power));
    f.terms_.push_back({m, 1});
    return f;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    std::vector<Term> r = terms_;
    r.insert(r.end(), o.terms_.begin(), o.terms_.end());
    return MultiPoly(ring_, std::move(r));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    const Field& k = *ring_->field;
    std::vector<Term> r = terms_;
    for (const Term& t : o.terms_) r.push_back({t.mono, k.neg(t.coeff)});
    return MultiPoly(ring_, std::move(r));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    const Field& k = *ring_->field;
    std::vector<Term> r;
    r.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            r.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
    return MultiPoly(ring_, std::move(r));
}

MultiPoly MultiPoly::scaled(uint8_t c) const {
    const Field& k = *ring_->field;
    std::vector<Term> r;
    if (c != 0) {
        r.reserve(terms_.size());
        for (const Term& t : terms_) r.push_back({t.mono, k.mul(t.coeff, c)});
    }
    return MultiPoly(ring_, std::move(r));
}

MultiPoly MultiPoly::times_term(const Monomial& m, uint8_t c) const {
    const Field& k = *ring_->field;
    std::vector<Term> r;
    if (c != 0) {
        r.reserve(terms_.size());
        for (const Term& t : terms_) r.push_back({t.mono * m, k.mul(t.coeff, c)});
    }
    return MultiPoly(ring_, std::move(r));
}

const MultiPoly::Term& MultiPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (order.less(best->mono, t.mono)) best = &t;
    return *best;
}

MultiPoly MultiPoly::fold_exponents() const {
    int q = ring_->field->order();
    std::vector<Term> r;
    r.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = t.mono;
        for (int i = 0; i < m.arity(); ++i) {
            int e = m.exp(i);
            if (e >= q) m.set_exp(i, static_cast<uint8_t>(1 + (e - 1) % (q - 1)));
        }
        r.push_back({m, t.coeff});
    }
    return MultiPoly(ring_, std::move(r));
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    MultiPoly out(ring_);
    for (const Term& t : terms_) {
        Monomial rest = t.mono;
        int e = rest.exp(var);
        rest.set_exp(var, 0);
        MultiPoly piece = MultiPoly(ring_, {{rest, t.coeff}});
        for (int i = 0; i < e; ++i) piece = piece * value;
        out = out + piece;
    }
    return out;
}

uint8_t MultiPoly::eval(const std::vector<uint8_t>& point) const {
    const Field& k = *ring_->field;
    uint8_t acc = 0;
    for (const Term& t : terms_) {
        uint8_t v = t.coeff;
        for (int i = 0; i < t.mono.arity() && v != 0; ++i)
            if (t.mono.exp(i)) v = k.mul(v, k.pow(point[i], t.mono.exp(i)));
        acc = k.add(acc, v);
    }
    return acc;
}

MultiPoly MultiPoly::eval_var(int var, uint8_t value) const {
    const Field& k = *ring_->field;
    std::vector<Term> r;
    r.reserve(terms_.size());
    for (const Term& t : terms_) {
        uint8_t c = t.coeff;
        if (t.mono.exp(var)) c = k.mul(c, k.pow(value, t.mono.exp(var)));
        Monomial m = t.mono;
        m.set_exp(var, 0);
        r.push_back({m, c});
    }
    return MultiPoly(ring_, std::move(r));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    for (size_t i = 0; i < terms_.size() && i < o.terms_.size(); ++i) {
        if (terms_[i].mono != o.terms_[i].mono) return terms_[i].mono < o.terms_[i].mono;
        if (terms_[i].coeff != o.terms_[i].coeff) return terms_[i].coeff < o.terms_[i].coeff;
    }
    return terms_.size() < o.terms_.size();
}

std::string MultiPoly::str(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (const Term& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
        return order.less(b->mono, a->mono);
    });
    std::string out;
    for (const Term* t : sorted) {
        if (!out.empty()) out += " + ";
        std::string vars;
        for (int i = 0; i < t->mono.arity(); ++i) {
            int e = t->mono.exp(i);
            if (!e) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->vars[i];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty())
            out += std::to_string(int(t->coeff));
        else if (t->coeff == 1)
            out += vars;
        else
            out += std::to_string(int(t->coeff)) + "*" + vars;
    }
    return out;
}

MultiPoly MultiPoly::parse(RingPtr ring, std::string_view text) {
    const Field& k = *ring->field;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw usage_error("polynomial syntax error at position " + std::to_string(pos) +
                          ": " + what);
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto parse_var = [&]() -> int {
        skip_ws();
        // Longest match against the ring's variable names.
        int best = -1;
        size_t best_len = 0;
        for (size_t i = 0; i < ring->vars.size(); ++i) {
            const std::string& v = ring->vars[i];
            if (v.size() > best_len && text.substr(pos, v.size()) == v) {
                best = static_cast<int>(i);
                best_len = v.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    };

    std::vector<Term> terms;
    skip_ws();
    if (pos >= text.size()) fail("empty polynomial");
    while (true) {
        uint8_t coeff = 1;
        Monomial mono(ring->arity());
        bool first = true;
        while (true) {
            skip_ws();
            if (!first) {
                if (pos >= text.size() || text[pos] != '*') break;
                ++pos;
            }
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                int v = parse_int();
                if (v >= k.order()) fail("coefficient code out of range");
                coeff = k.mul(coeff, static_cast<uint8_t>(v));
            } else {
                int var = parse_var();
                if (var < 0) {
                    if (first) fail("expected a term");
                    fail("expected a factor after '*'");
                }
                int e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = parse_int();
                }
                mono.set_exp(var, static_cast<uint8_t>(mono.exp(var) + e));
            }
            first = false;
        }
        terms.push_back({mono, coeff});
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return MultiPoly(std::move(ring), std::move(terms));
}

}  // namespace latinpp
