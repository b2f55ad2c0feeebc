#include "latinpp/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latinpp {

namespace {

struct BasisEntry {
    MultiPoly poly;
    Monomial lm;
    uint8_t lc;
};

BasisEntry make_entry(MultiPoly f, const MonomialOrder& order) {
    const auto& lt = f.leading_term(order);
    return {std::move(f), lt.mono, lt.coeff};
}

/// Full division: returns the remainder, no monomial of which is divisible
/// by any basis leading monomial.
MultiPoly reduce_full(const MultiPoly& f, const std::vector<BasisEntry>& basis,
                      const MonomialOrder& order) {
    const Field& k = *f.ring()->field;
    MultiPoly p = f;
    std::vector<MultiPoly::Term> remainder;
    while (!p.is_zero()) {
        const auto& lt = p.leading_term(order);
        const BasisEntry* reducer = nullptr;
        for (const BasisEntry& g : basis)
            if (Monomial::divides(g.lm, lt.mono)) {
                reducer = &g;
                break;
            }
        if (reducer) {
            uint8_t c = k.div(lt.coeff, reducer->lc);
            p = p - reducer->poly.times_term(lt.mono / reducer->lm, c);
        } else {
            remainder.push_back(lt);
            p = p - MultiPoly(p.ring(), {lt});
        }
    }
    return MultiPoly(f.ring(), std::move(remainder));
}

MultiPoly spoly(const BasisEntry& f, const BasisEntry& g, const MonomialOrder&) {
    const Field& k = *f.poly.ring()->field;
    Monomial l = Monomial::lcm(f.lm, g.lm);
    MultiPoly a = f.poly.times_term(l / f.lm, k.inv(f.lc));
    MultiPoly b = g.poly.times_term(l / g.lm, k.inv(g.lc));
    return a - b;
}

struct Pair {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order,
                         GroebnerOptions options) {
    if (gens.empty()) throw usage_error("Groebner basis of an empty generator list");
    RingPtr ring = gens.front().ring();

    std::vector<BasisEntry> basis;
    std::multiset<Pair, PairLess> queue{PairLess{&order}};
    std::set<std::pair<int, int>> considered;

    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].lm, basis[j].lm);
            queue.insert(Pair{l.degree(), l, i, j});
        }
    };

    // Seed with the normal forms of the inputs, skipping redundancies.
    for (const MultiPoly& g : gens) {
        MultiPoly h = reduce_full(g, basis, order);
        if (h.is_zero()) continue;
        basis.push_back(make_entry(std::move(h), order));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }

    size_t reductions = 0;
    bool complete = true;
    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        considered.insert({pr.i, pr.j});

        // Coprimality criterion.
        if (basis[pr.i].lm.coprime_with(basis[pr.j].lm)) continue;
        // Chain criterion: some k with LM_k | lcm and both (i,k), (j,k) done.
        bool chained = false;
        for (int t = 0; t < static_cast<int>(basis.size()) && !chained; ++t) {
            if (t == pr.i || t == pr.j) continue;
            if (!Monomial::divides(basis[t].lm, pr.lcm)) continue;
            auto key = [&](int a, int b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (considered.count(key(pr.i, t)) && considered.count(key(pr.j, t)))
                chained = true;
        }
        if (chained) continue;

        if (++reductions > options.spair_budget) {
            complete = false;
            break;
        }
        MultiPoly h = reduce_full(spoly(basis[pr.i], basis[pr.j], order), basis, order);
        if (h.is_zero()) continue;
        basis.push_back(make_entry(std::move(h), order));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }

    GroebnerBasis out;
    out.ring = ring;
    out.order = order;
    out.complete = complete;
    out.spairs_reduced = reductions;
    out.gens.reserve(basis.size());
    for (BasisEntry& e : basis) out.gens.push_back(std::move(e.poly));
    return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    const Field& k = *gb.ring->field;
    const MonomialOrder& order = gb.order;

    std::vector<BasisEntry> entries;
    for (const MultiPoly& g : gb.gens) {
        if (g.is_zero()) continue;
        BasisEntry e = make_entry(g.scaled(k.inv(g.leading_term(order).coeff)), order);
        entries.push_back(std::move(e));
    }
    if (!gb.complete) {
        // Minimalization is only sound for a finished basis; just normalize.
        std::sort(entries.begin(), entries.end(),
                  [&](const BasisEntry& a, const BasisEntry& b) {
                      int c = order.compare(a.lm, b.lm);
                      if (c != 0) return c < 0;
                      return a.poly < b.poly;
                  });
        GroebnerBasis out;
        out.ring = gb.ring;
        out.order = order;
        out.complete = false;
        out.spairs_reduced = gb.spairs_reduced;
        for (BasisEntry& e : entries) out.gens.push_back(std::move(e.poly));
        return out;
    }
    // Minimalize: ascending by leading monomial, drop anything whose leading
    // monomial a kept generator divides.
    std::sort(entries.begin(), entries.end(), [&](const BasisEntry& a, const BasisEntry& b) {
        int c = order.compare(a.lm, b.lm);
        if (c != 0) return c < 0;
        return a.poly < b.poly;
    });
    std::vector<BasisEntry> minimal;
    for (BasisEntry& e : entries) {
        bool redundant = false;
        for (const BasisEntry& kept : minimal)
            if (Monomial::divides(kept.lm, e.lm)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(e));
    }
    // Tail-reduce to a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<BasisEntry> others;
            others.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MultiPoly r = reduce_full(minimal[i].poly, others, order);
            if (r != minimal[i].poly) {
                minimal[i] = make_entry(r.scaled(k.inv(r.leading_term(order).coeff)), order);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const BasisEntry& a, const BasisEntry& b) {
        return order.compare(a.lm, b.lm) < 0;
    });

    GroebnerBasis out;
    out.ring = gb.ring;
    out.order = order;
    out.complete = gb.complete;
    out.spairs_reduced = gb.spairs_reduced;
    out.reduced = gb.complete;
    out.gens.reserve(minimal.size());
    for (BasisEntry& e : minimal) out.gens.push_back(std::move(e.poly));
    return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
    std::vector<BasisEntry> entries;
    entries.reserve(gb.gens.size());
    for (const MultiPoly& g : gb.gens)
        if (!g.is_zero()) entries.push_back(make_entry(g, gb.order));
    return reduce_full(f, entries, gb.order);
}

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.gens.size());
    for (const MultiPoly& g : gb.gens)
        if (!g.is_zero()) lms.push_back(g.leading_term(gb.order).mono);
    return lms;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& gb) {
    int n = gb.ring->arity();
    auto lms = leading_monomials(gb);
    for (const Monomial& m : lms)
        if (m.is_one()) return true;  // unit ideal
    for (int v = 0; v < n; ++v) {
        bool pure = false;
        for (const Monomial& m : lms) {
            if (m.exp(v) == 0) continue;
            bool only_v = true;
            for (int w = 0; w < n && only_v; ++w)
                if (w != v && m.exp(w)) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

long long quotient_dimension(const GroebnerBasis& gb) {
    if (!gb.complete)
        throw domain_error("quotient dimension of an incomplete basis");
    if (!is_zero_dimensional(gb))
        throw domain_error("quotient dimension requires a zero-dimensional ideal");

    int n = gb.ring->arity();
    auto lms = leading_monomials(gb);
    for (const Monomial& m : lms)
        if (m.is_one()) return 0;

    // bounds[v]: minimal pure-power exponent of v among leading monomials.
    std::vector<int> bounds(n, 0);
    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (const Monomial& m : lms) {
            if (m.exp(v) == 0) continue;
            bool only_v = true;
            for (int w = 0; w < n && only_v; ++w)
                if (w != v && m.exp(w)) only_v = false;
            if (only_v && (best < 0 || m.exp(v) < best)) best = m.exp(v);
        }
        bounds[v] = best;
    }
    // Bucket leading monomials by their largest supporting variable; a
    // monomial can first divide a partial assignment at that depth.
    std::vector<std::vector<const Monomial*>> by_maxvar(n);
    for (const Monomial& m : lms) {
        int mv = -1;
        for (int v = 0; v < n; ++v)
            if (m.exp(v)) mv = v;
        if (mv >= 0) by_maxvar[mv].push_back(&m);
    }

    std::vector<uint8_t> partial(n, 0);
    long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int e = 0; e < bounds[v]; ++e) {
            partial[v] = static_cast<uint8_t>(e);
            bool divisible = false;
            for (const Monomial* m : by_maxvar[v]) {
                bool div = true;
                for (int w = 0; w <= v && div; ++w)
                    if (m->exp(w) > partial[w]) div = false;
                if (div) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) self(self, v + 1);
        }
        partial[v] = 0;
    };
    rec(rec, 0);
    return count;
}

std::vector<std::vector<uint8_t>> variety(const GroebnerBasis& gb) {
    const Field& k = *gb.ring->field;
    int n = gb.ring->arity();
    int q = k.order();

    double total = 1;
    for (int i = 0; i < n; ++i) total *= q;

    std::vector<std::vector<uint8_t>> zeros;
    if (total <= 1e7) {
        std::vector<uint8_t> point(n, 0);
        while (true) {
            bool ok = true;
            for (const MultiPoly& g : gb.gens)
                if (g.eval(point) != 0) {
                    ok = false;
                    break;
                }
            if (ok) zeros.push_back(point);
            int v = n - 1;
            while (v >= 0 && point[v] == q - 1) point[v--] = 0;
            if (v < 0) break;
            ++point[v];
        }
        return zeros;
    }

    // Recursive substitution with pruning, variables fixed left to right.
    size_t nodes = 0;
    const size_t budget = 20'000'000;
    auto rec = [&](auto&& self, std::vector<MultiPoly> polys, std::vector<uint8_t>& point,
                   int v) -> void {
        if (++nodes > budget)
            throw capacity_error("variety enumeration exceeded its node budget");
        if (v == n) {
            for (const MultiPoly& g : polys)
                if (!g.is_zero()) return;
            zeros.push_back(point);
            return;
        }
        for (int c = 0; c < q; ++c) {
            point[v] = static_cast<uint8_t>(c);
            std::vector<MultiPoly> next;
            next.reserve(polys.size());
            bool contradiction = false;
            for (const MultiPoly& g : polys) {
                MultiPoly h = g.eval_var(v, static_cast<uint8_t>(c));
                if (h.is_zero()) continue;
                if (h.total_degree() == 0) {
                    contradiction = true;
                    break;
                }
                next.push_back(std::move(h));
            }
            if (!contradiction) self(self, std::move(next), point, v + 1);
        }
        point[v] = 0;
    };
    std::vector<uint8_t> point(n, 0);
    rec(rec, gb.gens, point, 0);
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

std::vector<MultiPoly> suppress_free_field_equations(const GroebnerBasis& gb) {
    const Field& k = *gb.ring->field;
    int n = gb.ring->arity();
    int q = k.order();

    auto field_eq_var = [&](const MultiPoly& g) -> int {
        // matches x_v^q - x_v (monic, two terms)
        if (g.terms().size() != 2) return -1;
        const auto& hi = g.terms()[0];
        const auto& lo = g.terms()[1];
        int v = -1;
        for (int w = 0; w < n; ++w)
            if (hi.mono.exp(w)) {
                if (v >= 0) return -1;
                v = w;
            }
        if (v < 0 || hi.mono.exp(v) != q || hi.coeff != 1) return -1;
        for (int w = 0; w < n; ++w)
            if (lo.mono.exp(w) != (w == v ? 1 : 0)) return -1;
        if (lo.coeff != k.neg(1)) return -1;
        return v;
    };

    std::vector<int> eq_var(gb.gens.size());
    std::vector<bool> used_elsewhere(n, false);
    for (size_t i = 0; i < gb.gens.size(); ++i) eq_var[i] = field_eq_var(gb.gens[i]);
    for (size_t i = 0; i < gb.gens.size(); ++i) {
        if (eq_var[i] >= 0) continue;
        for (const auto& t : gb.gens[i].terms())
            for (int v = 0; v < n; ++v)
                if (t.mono.exp(v)) used_elsewhere[v] = true;
    }
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < gb.gens.size(); ++i) {
        if (eq_var[i] >= 0 && !used_elsewhere[eq_var[i]]) continue;
        out.push_back(gb.gens[i]);
    }
    return out;
}

std::vector<std::string> serialize_basis(const GroebnerBasis& gb, bool suppress_free) {
    std::vector<MultiPoly> gens =
        suppress_free ? suppress_free_field_equations(gb) : gb.gens;
    std::vector<std::string> lines;
    lines.reserve(gens.size());
    for (const MultiPoly& g : gens) lines.push_back(g.str(gb.order));
    return lines;
}

}  // namespace latinpp
