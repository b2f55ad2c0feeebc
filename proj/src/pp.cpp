#include "latinpp/pp.hpp"

#include <algorithm>
#include <numeric>

namespace latinpp {

namespace {

void check_enumeration_capacity(const Field& field, bool allow_large) {
    int q = field.order();
    if (q > 11)
        throw capacity_error("permutation enumeration is limited to q <= 11");
    if (q > 9 && !allow_large)
        throw capacity_error(
            "q" + std::to_string(q) +
            " permutation enumeration requires the allow-large flag");
}

}  // namespace

long long DegreeCensus::total() const {
    long long t = 0;
    for (const auto& [d, n] : counts) t += n;
    return t;
}

bool is_pp(const UniPoly& f) {
    return is_permutation_table(f.field(), f.value_table());
}

void enumerate_pps(const Field& field, const std::function<void(const UniPoly&)>& fn,
                   bool allow_large) {
    check_enumeration_capacity(field, allow_large);
    int q = field.order();
    std::vector<uint8_t> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(interp_uni(field, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

DegreeCensus degree_census(const Field& field, bool allow_large) {
    check_enumeration_capacity(field, allow_large);
    int q = field.order();
    DegreeCensus census;
    census.q = q;

    // indicator columns transposed for cache-friendly top-down degree scans:
    // col[i][a] = coefficient of x^i in the indicator of point a.
    std::vector<std::vector<uint8_t>> col(q, std::vector<uint8_t>(q));
    for (int a = 0; a < q; ++a)
        for (int i = 0; i < q; ++i) col[i][a] = field.indicator_row(a)[i];

    std::vector<long long> counts(q, 0);
    std::vector<uint8_t> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int i = q - 1; i >= 0; --i) {
            uint8_t c = 0;
            const uint8_t* ci = col[i].data();
            for (int a = 0; a < q; ++a) c = field.add(c, field.mul(perm[a], ci[a]));
            if (c != 0) {
                ++counts[i];
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int d = 0; d < q; ++d)
        if (counts[d] != 0) census.counts[d] = counts[d];
    return census;
}

bool check_characterization(const UniPoly& f) {
    const Field& k = f.field();
    int q = k.order();
    auto deg = f.degree();
    if (q == 4) {
        if (deg && *deg > 2) return false;
        uint8_t s1 = f.coeff(1), s2 = f.coeff(2);
        return k.add(k.pow(s1, 3), k.pow(s2, 3)) == 1;
    }
    if (q == 5) {
        if (deg && *deg > 3) return false;
        uint8_t s1 = f.coeff(1), s2 = f.coeff(2), s3 = f.coeff(3);
        bool unit_sum = k.pow(k.add(s1, s3), 4) == 1;
        bool discr = k.mul(s2, s2) == k.mul(3, k.mul(s1, s3));
        return unit_sum && discr;
    }
    throw usage_error("closed-form characterization exists only for q=4 and q=5");
}

}  // namespace latinpp
