#pragma once

#include <functional>
#include <map>

#include "latinpp/poly.hpp"

namespace latinpp {

/// Degree histogram of all q! permutation polynomials over GF(q).
struct DegreeCensus {
    int q = 0;
    std::map<int, long long> counts;  // degree -> number of PPs of that degree

    long long total() const;
};

/// True iff f permutes GF(q).
bool is_pp(const UniPoly& f);

/// Streams all q! permutation polynomials, one per permutation of GF(q),
/// in lexicographic order of value tables. Guarded at q <= 11; orders 10
/// and 11 additionally require allow_large.
void enumerate_pps(const Field& field, const std::function<void(const UniPoly&)>& fn,
                   bool allow_large = false);

/// Buckets the enumerate_pps stream by degree. Same guards.
DegreeCensus degree_census(const Field& field, bool allow_large = false);

/// Closed-form coefficient tests for q in {4, 5}:
///   q=4: deg(f) <= 2 and s1^3 + s2^3 = 1
///   q=5: deg(f) <= 3, (s1 + s3)^4 = 1 and s2^2 = 3 s1 s3
/// Must agree with is_pp on every polynomial.
bool check_characterization(const UniPoly& f);

}  // namespace latinpp
