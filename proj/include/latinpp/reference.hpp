#pragma once

#include <map>
#include <vector>

namespace latinpp::reference {

/// Published per-degree counts of permutation polynomials N_q(d). The q=13
/// row is beyond exhaustive verification here and is carried as input only.
struct PpCensusRow {
    int q;
    std::map<int, long long> counts;
};

inline const std::vector<PpCensusRow>& pp_census_table() {
    static const std::vector<PpCensusRow> table = {
        {4, {{1, 12}, {2, 12}}},
        {5, {{1, 20}, {3, 100}}},
        {7, {{1, 42}, {4, 588}, {5, 4410}}},
        {8, {{1, 56}, {2, 56}, {3, 448}, {4, 1232}, {5, 3584}, {6, 34944}}},
        {9, {{1, 72}, {3, 360}, {5, 1944}, {6, 39744}, {7, 320760}}},
        {11,
         {{1, 110},
          {3, 1210},
          {6, 29040},
          {7, 272250},
          {8, 3332340},
          {9, 36281850}}},
        {13,
         {{1, 156},
          {5, 38532},
          {7, 233220},
          {8, 2798640},
          {9, 33948720},
          {10, 442144560},
          {11, 5747856972LL}}},
    };
    return table;
}

/// Published per-degree counts of all, symmetric and reduced local
/// permutation polynomials for q in {4, 5}.
struct LppCensusRow {
    int q;
    std::map<int, long long> all, symmetric, reduced;
};

inline const std::vector<LppCensusRow>& lpp_census_table() {
    static const std::vector<LppCensusRow> table = {
        {4, {{1, 36}, {2, 108}, {4, 432}}, {{1, 12}, {2, 12}, {4, 72}}, {{1, 1}, {4, 3}}},
        {5,
         {{1, 80}, {3, 3200}, {5, 22000}, {6, 135920}},
         {{1, 20}, {3, 200}, {5, 100}, {6, 400}},
         {{1, 1}, {5, 19}, {6, 36}}},
    };
    return table;
}

}  // namespace latinpp::reference
