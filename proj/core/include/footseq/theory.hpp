#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "footseq/sequence.hpp"

namespace footseq {

using Rational = boost::multiprecision::cpp_rational;

// Lower bounds P_0..P_n on the points lost in matches among the k
// lowest-scoring teams, for matches worth b points per win.
struct PointLossVector {
    int points_per_win = 0;
    std::vector<long long> values;  // P_0..P_n
};

// Out-degree / in-degree pairs with out-degrees nonincreasing.
struct DigraphPairSequence {
    std::vector<std::pair<int, int>> pairs;
};

// Landau's condition for ordinary (one arc per pair) tournaments.
bool landau_test(const ScoreSequence& s);

// Moon's condition for (b, b, n)-tournaments. Throws when b < 1.
bool moon_test(const ScoreSequence& s, int b);

PointLossVector point_loss(const ScoreSequence& s, int b);

// Complete (a, b, n)-tournament score test. Throws on invalid (a, b).
bool interval_complete_test(const ScoreSequence& s, int a, int b);

// Semicomplete digraph score test; no equality requirement at k = n.
bool reid_zhang_test(const ScoreSequence& s);

// Degree-pair condition for digraphs where 0:0, 0:1, 1:0, 1:1 are allowed.
bool berger_test(const DigraphPairSequence& d);

// Minimal number of decisive matches over all round-robin outcomes whose
// sorted point totals are strictly increasing. Brute force; 2 <= n <= 5.
int min_wins_strict(int n);

// Rejection ratio of one constant-time filter among all regular sequences,
// as an exact rational. n = nullopt requests the asymptotic limit.
// Only C1..C9 are valid filter ids.
Rational filter_efficiency(Stage filter, std::optional<long long> n);

// Sum of the nine individual rejection ratios (overlaps counted repeatedly).
Rational cumulative_filter_efficiency(std::optional<long long> n);

// R(n+1)/R(n) for the count of regular sequences; limit 256/27.
Rational regular_growth_ratio(std::optional<long long> n);

// Decimal rendering of an exact rational, rounded half-up to `digits`
// fractional digits.
std::string to_decimal(const Rational& r, int digits);

}  // namespace footseq
