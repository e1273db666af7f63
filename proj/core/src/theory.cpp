#include "footseq/theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace footseq {

namespace {

// Falling factorial a * (a-1) * ... * (a-k+1) as an exact big integer.
BigInt falling(long long a, long long k) {
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r *= (a - i);
    return r;
}

// Ratio binom(4n-3-t, n-k) / binom(4n-3, n) as an exact rational. All nine
// constant-filter acceptance counts are signed sums of such terms.
Rational term_ratio(long long t, long long k, long long n) {
    if (k > n) return Rational(0);
    BigInt num = falling(n, k) * falling(3 * n - 3, t - k);
    BigInt den = falling(4 * n - 3, t);
    if (num == 0) return Rational(0);
    return Rational(num, den);
}

struct Term {
    int sign;
    long long t;
    long long k;
};

std::vector<Term> filter_terms(Stage f) {
    switch (f) {
        case Stage::C1: return {{+1, 2, 1}};
        case Stage::C2: return {{+1, 2, 2}, {+1, 3, 2}, {+1, 4, 2}};
        case Stage::C3: return {{+1, 2, 2}, {+1, 3, 2}, {+1, 4, 2}};
        case Stage::C4: return {{+1, 4, 3}, {+1, 5, 3}, {+1, 6, 3}, {+1, 7, 3}, {+1, 8, 3}};
        case Stage::C5: return {{+1, 4, 2}, {-1, 8, 2}};
        case Stage::C6: return {{+1, 5, 2}, {-1, 8, 2}};
        case Stage::C7: return {{+1, 6, 3}, {+1, 7, 3}, {+1, 8, 3}};
        case Stage::C8: return {{+1, 5, 3}, {+1, 6, 3}};
        case Stage::C9: return {{+1, 7, 3}};
        default: throw std::invalid_argument("filter_efficiency: unknown filter id");
    }
}

Rational filter_limit(Stage f) {
    switch (f) {
        case Stage::C1: return Rational(3, 16);
        case Stage::C2: return Rational(37, 256);
        case Stage::C3: return Rational(37, 256);
        case Stage::C4: return Rational(2343, 65536);
        case Stage::C5: return Rational(1575, 65536);
        case Stage::C6: return Rational(999, 65536);
        case Stage::C7: return Rational(999, 65536);
        case Stage::C8: return Rational(63, 4096);
        case Stage::C9: return Rational(81, 16384);
        default: throw std::invalid_argument("filter_efficiency: unknown filter id");
    }
}

}  // namespace

bool landau_test(const ScoreSequence& s) {
    const int n = s.team_count();
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        const long long bound = static_cast<long long>(k) * (k - 1) / 2;
        if (sum < bound) return false;
        if (k == n && sum != bound) return false;
    }
    return true;
}

bool moon_test(const ScoreSequence& s, int b) {
    if (b < 1) throw std::invalid_argument("moon_test: points-per-win must be positive");
    const int n = s.team_count();
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        const long long bound = static_cast<long long>(b) * k * (k - 1) / 2;
        if (sum < bound) return false;
        if (k == n && sum != bound) return false;
    }
    return true;
}

PointLossVector point_loss(const ScoreSequence& s, int b) {
    const int n = s.team_count();
    PointLossVector out;
    out.points_per_win = b;
    out.values.assign(static_cast<std::size_t>(n) + 1, 0);
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        const long long deficit = static_cast<long long>(b) * k * (k - 1) / 2 - sum;
        out.values[k] = std::max(out.values[k - 1], deficit);
    }
    return out;
}

bool interval_complete_test(const ScoreSequence& s, int a, int b) {
    if (a < 0 || b < a || b < 1)
        throw std::invalid_argument("interval_complete_test: need b >= a >= 0 and b >= 1");
    const int n = s.team_count();
    const PointLossVector pl = point_loss(s, b);
    const long long grand = static_cast<long long>(b) * n * (n - 1) / 2;
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        const long long lo = static_cast<long long>(a) * k * (k - 1) / 2;
        const long long hi = grand - pl.values[k] - static_cast<long long>(n - k) * s[k - 1];
        if (sum < lo || sum > hi) return false;
    }
    return true;
}

bool reid_zhang_test(const ScoreSequence& s) {
    const int n = s.team_count();
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        if (s[k - 1] > n - 1) return false;
        sum += s[k - 1];
        if (sum < static_cast<long long>(k) * (k - 1) / 2) return false;
    }
    return true;
}

bool berger_test(const DigraphPairSequence& d) {
    const int n = static_cast<int>(d.pairs.size());
    for (int i = 1; i < n; ++i)
        if (d.pairs[i].first > d.pairs[i - 1].first)
            throw std::invalid_argument("berger_test: out-degrees must be nonincreasing");
    long long lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += d.pairs[k - 1].first;
        long long rhs = 0;
        for (int i = 1; i <= k; ++i) rhs += std::min<long long>(d.pairs[i - 1].second, k - 1);
        for (int i = k + 1; i <= n; ++i) rhs += std::min<long long>(d.pairs[i - 1].second, k);
        if (lhs > rhs) return false;
        if (k == n && lhs != rhs) return false;
    }
    return true;
}

int min_wins_strict(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("min_wins_strict: supported range is 2 <= n <= 5");
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> matches;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) matches.emplace_back(i, j);

    long long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;

    int best = m + 1;
    std::vector<int> score(static_cast<std::size_t>(n));
    for (long long code = 0; code < total; ++code) {
        std::fill(score.begin(), score.end(), 0);
        long long c = code;
        int decisive = 0;
        for (int i = 0; i < m; ++i) {
            const int r = static_cast<int>(c % 3);
            c /= 3;
            const auto [a, b] = matches[i];
            if (r == 0) {
                score[a] += 1;
                score[b] += 1;
            } else if (r == 1) {
                score[a] += 3;
                ++decisive;
            } else {
                score[b] += 3;
                ++decisive;
            }
        }
        if (decisive >= best) continue;
        std::vector<int> sorted = score;
        std::sort(sorted.begin(), sorted.end());
        bool strict = true;
        for (int i = 1; i < n; ++i)
            if (sorted[i] <= sorted[i - 1]) {
                strict = false;
                break;
            }
        if (strict) best = decisive;
    }
    return best;
}

Rational filter_efficiency(Stage filter, std::optional<long long> n) {
    if (!n) return filter_limit(filter);
    if (*n < 1) throw std::invalid_argument("filter_efficiency: n must be positive");
    Rational r = 0;
    for (const Term& term : filter_terms(filter)) {
        Rational v = term_ratio(term.t, term.k, *n);
        if (term.sign > 0)
            r += v;
        else
            r -= v;
    }
    return r;
}

Rational cumulative_filter_efficiency(std::optional<long long> n) {
    static const Stage kFilters[] = {Stage::C1, Stage::C2, Stage::C3, Stage::C4, Stage::C5,
                                     Stage::C6, Stage::C7, Stage::C8, Stage::C9};
    Rational r = 0;
    for (Stage f : kFilters) r += filter_efficiency(f, n);
    return r;
}

Rational regular_growth_ratio(std::optional<long long> n) {
    if (!n) return Rational(256, 27);
    if (*n < 1) throw std::invalid_argument("regular_growth_ratio: n must be positive");
    const long long v = *n;
    BigInt num = falling(4 * v + 1, 4);
    BigInt den = BigInt(v + 1) * (3 * v) * (3 * v - 1) * (3 * v - 2);
    return Rational(num, den);
}

std::string to_decimal(const Rational& r, int digits) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    if (rem * 2 >= den) ++q;  // round half up
    BigInt ip = q / scale;
    if (digits == 0) return sign + ip.str();
    BigInt fp = q % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    return sign + ip.str() + "." + frac;
}

}  // namespace footseq
