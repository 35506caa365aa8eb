#pragma once

#include "omegacalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace omegacalc {

// Formal character of a finite-dimensional SL2 representation: a finite map
// from highest weight m to the multiplicity of the irreducible S_m (which has
// dimension m + 1). Differences of genuine characters are allowed, so
// multiplicities may be negative; zero entries are erased, making equality
// plain map equality.
struct SL2Character {
    std::map<int, Integer> mults;

    void add(int m, const Integer& count);
    Integer mult(int m) const;
    Integer dim() const; // sum of mult * (m + 1)
    bool is_zero() const { return mults.empty(); }
    bool nonnegative() const;

    SL2Character& operator+=(const SL2Character& o);
    SL2Character& operator-=(const SL2Character& o);
    friend SL2Character operator+(SL2Character a, const SL2Character& b) { return a += b; }
    friend SL2Character operator-(SL2Character a, const SL2Character& b) { return a -= b; }
    friend bool operator==(const SL2Character&, const SL2Character&) = default;

    // "S8 + S4 + 2*S0" in descending weight; "0" when empty.
    std::string str() const;
};

// Number of partitions of s that fit in an r x d box (at most r parts, each
// at most d), for s = 0 .. r*d. These are the coefficients of the Gaussian
// binomial [r+d, r]_q.
std::vector<Integer> box_partitions(int r, int d);

// Character of the plethysm S_r(S_d): the multiplicity of S_{rd-2p} is the
// number of partitions of p in an r x d box minus the number for p - 1.
SL2Character plethysm(int r, int d);

// legal graded exponents at level r: {0, 2, 3, ..., re} (1 is excluded)
std::vector<int> a_set(int e, int r);

// Direct sum of S_{rd-2p} over p in a_set(e, r): the space of level-r
// sections over the locus of (d-e, e)-bipartite binary forms. Cross-checks
// its dimension against (r(d-e)+1)(re+1) - (rd-1).
SL2Character ox_character(int d, int e, int r);

// Character of the degree-r piece of the ideal of the bipartite locus:
// for r = 2 the explicit list sum_{e < p <= d/2} S_{2d-4p}, for r >= 3 the
// difference plethysm(r, d) - ox_character(d, e, r), checked nonnegative.
SL2Character ideal_character(int d, int e, int r);

// ceil(max{4, n+2+(1-n)/d, 2n+1-n/e}), the Castelnuovo regularity bound of
// the bipartite ideal for forms in n+1 >= 2 variables.
Integer regularity_m0(int n, int d, int e);

} // namespace omegacalc
