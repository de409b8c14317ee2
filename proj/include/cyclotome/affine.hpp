// Affine-invariant extended cyclic codes of length p^m over GF(p^r): the
// digit-dominance criterion on defining sets, a brute-force group oracle that
// permutes coordinates by x -> ax + b, and the classification of the maximal
// codes together with dual containment.
#pragma once

#include <vector>

#include "cyclotome/config.hpp"
#include "cyclotome/cyclic.hpp"

namespace cyclotome {

// Digit-dominance criterion on T together with 0: every residue dominated
// digitwise by a member must itself be a member.  Requires t.n = p^m - 1.
bool is_affine_invariant(const DefiningSet& t, long long p, int m);

// Literal group test: coordinates of the extended code are labeled by the
// splitting field (position 0 holds label 0, position 1+i holds beta^i), and
// every generator row must stay in the code under x -> alpha*x and
// x -> x + 1.  Those two maps generate the full affine group.
bool affine_oracle(const ExtendedCode& c, const RunConfig& cfg = RunConfig());

struct AffineClassification {
  long long p = 0;
  int r = 0;
  int m = 0;
  int j = 0;  // defining set is the coset of p^j
  DefiningSet t;
  bool affine_invariant = false;
  bool dual_contained = false;
};

// The r maximal affine-invariant extended cyclic codes of length p^m over
// GF(p^r): defining sets are the p^r-cosets of p^j mod p^m - 1, j = 0..r-1.
std::vector<AffineClassification> maximal_affine_invariant_codes(
    long long p, int r, int m, const RunConfig& cfg = RunConfig());

// Whether the dual of the extended maximal code with parameter j lies inside
// the code itself, decided on defining sets: no s in T may have n - s in T.
bool dual_contained_maximal(long long p, int r, int m, int j,
                            const RunConfig& cfg = RunConfig());

}  // namespace cyclotome
