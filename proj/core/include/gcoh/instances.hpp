// Seeded random instances shared by the unit tests and the verification
// suites: unit conjugators, bounded complexes over Z/4 with an endomorphism
// killing cohomology, random group-module pairs with a mod-p extension, and
// the fixed consistency corpus.
#pragma once

#include "gcoh/complexes.hpp"
#include "gcoh/extension.hpp"

#include <random>

namespace gcoh::gen {

using exactla::IntMatrix;
using exactla::Ring;

struct UnitPair {
    IntMatrix u, uinv;
};

// random element of GL(n, Z/m) built from elementary operations, with its
// inverse tracked alongside
UnitPair random_unit(std::mt19937_64& rng, int n, long m);

struct ComplexInstance {
    BoundedComplex c;
    ChainMap f;
};

// complex over Z/4 spanning two or three slots together with an endomorphism
// inducing zero on cohomology, built from conjugated diagonal pieces plus an
// exact perturbation
ComplexInstance random_complex_instance(uint64_t seed);

// the group generated by the permutation images of the listed elements; the
// ambient group must carry permutations
GroupPtr subgroup_group(const GroupPtr& g, const std::vector<int>& elems);

// linear representation of a permutation group whose points are the nonzero
// bit-vectors of F_2^dim (point p is the vector p+1)
GModule f2_linear_module(const GroupPtr& g, int dim);

struct BockInstance {
    GModule x, y;   // free modules over Z/p^(m+2) with group action
    Extension e;    // extension of y/p by x/p
    int m = 1;
    long p = 2;
    std::string label;
};

// seeded instance for the reduction identity: p in {2, 3}, ranks <= 3,
// m <= 2, group order <= 8; the glue cochain mixes a random degree-one class
// with a random coboundary so nonsplit middles occur whenever they exist
BockInstance random_bock_instance(uint64_t seed);

struct CorpusEntry {
    std::string label;
    GModule m;  // free over Z/2^(mexp+2)
    int mexp = 1;
};

// fixed two-power corpus for the route-agreement and annihilation suites
std::vector<CorpusEntry> consistency_corpus();

}  // namespace gcoh::gen
