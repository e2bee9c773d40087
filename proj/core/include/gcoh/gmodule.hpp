// Modules over a finite group: direct sums of cyclic groups Z/o_i (o_i = 0
// meaning Z) carrying a G-action by integer matrices. Maps between modules are
// integer matrices compatible with the coordinate orders.
#pragma once

#include "gcoh/exactla.hpp"
#include "gcoh/group.hpp"

#include <string>
#include <vector>

namespace gcoh {

struct GModule {
    GroupPtr group;
    std::vector<Int> orders;                 // per coordinate; 0 = Z, else >= 1
    std::vector<exactla::IntMatrix> action;  // one rank x rank integer matrix per element

    int rank() const { return static_cast<int>(orders.size()); }
    bool is_finite() const;
    bool is_trivial_action() const;
    // all orders are powers of one prime p (no Z coordinates); fills p and the
    // largest exponent
    bool p_primary(Int* p, int* kmax) const;

    std::vector<Int> canon(std::vector<Int> v) const;
    std::vector<Int> act(int g, const std::vector<Int>& v) const;
    std::string key() const;  // in-process memoization key
};

// action given for every group element, fully validated
GModule module_from_full_action(GroupPtr g, std::vector<Int> orders,
                                std::vector<exactla::IntMatrix> action);
// action given on group->generators() and extended along word data
GModule module_from_generators(GroupPtr g, std::vector<Int> orders,
                               const std::vector<exactla::IntMatrix>& gen_action);
GModule trivial_module(GroupPtr g, exactla::Ring ring, int rank);
// Z[G/H] for a subgroup H (sorted element list); ring Z or Z/n coefficients
GModule permutation_module(GroupPtr g, const std::vector<int>& subgroup, exactla::Ring ring);

struct GModuleMap {
    GModule src, tgt;
    exactla::IntMatrix matrix;  // tgt.rank x src.rank over Z

    std::vector<Int> apply(const std::vector<Int>& v) const;
    // well-defined on orders and commutes with the action of every generator
    void validate() const;
};

// the quotient of m by the sublattice spanned by the given integer columns
// (plus m's own order lattice), with projection and a coordinate section
struct QuotientModule {
    GModule quo;
    exactla::IntMatrix proj;  // quo.rank x m.rank
    exactla::IntMatrix sect;  // m.rank x quo.rank, proj*sect = id
};
QuotientModule quotient_module(const GModule& m, const exactla::IntMatrix& rel_columns);

}  // namespace gcoh
