// Bounded cochain complexes of finite coordinate modules, chain maps,
// null-homotopy solving, and nilpotency certificates for maps that kill
// cohomology.
#pragma once

#include "gcoh/exactla.hpp"

namespace gcoh {

struct BoundedComplex {
    int lo = 0;                             // lowest occupied slot
    std::vector<std::vector<Int>> orders;   // coordinate orders per slot (0 = Z)
    std::vector<exactla::IntMatrix> diffs;  // diffs[i]: slot lo+i -> slot lo+i+1

    int slots() const { return static_cast<int>(orders.size()); }
    int rank(int i) const { return static_cast<int>(orders[static_cast<size_t>(i)].size()); }
    // shapes, order compatibility, d after d = 0
    void validate() const;
};

struct ChainMap {
    std::vector<exactla::IntMatrix> comps;  // one per slot
    void validate(const BoundedComplex& src, const BoundedComplex& tgt) const;
};

ChainMap identity_chain_map(const BoundedComplex& c);
ChainMap compose_chain_maps(const ChainMap& f, const ChainMap& g);  // f after g

// true when f kills the cohomology of every slot; fills the first slot
// (absolute index) where it does not
bool induces_zero_on_cohomology(const BoundedComplex& src, const BoundedComplex& tgt,
                                const ChainMap& f, int* offending);

// components h_i: src slot i -> tgt slot i-1 with d h + h d = f, if any
std::optional<std::vector<exactla::IntMatrix>> null_homotopy(const BoundedComplex& src,
                                                             const BoundedComplex& tgt,
                                                             const ChainMap& f);

struct NilpotencyCertificate {
    bool precondition = false;  // f kills cohomology everywhere
    int offending_degree = 0;   // meaningful when the precondition fails
    int power = 0;              // certified exponent (number of occupied slots)
    bool ok = false;            // homotopy for f^power was found and verified
    ChainMap fpow;
    std::vector<exactla::IntMatrix> homotopy;
};

// for an endomorphism inducing zero on all cohomology, certify that the power
// of f equal to the occupied length of the complex is null-homotopic
NilpotencyCertificate nilpotency_certificate(const BoundedComplex& c, const ChainMap& f);

}  // namespace gcoh
