// The specific second- and third-page differential formulas: the squaring
// differential and its mod-2^m form, the Bockstein reduction identity, torsor
// and torus differentials, splitting and annihilation checks, and the
// fourth-roots cup identity.
#pragma once

#include "gcoh/extension.hpp"

namespace gcoh {

inline constexpr int kDegreeCap = 4;

struct DifferentialReport {
    std::string label;
    int degree = 0;  // source degree p
    std::vector<Int> source_factors, target_factors;  // invariant factors of H
    std::vector<Int> source_orders, target_orders;    // presentation coordinates
    exactla::IntMatrix matrix;  // target-dim x source-dim on H coordinates
    std::vector<Int> kernel_factors, image_factors;
    bool zero = true;
};

// assemble factors, kernel/image data and the zero flag from a raw matrix
DifferentialReport make_report(std::string label, int degree,
                               const exactla::PresentedModule& src,
                               const exactla::PresentedModule& tgt, exactla::IntMatrix matrix);

struct SplittingResult {
    bool split = false;
    // middle.rank x quot.rank equivariant section when split; among all
    // solutions the digitwise lexicographically greatest is chosen
    exactla::IntMatrix section;
};
// searches for an equivariant section of the right-hand surjection
SplittingResult splitting_test(const Extension& e);

struct AlphaReport {
    std::vector<DifferentialReport> maps;  // index = source degree
    SplittingResult splitting;
};
// connecting maps of the squaring sequence of V over F_2, degrees 0..cap
AlphaReport alpha_class(const GModule& v, int degree_cap);

// second-page differential of a free module over Z/p^K via the four-term
// quadratic-function sequence, reported one precision level down (two levels
// for p = 2); for p = 2 an independent route through the signed symmetric
// square must agree
DifferentialReport delta2_integral(const GModule& m, int p);

// the mod-2^m formula: difference of the two Bockstein/alpha composites
DifferentialReport delta2_mod(const GModule& m, int mexp, int p);

struct BockReductionReport {
    bool pass = false;
    std::vector<int> degrees;
    std::vector<DifferentialReport> lhs, rhs;  // one per degree
};
// identity between the spliced four-term connecting of the pulled-back
// extension and the difference of the Bockstein composites
BockReductionReport bock_reduction_check(const GModule& x, const GModule& y, const Extension& e,
                                         int m, const std::vector<int>& degrees);

struct TorsorDatum {
    Extension seq;       // 0 -> A[n] -> A[nm] -> A[m] -> 0
    std::vector<Int> x;  // 1-cocycle valued in A[m], the designated lift
};
// the class beta over which the torsor differential cups: connecting of x
std::vector<Int> torsor_beta(const TorsorDatum& t);
// cup with beta followed by the evaluation pairing into trivial Z/n
std::vector<Int> torsor_delta(const TorsorDatum& t, int p, const std::vector<Int>& y);

struct CharacterLattice {
    GModule lattice;         // free over Z, every action of determinant +-1
    std::vector<Int> twist;  // scalar action of each element on the twist
                             // coefficient, given as a unit mod 2^{s+1}
};
// third-page torus differential at the 2^s-torsion level; the integral target
// is represented faithfully through its 2-torsion into coefficients mod
// 2^{v_2(|G|)+1}; when every column already dies at the middle stage the
// report carries an empty target presentation
DifferentialReport torus_d3(const CharacterLattice& l, int s, int p);

// page-i annihilation bound at the prime ell for a weight-q differential
bool annihilation_check(const DifferentialReport& r, const Int& ell, int page, int q);

// connecting of the fourth-roots sequence equals cup with the designated
// order-two class in even degrees
bool mu4_cup_identity(const GModule& mu4, int p, const std::vector<Int>& minus_one);

// ladder comparison: reducing the truncated-tower connecting along the
// vertical maps must agree with the top row's connecting on the class c
bool sunday_naturality(const Extension& top, const Extension& tate, const GModuleMap& vsub,
                       const GModuleMap& vmid, const std::vector<Int>& c);

}  // namespace gcoh
