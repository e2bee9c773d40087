// Exact local arithmetic over Q_p and R: Hilbert symbols, quaternion local
// invariants, Hensel search for points on hyperelliptic curves y^2 = c*f(x),
// and the per-place evaluation sum for the genus-2 example curve.
#pragma once

#include "gcoh/exactla.hpp"

namespace gcoh {

using Rat = mpq_class;

struct Place {
    bool real = false;
    Int p = 0;  // prime when finite
    bool operator==(const Place& o) const { return real == o.real && p == o.p; }
    std::string str() const;
};
Place real_place();
// checks primality (deterministic strong-pseudoprime bases below 2^64)
Place finite_place(const Int& p);

// units-times-p^v representation of a p-adic number known to finite precision
class PadicApprox {
  public:
    // exact integer or rational value (den coprime to p unless stated);
    // the stored digit count starts at prec
    static PadicApprox from_int(const Int& p, const Int& value, int prec);
    static PadicApprox from_ratio(const Int& p, const Int& num, const Int& den, int prec);
    static PadicApprox zero(const Int& p);

    const Int& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    int valuation() const;     // throws on exact zero
    int precision() const { return prec_; }
    const Int& unit() const;   // unit part, known mod p^prec

    PadicApprox mul(const PadicApprox& o) const;
    PadicApprox add(const PadicApprox& o) const;
    PadicApprox square() const { return mul(*this); }

    // value mod p^k for non-negative valuation; throws past justified digits
    Int residue(int k) const;
    std::string str() const;

  private:
    Int p_;
    bool zero_ = false;
    int val_ = 0;
    int prec_ = 0;
    Int unit_ = 0;
};

// local Hilbert symbol (a, b)_v in {+1, -1}; entries are nonzero rationals
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
int hilbert_symbol(const Int& a, const Int& b, const Place& v);

// quaternion local invariant in Q/Z: 0 when the symbol is +1, else 1/2
Rat local_invariant(const Rat& a, const Rat& b, const Place& v);

// places at which (a, b)_v can be nontrivial: the real place, 2, and the odd
// primes dividing a numerator or denominator
std::vector<Place> symbol_support(const Rat& a, const Rat& b);

// product over symbol_support is +1 (symbols elsewhere are unit-unit symbols)
bool product_formula_holds(const Rat& a, const Rat& b);

// decides solvability of z^2 = a x^2 + b y^2 over the completion at v by
// residue search with Hensel-conclusive bounds, independent of the symbol
// formula; agreement with hilbert_symbol == +1 is a cross-check
bool conic_solvable(const Rat& a, const Rat& b, const Place& v);

// discriminant of an integer polynomial via the Sylvester resultant
Int poly_disc(const std::vector<Int>& f);

enum class PointVerdict {
    found,         // a point to the requested precision
    none,          // residue analysis proves there is no local point
    inconclusive,  // search bound exhausted before a conclusive verdict
};

struct CurveLocalDatum {
    Int c;
    std::vector<Int> f;  // ascending coefficients, even degree, squarefree
    Place v;
    PointVerdict verdict = PointVerdict::inconclusive;
    // finite place: y^2 = c f(x) to the working precision; x may have
    // negative valuation when the point sits over the second affine chart
    PadicApprox x, y;
    // finite place bookkeeping: chart 0 means x = exact_x, chart 1 means the
    // search ran in t = 1/x and x = 1/exact_x
    int chart = 0;
    Int exact_x = 0;
    // real place: exact rational x with c f(x) evaluated exactly
    Rat rx, rvalue;
};

// searches the completion at v for a point of y^2 = c f(x); finite places run
// a layered residue search (both charts) whose dead ends are certified by
// valuation parity or nonsquare unit class, real places scan small rationals
// for a sign certificate; search_bound 0 and precision 0 pick defaults
CurveLocalDatum find_local_point(const Int& c, const std::vector<Int>& f, const Place& v,
                                 int search_bound = 0, int precision = 0, int variant = 0);

// the sextic (x^2+1)(x^2+17)(x^2-17), ascending coefficients
std::vector<Int> example_sextic();

struct CurveSumEntry {
    Place v;
    CurveLocalDatum point;
    Rat pair_entry;  // the exact value of x^2 - 17 at the found point
    Rat invariant;   // 0 or 1/2
};

struct CurveSumReport {
    std::vector<CurveSumEntry> entries;
    Rat total;  // sum of invariants mod 1
    bool outside_certified = false;  // invariant vanishes off the place list
    bool independent_rerun = false;  // second point set gave the same total
    std::vector<std::string> notes;
};

// default place list for curve_sum: the real place, 2, 3, 17, and any prime
// dividing c
std::vector<Place> default_sum_places(const Int& c);

// evaluates the quaternion class (l_sign, x^2 - 17) at a found local point of
// y^2 = c * example_sextic() for every listed place and sums the invariants;
// certifies vanishing outside the list and re-runs with independently chosen
// points when verify_independence is set
CurveSumReport creutz_sum(const Int& c, int l_sign, const std::vector<Place>& places,
                          int precision = 0, bool verify_independence = true);

}  // namespace gcoh
