// Derived modules: duals, tensor/wedge/sym squares, signed symmetric
// coinvariants, quadratic-function modules, reductions, twists, and
// submodules generated by explicit columns.
#pragma once

#include "gcoh/gmodule.hpp"

namespace gcoh {

// Hom(M, Z/n) for finite M, n = exponent (lcm of coordinate orders).
// Coordinate i keeps order o_i; the action is the contragredient computed
// through the value scaling n/o_i.
GModule dual_module(const GModule& m);

// evaluation pairing dual(M) (x) M -> Z/n as a 1 x (rank*rank) matrix in the
// tensor coordinates (i, j) -> i*rank + j
exactla::IntMatrix dual_evaluation(const GModule& m);

// orders gcd(o_i, o'_j), action by Kronecker product, index (i, j) lex
GModule tensor_module(const GModule& a, const GModule& b);

// concatenated coordinates, block-diagonal action
GModule direct_sum_module(const GModule& a, const GModule& b);

// exterior square of a module with uniform coordinate orders,
// basis {e_i ^ e_j : i < j} in lex pair order
GModule wedge2_module(const GModule& m);

// symmetric square (coinvariants of the swap), basis {e_i e_j : i <= j} lex
GModule sym2_module(const GModule& m);

// (M (x) M) / <a(x)b + b(x)a>: pair coordinates t_ij (i < j) keep the full
// order, diagonal classes d_i have order gcd(2, o); order-1 coordinates are
// dropped (odd o leaves just the pairs)
GModule signed_sym_module(const GModule& m);

struct Quad2 {
    GModule mod;  // basis {x_i} {q_i} {x_i x_j : i < j}
    GModule base;                // M at the target precision
    exactla::IntMatrix lin;      // base -> mod, e_i -> x_i
    exactla::IntMatrix polar;    // mod -> base (x) base, f -> f(x+y) - f(x) - f(y)
    exactla::IntMatrix compare;  // mod -> base, f -> (m -> 4 f(m) - f(2m))
};

// Quadratic functions on the dual of a free Z/p^K-module M, vanishing at 0.
// The q_i coordinates halve x_i^2 - x_i, which consumes one bit of precision
// when p = 2 (target ring Z/2^{K-1}); odd p keeps the full precision.
Quad2 quad2_module(const GModule& m);

// same coordinates over Z/k, orders gcd(o_i, k)
GModule reduce_mod_module(const GModule& m, const Int& k);

// entrywise scalar twist by a multiplicative character (one unit per element)
GModule twist_module(const GModule& m, const std::vector<Int>& chi);

// submodule generated by the given integer columns, as an abstract module
// with an inclusion matrix back into the ambient coordinates
struct Submodule {
    GModule mod;
    exactla::IntMatrix incl;  // ambient.rank x mod.rank
};
Submodule submodule_module(const GModule& ambient, const exactla::IntMatrix& gens);

}  // namespace gcoh
