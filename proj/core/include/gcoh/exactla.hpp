// Exact linear algebra over Z and Z/n: dense matrices, Smith normal form,
// congruence solving, and finitely presented modules.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcoh {

using Int = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed user input (bad group table, non-invertible action, ...).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Raised when a computation would exceed a configured size cap.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

namespace exactla {

// floor-mod: result in [0, n) for n > 0
Int mod_floor(const Int& a, const Int& n);

// The base ring: Z, or Z/n with n >= 2.
struct Ring {
    bool is_z = true;
    Int n = 0;

    static Ring z() { return Ring{true, 0}; }
    static Ring zmod(const Int& n);

    Int reduce(const Int& a) const { return is_z ? a : mod_floor(a, n); }
    bool operator==(const Ring& o) const { return is_z == o.is_z && n == o.n; }
    std::string str() const;
};

class IntMatrix {
  public:
    IntMatrix() : ring_(Ring::z()), rows_(0), cols_(0) {}
    IntMatrix(Ring ring, int rows, int cols);

    static IntMatrix identity(Ring ring, int n);
    static IntMatrix from_rows(Ring ring, const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, const Int& v) { at(r, c) = ring_.reduce(v); }

    void canonicalize();  // reduce all entries into the ring's canonical range

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix add(const IntMatrix& o) const;
    IntMatrix sub(const IntMatrix& o) const;
    IntMatrix scaled(const Int& c) const;
    IntMatrix transpose() const;
    IntMatrix kronecker(const IntMatrix& o) const;  // lexicographic (i,j) index order
    IntMatrix hstack(const IntMatrix& o) const;
    IntMatrix with_ring(Ring ring) const;  // reinterpret entries in another ring

    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x, reduced
    std::vector<Int> column(int c) const;
    void set_column(int c, const std::vector<Int>& v);

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const;

    // row/col elementary ops (used by the normal form routines)
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& c);  // row_dst += c*row_src
    void add_col_multiple(int dst, int src, const Int& c);
    void scale_row(int i, const Int& c);
    void scale_col(int i, const Int& c);

  private:
    Ring ring_;
    int rows_, cols_;
    std::vector<Int> a_;
};

// U*A*V = D with U, V invertible over the ring and D diagonal with a
// divisibility chain d1 | d2 | ... . Over Z/n the diagonal entries are
// canonicalized to gcd(d_i, n) (with 0 meaning the full ring Z/n is free).
struct Smith {
    IntMatrix u, uinv, v, vinv, d;
    std::vector<Int> diagonal() const;
    int rank() const;  // number of nonzero diagonal entries
};

Smith smith_normal_form(const IntMatrix& a);

// one solution of A x = b over the ring, or nullopt with A x = b unsolvable
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_linear(const Smith& s, const std::vector<Int>& b);

// columns generating { x : A x = 0 over the ring }
IntMatrix kernel_columns(const IntMatrix& a);

// Congruence systems over Z with a per-row modulus (0 = exact equality):
// solve A x = b  (mod moduli), entries of A and b read as integers.
std::optional<std::vector<Int>> solve_congruence(const IntMatrix& a, const std::vector<Int>& b,
                                                 const std::vector<Int>& moduli);
// columns (over Z) generating the solution set of A x = 0 (mod moduli)
IntMatrix kernel_congruence(const IntMatrix& a, const std::vector<Int>& moduli);

// Column-style Hermite form of the lattice spanned by the columns of a
// (ring Z). Pivot rows strictly increase column by column.
IntMatrix hnf_columns(const IntMatrix& a);

// Canonical (lexicographically minimal, digits in [0, pivot)) representative
// of x modulo the lattice spanned by the columns of hnf (as from hnf_columns).
std::vector<Int> coset_reduce(const IntMatrix& hnf, std::vector<Int> x);

// A finitely generated module R^ambient / column-span(relations), R = Z or Z/n.
// Elements are held in canonical coordinates: one coordinate per nontrivial
// invariant factor, each reduced modulo its order (order 0 = a free Z factor).
class PresentedModule {
  public:
    PresentedModule() = default;
    PresentedModule(Ring ring, int ambient_rank, const IntMatrix& relations);

    static PresentedModule free_module(Ring ring, int rank);

    const Ring& ring() const { return ring_; }
    int ambient_rank() const { return ambient_; }
    const IntMatrix& relations() const { return relations_; }

    int dim() const { return static_cast<int>(orders_.size()); }
    // order of each canonical coordinate; 0 = free over Z, else > 1
    const std::vector<Int>& orders() const { return orders_; }
    // invariant factors, largest first, as the spec of the quotient group
    std::vector<Int> invariant_factors() const;
    bool is_finite() const;
    Int size() const;  // number of elements; 0 if infinite

    std::vector<Int> reduce(const std::vector<Int>& ambient) const;
    std::vector<Int> lift(const std::vector<Int>& canonical) const;
    std::vector<Int> canon(std::vector<Int> v) const;  // reduce coords mod orders

    std::vector<Int> zero() const { return std::vector<Int>(orders_.size(), Int(0)); }
    bool is_zero_element(const std::vector<Int>& v) const;

    std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) const;
    std::vector<Int> sub(const std::vector<Int>& x, const std::vector<Int>& y) const;
    std::vector<Int> neg(const std::vector<Int>& x) const;
    std::vector<Int> scale(const Int& c, const std::vector<Int>& x) const;

    // enumerate all elements (requires finiteness, count <= cap)
    std::vector<std::vector<Int>> enumerate(long long cap = 1 << 20) const;

  private:
    Ring ring_ = Ring::z();
    int ambient_ = 0;
    IntMatrix relations_;
    std::vector<Int> orders_;
    IntMatrix to_canon_;    // dim x ambient
    IntMatrix from_canon_;  // ambient x dim
};

PresentedModule quotient_presentation(Ring ring, int ambient_rank, const IntMatrix& relations);

// elementwise helpers for plain coordinate vectors
std::vector<Int> vec_add(const std::vector<Int>& x, const std::vector<Int>& y);
std::vector<Int> vec_sub(const std::vector<Int>& x, const std::vector<Int>& y);
std::vector<Int> vec_scale(const Int& c, const std::vector<Int>& x);
bool vec_is_zero(const std::vector<Int>& x);
bool lex_less(const std::vector<Int>& x, const std::vector<Int>& y);

}  // namespace exactla
}  // namespace gcoh
