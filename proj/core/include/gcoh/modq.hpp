// Fast linear algebra over Z/p^k for small prime powers (p^k <= 2^15), using
// plain int64 words. Complements the exact GMP layer: cochain-level systems
// are p-primary in practice and much too large for generic arithmetic.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gcoh {
namespace modq {

struct Zq {
    int64_t q = 2;  // modulus p^k
    int64_t p = 2;
    int k = 1;

    static Zq make(int64_t p, int k);
    // recognize a prime power <= 2^15
    static std::optional<Zq> from_modulus(int64_t q);

    int64_t red(int64_t a) const {
        int64_t r = a % q;
        return r < 0 ? r + q : r;
    }
    int64_t add(int64_t a, int64_t b) const { return red(a + b); }
    int64_t sub(int64_t a, int64_t b) const { return red(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return red(red(a) * red(b)); }
    int val(int64_t a) const;        // p-adic valuation of a mod q; k for 0
    int64_t pow_p(int e) const;      // p^e
    int64_t unit_part(int64_t a) const;
    int64_t inv_unit(int64_t u) const;
};

using SparseVec = std::vector<std::pair<int32_t, int64_t>>;  // sorted by row, values in (0, q)

SparseVec sparse_scale(const Zq& R, const SparseVec& x, int64_t c);
SparseVec sparse_sub_scaled(const Zq& R, const SparseVec& x, int64_t c, const SparseVec& y);
SparseVec sparse_from_dense(const Zq& R, const std::vector<int64_t>& x);
std::vector<int64_t> sparse_to_dense(const SparseVec& x, int n);

struct MatQ {
    int rows = 0, cols = 0;
    std::vector<int64_t> a;

    MatQ() = default;
    MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    static MatQ identity(int n);

    int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    MatQ mul(const Zq& R, const MatQ& o) const;
    std::vector<int64_t> apply(const Zq& R, const std::vector<int64_t>& x) const;
    bool operator==(const MatQ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// u*a*v = d diagonal with d_ii = p^{dval[i]} (dval[i] = k encodes 0);
// valuations are nondecreasing, so the divisibility chain holds
struct SmithQ {
    MatQ u, uinv, v, vinv, d;
    std::vector<int> dval;
    int rank_units() const;  // number of unit pivots
};

SmithQ smith_q(const Zq& R, const MatQ& a);

std::optional<std::vector<int64_t>> solve_q(const Zq& R, const SmithQ& s,
                                            const std::vector<int64_t>& b);
// columns generating { x : a x = 0 over Z/q }
std::vector<std::vector<int64_t>> kernel_q(const Zq& R, const SmithQ& s);

// Online sparse column echelon over Z/q with annihilator closure, so the
// stored pivots witness span membership exactly and greedy digit reduction
// is constant on cosets (unique representatives).
class EchelonQ {
  public:
    explicit EchelonQ(Zq R) : R_(R) {}

    const Zq& ring() const { return R_; }
    void insert(SparseVec col);
    bool contains(const SparseVec& x) const;
    // canonical coset representative; digit at each pivot row r lands in
    // [0, p^{v_r}) (minimize) or [q - p^{v_r}, q) (maximize)
    SparseVec reduce(const SparseVec& x, bool maximize = false) const;
    size_t pivot_count() const { return piv_.size(); }
    const std::map<int32_t, SparseVec>& pivots() const { return piv_; }

  private:
    Zq R_;
    std::map<int32_t, SparseVec> piv_;  // leading row -> column, leading value p^v
};

}  // namespace modq
}  // namespace gcoh
