// Group cohomology via the normalized inhomogeneous bar complex. Degree-p
// cochains are flat vectors of length (n-1)^p * rank indexed by tuples of
// non-identity elements, entry (tuple, coord) at tuple_index * rank + coord;
// tuples are ordered with the leftmost argument most significant.
#pragma once

#include "gcoh/gmodule.hpp"
#include "gcoh/modq.hpp"

#include <map>
#include <memory>
#include <vector>

namespace gcoh {

long long bar_tuples(int group_size, int p);
long long bar_index(int group_size, const std::vector<int>& tuple);
std::vector<int> bar_tuple(int group_size, int p, long long idx);

std::vector<Int> bar_differential(const GModule& m, int p, const std::vector<Int>& f);
// sparse columns of the coboundary matrix C^p -> C^{p+1}
std::vector<std::vector<std::pair<long long, Int>>> bar_columns(const GModule& m, int p);

// apply a module map to every value of a degree-p cochain
std::vector<Int> map_cochain(const GModuleMap& f, int p, const std::vector<Int>& x);

// cup product followed by a coefficient pairing: pairing is a module map
// matrix P.rank x (M.rank * N.rank) out of the tensor square coordinates
// (i, j) -> i * N.rank + j; the result lives in C^{p+q}(G, P)
std::vector<Int> cup_product(const GModule& m, const GModule& n, const GModule& p_mod,
                             const exactla::IntMatrix& pairing, int p, const std::vector<Int>& x,
                             int q, const std::vector<Int>& y);

struct Presentation {
    exactla::PresentedModule pres;       // abelian group presentation over Z
    std::vector<std::vector<Int>> gens;  // canonical cocycle per generator
};

class CohomologyContext {
  public:
    // allow_fast = false forces the generic arbitrary-precision route even
    // when the wordsized modular engine applies (cross-checks, benchmarks)
    explicit CohomologyContext(GModule m, bool allow_fast = true);

    const GModule& mod() const { return m_; }
    long long table_size(int p) const;
    std::vector<Int> flat_canon(int p, std::vector<Int> f) const;

    bool is_cocycle(int p, const std::vector<Int>& f) const;
    bool is_coboundary(int p, const std::vector<Int>& f);
    // canonical representative of f's class (digits minimized top-down)
    std::vector<Int> reduce_cocycle(int p, const std::vector<Int>& f);

    const Presentation& cohomology(int p);
    // coordinates in cohomology(p).pres of the class of a cocycle
    std::vector<Int> class_of(int p, const std::vector<Int>& f);
    std::vector<Int> rep_of(int p, const std::vector<Int>& coords);
    bool same_class(int p, const std::vector<Int>& f, const std::vector<Int>& g);

  private:
    GModule m_;
    bool fast_ = false;
    modq::Zq zq_;
    std::vector<int64_t> rowscale_;  // per coordinate, into the uniform modulus

    std::map<int, modq::EchelonQ> fast_bnd_;          // degree p -> echelon of scaled d(C^{p-1})
    std::map<int, exactla::IntMatrix> slow_hnf_;      // degree p -> hnf of [d(C^{p-1}) | orders]
    std::map<int, Presentation> coh_;
    std::map<int, exactla::IntMatrix> kernel_;        // cocycle generators per degree
    std::map<int, modq::SmithQ> fast_solver_;         // smith of [K | B] scaled
    std::map<int, exactla::Smith> slow_solver_;       // smith of [K | B | orders]
    std::map<int, exactla::IntMatrix> slow_solver_mat_;

    modq::SparseVec scale_sparse(int p, const std::vector<Int>& f) const;
    std::vector<Int> unscale_sparse(int p, const modq::SparseVec& v) const;
    modq::EchelonQ& fast_boundaries(int p);
    const exactla::IntMatrix& slow_boundaries(int p);
    const exactla::IntMatrix& kernel_gens(int p);
};

}  // namespace gcoh
