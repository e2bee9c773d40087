// Exact sequences of modules over a finite group and their connecting
// homomorphisms on bar cochains. Three terms form a short extension, four
// terms a two-step extension whose connecting map raises degree by 2.
#pragma once

#include "gcoh/cohomology.hpp"
#include "gcoh/functors.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gcoh {

class Extension {
  public:
    Extension() = default;
    // 0 -> modules[0] -> ... -> modules.back() -> 0; maps[i] sends
    // modules[i] into modules[i+1]. Equivariance and exactness at every
    // node are checked.
    Extension(std::vector<GModule> modules, std::vector<exactla::IntMatrix> maps,
              std::string tag = "");

    int terms() const { return static_cast<int>(modules_.size()); }
    int degree_shift() const { return terms() - 2; }
    const GModule& module_at(int i) const { return modules_[i]; }
    const exactla::IntMatrix& map_at(int i) const { return maps_[i]; }
    const GModule& sub() const { return modules_.front(); }
    const GModule& quot() const { return modules_.back(); }
    const std::string& tag() const { return tag_; }

    // lexicographically smallest integer preimage of c (canonicalized) under
    // the rightmost surjection; memoized per value
    std::vector<Int> section(const std::vector<Int>& c) const;

    // connecting homomorphism: a degree-p cocycle valued in quot() goes to a
    // degree-(p + degree_shift()) cocycle valued in sub()
    std::vector<Int> connect(int p, const std::vector<Int>& x) const;

    // the two short extensions obtained by splitting a four-term sequence at
    // the image of its middle map
    const Extension& left_splice() const;
    const Extension& right_splice() const;

  private:
    struct State;
    std::vector<GModule> modules_;
    std::vector<exactla::IntMatrix> maps_;
    std::string tag_;
    std::shared_ptr<State> st_;

    void validate() const;
    void build_splices() const;
};

// 0 -> N/p^i -> N/p^{m+i} -> N/p^m -> 0 with the first map times p^m
Extension bockstein_extension(const GModule& lattice, const Int& p, int m, int i);

// 0 -> V -> S^2 V -> Wedge^2 V -> 0 over F_2, v -> v*v
Extension alpha_extension(const GModule& v);

// 0 -> Z/2 -> mu4 -> Z/2 -> 0 where mu4 is Z/4 twisted by the order-2
// character chi (one value +-1 per group element)
Extension mu4_extension(GroupPtr g, const std::vector<Int>& chi);

// four terms 0 -> M' -> Q2(M) -> M' (x) M' -> Wedge^2 M' -> 0 built from the
// quadratic-function module; M free p-primary, M' the working precision
Extension genius_extension(const GModule& m);

// four terms 0 -> M/2^{K-1} -> M -> signed sym -> Wedge^2(M/2^{K-1}) -> 0
// for M free over Z/2^K, middle map m -> class of m (x) m
Extension genius1_extension(const GModule& m);

// base change of a short extension along f into the quotient / out of the sub
Extension pullback_extension(const Extension& e, const GModuleMap& f);
Extension pushout_extension(const Extension& e, const GModuleMap& f);

// induced map on cohomology coordinates: columns are classes of connect
// applied to the source presentation's generators
exactla::IntMatrix connecting_induced(const Extension& e, CohomologyContext& src,
                                      CohomologyContext& tgt, int p);

// same for an ordinary module map
exactla::IntMatrix map_induced(const GModuleMap& f, CohomologyContext& src,
                               CohomologyContext& tgt, int p);

}  // namespace gcoh
