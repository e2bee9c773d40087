// Finite groups, given by a full multiplication table or by permutation
// generators. Element 0 is always the identity.
#pragma once

#include "gcoh/exactla.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace gcoh {

class FiniteGroup {
  public:
    static constexpr int kMaxOrder = 512;
    static constexpr int kMaxPoints = 16;

    // table[a][b] = a*b; validated (identity, inverses, associativity)
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
    // generators as permutations of {0..m-1}; the group they generate
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens);

    int size() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int g) const { return inv_[g]; }
    int order_of(int g) const;
    bool is_abelian() const;

    // generating set as element ids (all non-identity elements for table input)
    const std::vector<int>& generators() const { return gens_; }
    // element g > 0 satisfies g = generators()[word_[g].second] * word_[g].first
    const std::vector<std::pair<int, int>>& word_data() const { return word_; }
    // permutation image of each element (empty unless built from permutations)
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    // all subgroups, each a sorted element list (small groups only)
    std::vector<std::vector<int>> subgroups() const;
    std::vector<int> subgroup_closure(std::vector<int> elems) const;

  private:
    int n_ = 1;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<std::pair<int, int>> word_;
    std::vector<std::vector<int>> perms_;

    void fill_inverses();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// common constructions used throughout the test corpus
GroupPtr cyclic_group(int n);
GroupPtr klein_four_group();
GroupPtr symmetric_group(int n);  // n <= 5 as permutations
GroupPtr dihedral_group(int n);   // order 2n
GroupPtr gl3_f2();                // order 168, permuting the 7 nonzero vectors

}  // namespace gcoh
