#include "gcoh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gcoh {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0 || n > kMaxOrder) throw InputError("group order out of range");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw InputError("multiplication table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InputError("table entry out of range");
    }
    for (int g = 0; g < n; ++g)
        if (table[0][g] != g || table[g][0] != g)
            throw InputError("element 0 is not an identity");
    // cancellation: rows and columns are permutations
    for (int g = 0; g < n; ++g) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int h = 0; h < n; ++h) {
            if (seen_row[table[g][h]] || seen_col[table[h][g]])
                throw InputError("table is not a latin square");
            seen_row[table[g][h]] = true;
            seen_col[table[h][g]] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("multiplication table is not associative");
    FiniteGroup g;
    g.n_ = n;
    g.table_ = table;
    g.fill_inverses();
    g.gens_.resize(n > 1 ? n - 1 : 0);
    std::iota(g.gens_.begin(), g.gens_.end(), 1);
    g.word_.assign(n, {-1, -1});
    for (int e = 1; e < n; ++e) g.word_[e] = {0, e - 1};  // e = gens[e-1] * id
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw InputError("no permutation generators");
    int m = static_cast<int>(gens[0].size());
    if (m < 1 || m > kMaxPoints) throw InputError("permutation degree out of range");
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != m) throw InputError("mixed permutation degrees");
        std::vector<bool> seen(m, false);
        for (int v : p) {
            if (v < 0 || v >= m || seen[v]) throw InputError("not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    std::vector<std::pair<int, int>> word{{-1, -1}};
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<int> prod(m);  // gens[gi] composed after elems[head]
            for (int x = 0; x < m; ++x) prod[x] = gens[gi][elems[head][x]];
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(prod);
                word.emplace_back(static_cast<int>(head), static_cast<int>(gi));
                if (static_cast<int>(elems.size()) > kMaxOrder)
                    throw SizeError("generated group exceeds the order cap");
            }
        }
    }
    int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.n_ = n;
    g.table_.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(m);
            for (int x = 0; x < m; ++x) prod[x] = elems[a][elems[b][x]];
            g.table_[a][b] = index.at(prod);
        }
    g.fill_inverses();
    g.perms_ = std::move(elems);
    g.word_ = std::move(word);
    g.gens_.resize(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) g.gens_[gi] = index.at(gens[gi]);
    return g;
}

void FiniteGroup::fill_inverses() {
    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g)
        for (int h = 0; h < n_; ++h)
            if (table_[g][h] == 0 && table_[h][g] == 0) {
                inv_[g] = h;
                break;
            }
    for (int g = 0; g < n_; ++g)
        if (inv_[g] < 0) throw InputError("element without a two-sided inverse");
}

int FiniteGroup::order_of(int g) const {
    int o = 1, x = g;
    while (x != 0) {
        x = mul(x, g);
        ++o;
    }
    return o;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> elems) const {
    std::set<int> s(elems.begin(), elems.end());
    s.insert(0);
    for (;;) {
        size_t before = s.size();
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur) s.insert(mul(a, b));
        if (s.size() == before) break;
    }
    return std::vector<int>(s.begin(), s.end());
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
    if (n_ > 64) throw SizeError("subgroup enumeration capped at order 64");
    std::set<std::vector<int>> found;
    found.insert({0});
    std::vector<std::vector<int>> work{{0}};
    while (!work.empty()) {
        auto h = work.back();
        work.pop_back();
        for (int g = 1; g < n_; ++g) {
            if (std::binary_search(h.begin(), h.end(), g)) continue;
            auto bigger = h;
            bigger.push_back(g);
            auto closed = subgroup_closure(bigger);
            if (found.insert(closed).second) work.push_back(closed);
        }
    }
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

GroupPtr cyclic_group(int n) {
    if (n == 1) return std::make_shared<FiniteGroup>(FiniteGroup::from_table({{0}}));
    if (n <= FiniteGroup::kMaxPoints) {
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
        return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations({cyc}));
    }
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return std::make_shared<FiniteGroup>(FiniteGroup::from_table(t));
}

GroupPtr klein_four_group() {
    return std::make_shared<FiniteGroup>(
        FiniteGroup::from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}}));
}

GroupPtr symmetric_group(int n) {
    if (n < 2 || n > 5) throw InputError("symmetric_group supports 2 <= n <= 5");
    std::vector<int> trans(n), cyc(n);
    for (int i = 0; i < n; ++i) {
        trans[i] = i;
        cyc[i] = (i + 1) % n;
    }
    std::swap(trans[0], trans[1]);
    if (n == 2) return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations({trans}));
    return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations({trans, cyc}));
}

GroupPtr dihedral_group(int n) {
    if (n < 2 || n > FiniteGroup::kMaxPoints) throw InputError("dihedral_group out of range");
    std::vector<int> rot(n), flip(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        flip[i] = (n - i) % n;
    }
    return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations({rot, flip}));
}

GroupPtr gl3_f2() {
    // permutations of the nonzero vectors of F_2^3, point v-1 for vector v
    auto vec_perm = [](auto&& f) {
        std::vector<int> perm(7);
        for (int p = 0; p < 7; ++p) {
            int v = p + 1;
            int x = v & 1, y = (v >> 1) & 1, z = (v >> 2) & 1;
            perm[p] = f(x, y, z) - 1;
        }
        return perm;
    };
    auto shear = vec_perm([](int x, int y, int z) { return (x ^ y) | (y << 1) | (z << 2); });
    auto rotate = vec_perm([](int x, int y, int z) { return z | (x << 1) | (y << 2); });
    return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations({shear, rotate}));
}

}  // namespace gcoh
