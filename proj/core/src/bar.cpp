#include "gcoh/cohomology.hpp"

namespace gcoh {

using exactla::IntMatrix;

long long bar_tuples(int group_size, int p) {
    if (p < 0) return 0;
    long long t = 1;
    for (int i = 0; i < p; ++i) {
        t *= group_size - 1;
        if (t > (1LL << 26)) throw SizeError("cochain table too large");
    }
    return t;
}

long long bar_index(int group_size, const std::vector<int>& tuple) {
    long long idx = 0;
    for (int g : tuple) idx = idx * (group_size - 1) + (g - 1);
    return idx;
}

std::vector<int> bar_tuple(int group_size, int p, long long idx) {
    std::vector<int> t(p);
    for (int i = p - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % (group_size - 1)) + 1;
        idx /= group_size - 1;
    }
    return t;
}

std::vector<Int> bar_differential(const GModule& m, int p, const std::vector<Int>& f) {
    const FiniteGroup& grp = *m.group;
    int n = grp.size(), r = m.rank();
    long long nt = bar_tuples(n, p + 1);
    std::vector<Int> out(nt * r, Int(0));
    // value of f at a tuple that may contain the identity (normalized: zero)
    auto fat = [&](const std::vector<int>& t) -> std::vector<Int> {
        for (int g : t)
            if (g == 0) return std::vector<Int>(r, Int(0));
        long long base = bar_index(n, t) * r;
        return std::vector<Int>(f.begin() + base, f.begin() + base + r);
    };
    std::vector<int> s(p + 1);
    for (long long idx = 0; idx < nt; ++idx) {
        s = bar_tuple(n, p + 1, idx);
        std::vector<int> sub(s.begin() + 1, s.end());
        std::vector<Int> acc = m.action[s[0]].apply(fat(sub));
        for (int i = 1; i <= p; ++i) {
            std::vector<int> merged;
            merged.reserve(p);
            for (int j = 0; j < i - 1; ++j) merged.push_back(s[j]);
            merged.push_back(grp.mul(s[i - 1], s[i]));
            for (int j = i + 1; j <= p; ++j) merged.push_back(s[j]);
            auto val = fat(merged);
            if (i % 2 == 0)
                acc = exactla::vec_add(acc, val);
            else
                acc = exactla::vec_sub(acc, val);
        }
        std::vector<int> prefix(s.begin(), s.end() - 1);
        auto last = fat(prefix);
        if ((p + 1) % 2 == 0)
            acc = exactla::vec_add(acc, last);
        else
            acc = exactla::vec_sub(acc, last);
        acc = m.canon(acc);
        for (int c = 0; c < r; ++c) out[idx * r + c] = acc[c];
    }
    return out;
}

std::vector<std::vector<std::pair<long long, Int>>> bar_columns(const GModule& m, int p) {
    const FiniteGroup& grp = *m.group;
    int n = grp.size(), r = m.rank();
    long long nt = bar_tuples(n, p);
    std::vector<std::vector<std::pair<long long, Int>>> cols(nt * r);
    std::vector<int> t(p);
    for (long long tidx = 0; tidx < nt; ++tidx) {
        t = bar_tuple(n, p, tidx);
        for (int j = 0; j < r; ++j) {
            std::map<long long, Int> acc;
            // first face: s = (g, t...), value g . e_j
            std::vector<int> s(p + 1);
            std::copy(t.begin(), t.end(), s.begin() + 1);
            for (int g = 1; g < n; ++g) {
                s[0] = g;
                long long base = bar_index(n, s) * r;
                const IntMatrix& a = m.action[g];
                for (int i = 0; i < r; ++i)
                    if (a.at(i, j) != 0) acc[base + i] += a.at(i, j);
            }
            // middle faces: replace t_i by a factorization a*b
            for (int i = 1; i <= p; ++i) {
                std::vector<int> w(p + 1);
                for (int l = 0; l < i - 1; ++l) w[l] = t[l];
                for (int l = i; l < p; ++l) w[l + 1] = t[l];
                int sign = i % 2 == 0 ? 1 : -1;
                for (int a = 1; a < n; ++a) {
                    int b = grp.mul(grp.inv(a), t[i - 1]);
                    if (b == 0) continue;
                    w[i - 1] = a;
                    w[i] = b;
                    acc[bar_index(n, w) * r + j] += sign;
                }
            }
            // last face: s = (t..., g)
            std::vector<int> u(p + 1);
            std::copy(t.begin(), t.end(), u.begin());
            int sign = (p + 1) % 2 == 0 ? 1 : -1;
            for (int g = 1; g < n; ++g) {
                u[p] = g;
                acc[bar_index(n, u) * r + j] += sign;
            }
            auto& col = cols[tidx * r + j];
            for (auto& [row, v] : acc)
                if (v != 0) col.emplace_back(row, v);
        }
    }
    return cols;
}

std::vector<Int> map_cochain(const GModuleMap& f, int p, const std::vector<Int>& x) {
    int rs = f.src.rank(), rt = f.tgt.rank();
    long long nt = bar_tuples(f.src.group->size(), p);
    std::vector<Int> out(nt * rt);
    for (long long t = 0; t < nt; ++t) {
        std::vector<Int> v(x.begin() + t * rs, x.begin() + (t + 1) * rs);
        auto w = f.apply(v);
        for (int c = 0; c < rt; ++c) out[t * rt + c] = w[c];
    }
    return out;
}

std::vector<Int> cup_product(const GModule& m, const GModule& n_mod, const GModule& p_mod,
                             const exactla::IntMatrix& pairing, int p, const std::vector<Int>& x,
                             int q, const std::vector<Int>& y) {
    const FiniteGroup& grp = *m.group;
    int n = grp.size();
    int rm = m.rank(), rn = n_mod.rank(), rp = p_mod.rank();
    if (pairing.rows() != rp || pairing.cols() != rm * rn)
        throw InputError("cup pairing shape mismatch");
    long long nt = bar_tuples(n, p + q);
    std::vector<Int> out(nt * rp, Int(0));
    std::vector<int> s(p + q);
    for (long long idx = 0; idx < nt; ++idx) {
        s = bar_tuple(n, p + q, idx);
        std::vector<int> pre(s.begin(), s.begin() + p), suf(s.begin() + p, s.end());
        std::vector<Int> xv(x.begin() + bar_index(n, pre) * rm,
                            x.begin() + bar_index(n, pre) * rm + rm);
        std::vector<Int> yv(y.begin() + bar_index(n, suf) * rn,
                            y.begin() + bar_index(n, suf) * rn + rn);
        int h = 0;
        for (int g : pre) h = grp.mul(h, g);
        yv = n_mod.act(h, yv);
        std::vector<Int> tensor(rm * rn);
        for (int i = 0; i < rm; ++i)
            for (int j = 0; j < rn; ++j) tensor[i * rn + j] = xv[i] * yv[j];
        auto w = p_mod.canon(pairing.apply(tensor));
        for (int c = 0; c < rp; ++c) out[idx * rp + c] = w[c];
    }
    return out;
}

}  // namespace gcoh
