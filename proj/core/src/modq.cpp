#include "gcoh/modq.hpp"

#include "gcoh/exactla.hpp"

#include <algorithm>
#include <deque>

namespace gcoh {
namespace modq {

Zq Zq::make(int64_t p, int k) {
    if (p < 2 || k < 1) throw InputError("bad prime power");
    Zq r;
    r.p = p;
    r.k = k;
    r.q = 1;
    for (int i = 0; i < k; ++i) {
        r.q *= p;
        if (r.q > (1 << 15)) throw SizeError("modulus exceeds 2^15");
    }
    return r;
}

std::optional<Zq> Zq::from_modulus(int64_t q) {
    if (q < 2 || q > (1 << 15)) return std::nullopt;
    int64_t m = q;
    int64_t p = 0;
    for (int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = m;  // q prime
    int k = 0;
    while (m > 1) {
        if (m % p != 0) return std::nullopt;
        m /= p;
        ++k;
    }
    return make(p, k);
}

int Zq::val(int64_t a) const {
    a = red(a);
    if (a == 0) return k;
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

int64_t Zq::pow_p(int e) const {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

int64_t Zq::unit_part(int64_t a) const {
    a = red(a);
    if (a == 0) return 1;
    while (a % p == 0) a /= p;
    return a;
}

int64_t Zq::inv_unit(int64_t u) const {
    u = red(u);
    // extended euclid on (u, q)
    int64_t r0 = u, r1 = q, s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t qd = r0 / r1;
        int64_t r2 = r0 - qd * r1, s2 = s0 - qd * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw Error("inv_unit of a non-unit");
    return red(s0);
}

SparseVec sparse_scale(const Zq& R, const SparseVec& x, int64_t c) {
    c = R.red(c);
    SparseVec out;
    out.reserve(x.size());
    for (const auto& [r, v] : x) {
        int64_t w = R.mul(v, c);
        if (w != 0) out.emplace_back(r, w);
    }
    return out;
}

SparseVec sparse_sub_scaled(const Zq& R, const SparseVec& x, int64_t c, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    c = R.red(c);
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            int64_t w = R.red(-c * y[j].second % R.q);
            if (w != 0) out.emplace_back(y[j].first, w);
            ++j;
        } else {
            int64_t w = R.red(x[i].second - c * y[j].second % R.q);
            if (w != 0) out.emplace_back(x[i].first, w);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_from_dense(const Zq& R, const std::vector<int64_t>& x) {
    SparseVec out;
    for (size_t i = 0; i < x.size(); ++i) {
        int64_t v = R.red(x[i]);
        if (v != 0) out.emplace_back(static_cast<int32_t>(i), v);
    }
    return out;
}

std::vector<int64_t> sparse_to_dense(const SparseVec& x, int n) {
    std::vector<int64_t> out(n, 0);
    for (const auto& [r, v] : x) out[r] = v;
    return out;
}

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::mul(const Zq& R, const MatQ& o) const {
    MatQ r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int t = 0; t < cols; ++t) {
            int64_t v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = R.red(r.at(i, j) + v * o.at(t, j));
        }
    return r;
}

std::vector<int64_t> MatQ::apply(const Zq& R, const std::vector<int64_t>& x) const {
    std::vector<int64_t> y(rows, 0);
    for (int i = 0; i < rows; ++i) {
        int64_t s = 0;
        for (int j = 0; j < cols; ++j) s = R.red(s + at(i, j) * x[j]);
        y[i] = s;
    }
    return y;
}

int SmithQ::rank_units() const {
    int r = 0;
    for (int v : dval)
        if (v == 0) ++r;
    return r;
}

SmithQ smith_q(const Zq& R, const MatQ& a) {
    SmithQ s;
    s.d = a;
    for (auto& x : s.d.a) x = R.red(x);
    s.u = MatQ::identity(a.rows);
    s.uinv = MatQ::identity(a.rows);
    s.v = MatQ::identity(a.cols);
    s.vinv = MatQ::identity(a.cols);
    MatQ& d = s.d;
    int m = std::min(a.rows, a.cols);
    s.dval.assign(m, R.k);
    auto row_op = [&](int dst, int src, int64_t c) {
        for (int j = 0; j < d.cols; ++j) d.at(dst, j) = R.red(d.at(dst, j) + c * d.at(src, j));
        for (int j = 0; j < s.u.cols; ++j) s.u.at(dst, j) = R.red(s.u.at(dst, j) + c * s.u.at(src, j));
        for (int i = 0; i < s.uinv.rows; ++i)
            s.uinv.at(i, src) = R.red(s.uinv.at(i, src) - c * s.uinv.at(i, dst));
    };
    auto col_op = [&](int dst, int src, int64_t c) {
        for (int i = 0; i < d.rows; ++i) d.at(i, dst) = R.red(d.at(i, dst) + c * d.at(i, src));
        for (int i = 0; i < s.v.rows; ++i) s.v.at(i, dst) = R.red(s.v.at(i, dst) + c * s.v.at(i, src));
        for (int j = 0; j < s.vinv.cols; ++j)
            s.vinv.at(src, j) = R.red(s.vinv.at(src, j) - c * s.vinv.at(dst, j));
    };
    for (int t = 0; t < m; ++t) {
        // pivot: minimal valuation entry in the remaining block, first by rows
        int pr = -1, pc = -1, bestv = R.k;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                int v = R.val(d.at(i, j));
                if (v < bestv) {
                    bestv = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        if (pr != t) {
            for (int j = 0; j < d.cols; ++j) std::swap(d.at(t, j), d.at(pr, j));
            for (int j = 0; j < s.u.cols; ++j) std::swap(s.u.at(t, j), s.u.at(pr, j));
            for (int i = 0; i < s.uinv.rows; ++i) std::swap(s.uinv.at(i, t), s.uinv.at(i, pr));
        }
        if (pc != t) {
            for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, t), d.at(i, pc));
            for (int i = 0; i < s.v.rows; ++i) std::swap(s.v.at(i, t), s.v.at(i, pc));
            for (int j = 0; j < s.vinv.cols; ++j) std::swap(s.vinv.at(t, j), s.vinv.at(pc, j));
        }
        // normalize pivot to p^v by a unit row scaling
        int64_t w = R.inv_unit(R.unit_part(d.at(t, t)));
        if (w != 1) {
            int64_t winv = R.inv_unit(w);
            for (int j = 0; j < d.cols; ++j) d.at(t, j) = R.mul(d.at(t, j), w);
            for (int j = 0; j < s.u.cols; ++j) s.u.at(t, j) = R.mul(s.u.at(t, j), w);
            for (int i = 0; i < s.uinv.rows; ++i) s.uinv.at(i, t) = R.mul(s.uinv.at(i, t), winv);
        }
        int64_t piv = d.at(t, t);  // p^bestv, divides every remaining entry
        for (int i = t + 1; i < d.rows; ++i)
            if (d.at(i, t) != 0) row_op(i, t, R.red(-(d.at(i, t) / piv)));
        for (int j = t + 1; j < d.cols; ++j)
            if (d.at(t, j) != 0) col_op(j, t, R.red(-(d.at(t, j) / piv)));
        s.dval[t] = bestv;
    }
    return s;
}

std::optional<std::vector<int64_t>> solve_q(const Zq& R, const SmithQ& s,
                                            const std::vector<int64_t>& b) {
    std::vector<int64_t> c = s.u.apply(R, b);
    int m = static_cast<int>(s.dval.size());
    std::vector<int64_t> y(s.d.cols, 0);
    for (int i = 0; i < s.d.rows; ++i) {
        int64_t ci = c[i];
        int dv = i < m ? s.dval[i] : R.k;
        if (dv >= R.k) {
            if (ci != 0) return std::nullopt;
        } else {
            if (R.val(ci) < dv) return std::nullopt;
            if (i < s.d.cols) y[i] = ci / R.pow_p(dv);
        }
    }
    return s.v.apply(R, y);
}

std::vector<std::vector<int64_t>> kernel_q(const Zq& R, const SmithQ& s) {
    std::vector<std::vector<int64_t>> gens;
    int m = static_cast<int>(s.dval.size());
    for (int j = 0; j < s.d.cols; ++j) {
        int dv = j < m ? s.dval[j] : R.k;
        if (dv == 0) continue;  // unit pivot, no kernel
        int64_t scale = dv >= R.k ? 1 : R.pow_p(R.k - dv);
        std::vector<int64_t> col(s.v.rows);
        for (int i = 0; i < s.v.rows; ++i) col[i] = R.mul(s.v.at(i, j), scale);
        gens.push_back(std::move(col));
    }
    return gens;
}

void EchelonQ::insert(SparseVec col) {
    std::deque<SparseVec> work;
    work.push_back(std::move(col));
    while (!work.empty()) {
        SparseVec c = std::move(work.front());
        work.pop_front();
        for (;;) {
            while (!c.empty() && R_.red(c.front().second) == 0) c.erase(c.begin());
            if (c.empty()) break;
            int32_t r = c.front().first;
            int64_t lead = R_.red(c.front().second);
            c.front().second = lead;
            int vc = R_.val(lead);
            auto it = piv_.find(r);
            if (it == piv_.end()) {
                if (vc > 0) {
                    SparseVec norm = sparse_scale(R_, c, R_.inv_unit(R_.unit_part(lead)));
                    work.push_back(sparse_scale(R_, norm, R_.pow_p(R_.k - vc)));
                    piv_.emplace(r, std::move(norm));
                } else {
                    piv_.emplace(r, sparse_scale(R_, c, R_.inv_unit(R_.unit_part(lead))));
                }
                break;
            }
            int vp = R_.val(it->second.front().second);
            if (vc >= vp) {
                c = sparse_sub_scaled(R_, c, lead / R_.pow_p(vp), it->second);
            } else {
                SparseVec norm = sparse_scale(R_, c, R_.inv_unit(R_.unit_part(lead)));
                SparseVec old = std::move(it->second);
                it->second = norm;
                work.push_back(std::move(old));
                if (vc > 0) work.push_back(sparse_scale(R_, norm, R_.pow_p(R_.k - vc)));
                break;
            }
        }
    }
}

SparseVec EchelonQ::reduce(const SparseVec& x, bool maximize) const {
    std::map<int32_t, int64_t> cur;
    for (const auto& [r, v] : x) {
        int64_t w = R_.red(v);
        if (w != 0) cur[r] = w;
    }
    // canonicalize the digit at every pivot row, top-down
    for (const auto& [r, col] : piv_) {
        auto cit = cur.find(r);
        int64_t a = cit == cur.end() ? 0 : cit->second;
        int vp = R_.val(col.front().second);
        int64_t pw = R_.pow_p(vp);
        int64_t c;
        if (!maximize) {
            c = a / pw;  // digit into [0, p^v)
        } else {
            // digit into [q - p^v, q)
            int64_t target = (a % pw) + R_.q - pw;
            c = R_.red((a - target) / pw % (R_.q / pw));
        }
        if (c == 0) continue;
        for (const auto& [rr, vv] : col) {
            auto it = cur.find(rr);
            int64_t w = R_.red((it == cur.end() ? 0 : it->second) - c * vv % R_.q);
            if (w == 0) {
                if (it != cur.end()) cur.erase(it);
            } else if (it == cur.end()) {
                cur.emplace(rr, w);
            } else {
                it->second = w;
            }
        }
    }
    SparseVec out;
    out.reserve(cur.size());
    for (const auto& [r, v] : cur) out.emplace_back(r, v);
    return out;
}

bool EchelonQ::contains(const SparseVec& x) const { return reduce(x).empty(); }

}  // namespace modq
}  // namespace gcoh
