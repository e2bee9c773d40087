#include "gcoh/cohomology.hpp"

#include <algorithm>

namespace gcoh {

using exactla::IntMatrix;
using exactla::Ring;

namespace {

constexpr long long kDenseCap = 1LL << 22;

IntMatrix dense_from_cols(long long rows,
                          const std::vector<std::vector<std::pair<long long, Int>>>& cols) {
    if (rows * static_cast<long long>(cols.size()) > kDenseCap)
        throw SizeError("coboundary matrix too large for the exact path");
    IntMatrix a(Ring::z(), static_cast<int>(rows), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, v] : cols[j]) a.at(static_cast<int>(r), static_cast<int>(j)) = v;
    return a;
}

// kernel over F_2 of a matrix too large to hold densely: its rows are streamed
// through a bit-packed elimination, so memory stays at one machine word per
// column per pivot
IntMatrix kernel_mod2_stream(int n, const std::vector<std::vector<std::pair<long long, Int>>>& cols) {
    size_t words = (static_cast<size_t>(n) + 63) / 64;
    std::vector<std::pair<long long, int>> ent;  // (row, column) of the odd entries
    for (int j = 0; j < n; ++j)
        for (const auto& [r, v] : cols[static_cast<size_t>(j)])
            if (exactla::mod_floor(v, 2) == 1) ent.emplace_back(r, j);
    std::sort(ent.begin(), ent.end());
    std::vector<std::vector<uint64_t>> pivot(static_cast<size_t>(n));
    std::vector<uint64_t> buf(words);
    auto lead = [&](const std::vector<uint64_t>& v, int from) {
        for (size_t w = static_cast<size_t>(from) >> 6; w < words; ++w) {
            uint64_t x = v[w];
            if (w == static_cast<size_t>(from) >> 6) x &= ~0ull << (from & 63);
            if (x) return static_cast<int>(w << 6) + __builtin_ctzll(x);
        }
        return n;
    };
    for (size_t i = 0; i < ent.size();) {
        std::fill(buf.begin(), buf.end(), 0);
        long long row = ent[i].first;
        for (; i < ent.size() && ent[i].first == row; ++i)
            buf[static_cast<size_t>(ent[i].second) >> 6] ^= 1ull << (ent[i].second & 63);
        int c = lead(buf, 0);
        while (c < n && !pivot[static_cast<size_t>(c)].empty()) {
            const auto& pv = pivot[static_cast<size_t>(c)];
            for (size_t w = static_cast<size_t>(c) >> 6; w < words; ++w) buf[w] ^= pv[w];
            c = lead(buf, c + 1);
        }
        if (c < n) pivot[static_cast<size_t>(c)] = buf;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (pivot[static_cast<size_t>(c)].empty()) free_cols.push_back(c);
    IntMatrix k(Ring::z(), n, static_cast<int>(free_cols.size()));
    std::vector<uint64_t> x(words);
    for (size_t j = 0; j < free_cols.size(); ++j) {
        std::fill(x.begin(), x.end(), 0);
        x[static_cast<size_t>(free_cols[j]) >> 6] ^= 1ull << (free_cols[j] & 63);
        for (int c = free_cols[j] - 1; c >= 0; --c) {
            const auto& pv = pivot[static_cast<size_t>(c)];
            if (pv.empty()) continue;
            int par = 0;
            for (size_t w = static_cast<size_t>(c) >> 6; w < words; ++w)
                par ^= __builtin_popcountll(pv[w] & x[w]) & 1;
            if (par) x[static_cast<size_t>(c) >> 6] ^= 1ull << (c & 63);
        }
        for (int i = 0; i < n; ++i)
            if ((x[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1) k.at(i, static_cast<int>(j)) = 1;
    }
    return k;
}

}  // namespace

CohomologyContext::CohomologyContext(GModule m, bool allow_fast) : m_(std::move(m)) {
    Int p;
    int kmax = 0;
    if (allow_fast && m_.rank() > 0 && m_.p_primary(&p, &kmax) && p < 1 << 15) {
        int64_t pi = p.get_si();
        int64_t q = 1;
        bool fits = true;
        for (int i = 0; i < kmax; ++i) {
            q *= pi;
            if (q > (1 << 15)) {
                fits = false;
                break;
            }
        }
        if (fits) {
            fast_ = true;
            zq_ = modq::Zq::make(pi, kmax);
            rowscale_.resize(m_.rank());
            for (int i = 0; i < m_.rank(); ++i) {
                int e = 0;
                Int o = m_.orders[i];
                while (o % p == 0) {
                    o /= p;
                    ++e;
                }
                rowscale_[i] = zq_.pow_p(kmax - e);
            }
        }
    }
}

long long CohomologyContext::table_size(int p) const {
    return bar_tuples(m_.group->size(), p) * m_.rank();
}

std::vector<Int> CohomologyContext::flat_canon(int p, std::vector<Int> f) const {
    int r = m_.rank();
    if (static_cast<long long>(f.size()) != table_size(p)) throw Error("cochain size mismatch");
    for (size_t i = 0; i < f.size(); ++i) {
        const Int& o = m_.orders[i % r];
        if (o != 0) f[i] = exactla::mod_floor(f[i], o);
    }
    return f;
}

bool CohomologyContext::is_cocycle(int p, const std::vector<Int>& f) const {
    auto d = bar_differential(m_, p, f);
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) return false;  // bar_differential already canonicalizes
    return true;
}

modq::SparseVec CohomologyContext::scale_sparse(int p, const std::vector<Int>& f) const {
    int r = m_.rank();
    modq::SparseVec out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        int64_t v = exactla::mod_floor(f[i], Int(zq_.q)).get_si();
        v = zq_.mul(v, rowscale_[i % r]);
        if (v != 0) out.emplace_back(static_cast<int32_t>(i), v);
    }
    return out;
}

std::vector<Int> CohomologyContext::unscale_sparse(int p, const modq::SparseVec& v) const {
    int r = m_.rank();
    std::vector<Int> out(table_size(p), Int(0));
    for (const auto& [row, val] : v) {
        int64_t s = rowscale_[row % r];
        if (val % s != 0) throw Error("internal: representative not in the scaled image");
        out[row] = val / s;
    }
    return out;
}

modq::EchelonQ& CohomologyContext::fast_boundaries(int p) {
    auto it = fast_bnd_.find(p);
    if (it != fast_bnd_.end()) return it->second;
    modq::EchelonQ ech(zq_);
    int r = m_.rank();
    if (p >= 1) {
        if (table_size(p) > (1LL << 31) - 1) throw SizeError("cochain table exceeds row index range");
        auto cols = bar_columns(m_, p - 1);
        for (const auto& col : cols) {
            modq::SparseVec sv;
            sv.reserve(col.size());
            for (const auto& [row, v] : col) {
                int64_t w = exactla::mod_floor(v, Int(zq_.q)).get_si();
                w = zq_.mul(w, rowscale_[row % r]);
                if (w != 0) sv.emplace_back(static_cast<int32_t>(row), w);
            }
            ech.insert(std::move(sv));
        }
    }
    return fast_bnd_.emplace(p, std::move(ech)).first->second;
}

const IntMatrix& CohomologyContext::slow_boundaries(int p) {
    auto it = slow_hnf_.find(p);
    if (it != slow_hnf_.end()) return it->second;
    long long rows = table_size(p);
    int r = m_.rank();
    std::vector<std::vector<std::pair<long long, Int>>> cols;
    if (p >= 1) cols = bar_columns(m_, p - 1);
    for (long long i = 0; i < rows; ++i)
        if (m_.orders[i % r] != 0) cols.push_back({{i, m_.orders[i % r]}});
    auto hnf = exactla::hnf_columns(dense_from_cols(rows, cols));
    return slow_hnf_.emplace(p, std::move(hnf)).first->second;
}

const IntMatrix& CohomologyContext::kernel_gens(int p) {
    auto it = kernel_.find(p);
    if (it != kernel_.end()) return it->second;
    long long rows = table_size(p + 1), cols_n = table_size(p);
    int r = m_.rank();
    auto cols = bar_columns(m_, p);
    IntMatrix k(Ring::z(), 0, 0);
    if (fast_ && rows * cols_n > kDenseCap && zq_.q == 2) {
        if (cols_n > (1 << 20)) throw SizeError("cocycle computation too large");
        k = kernel_mod2_stream(static_cast<int>(cols_n), cols);
    } else if (fast_) {
        if (rows * cols_n > kDenseCap) throw SizeError("cocycle computation too large");
        modq::MatQ a(static_cast<int>(rows), static_cast<int>(cols_n));
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [row, v] : cols[j]) {
                int64_t w = exactla::mod_floor(v, Int(zq_.q)).get_si();
                a.at(static_cast<int>(row), static_cast<int>(j)) = zq_.mul(w, rowscale_[row % r]);
            }
        auto gens = modq::kernel_q(zq_, modq::smith_q(zq_, a));
        // canonicalize modulo the source coordinate orders, drop zero columns
        std::vector<std::vector<Int>> keep;
        for (auto& g : gens) {
            std::vector<Int> col(cols_n);
            bool nonzero = false;
            for (long long i = 0; i < cols_n; ++i) {
                col[i] = exactla::mod_floor(Int(g[i]), m_.orders[i % r]);
                nonzero |= col[i] != 0;
            }
            if (nonzero) keep.push_back(std::move(col));
        }
        k = IntMatrix(Ring::z(), static_cast<int>(cols_n), static_cast<int>(keep.size()));
        for (size_t j = 0; j < keep.size(); ++j) k.set_column(static_cast<int>(j), keep[j]);
    } else {
        auto a = dense_from_cols(rows, cols);
        std::vector<Int> moduli(rows);
        for (long long i = 0; i < rows; ++i) moduli[i] = m_.orders[i % r];
        k = exactla::kernel_congruence(a, moduli);
    }
    return kernel_.emplace(p, std::move(k)).first->second;
}

bool CohomologyContext::is_coboundary(int p, const std::vector<Int>& f) {
    if (fast_) return fast_boundaries(p).contains(scale_sparse(p, f));
    auto red = exactla::coset_reduce(slow_boundaries(p), f);
    return exactla::vec_is_zero(red);
}

std::vector<Int> CohomologyContext::reduce_cocycle(int p, const std::vector<Int>& f) {
    if (fast_) return unscale_sparse(p, fast_boundaries(p).reduce(scale_sparse(p, f)));
    return exactla::coset_reduce(slow_boundaries(p), f);
}

const Presentation& CohomologyContext::cohomology(int p) {
    auto it = coh_.find(p);
    if (it != coh_.end()) return it->second;
    const IntMatrix& kmat = kernel_gens(p);
    int k = kmat.cols();
    long long rows = table_size(p);
    int r = m_.rank();
    IntMatrix rel(Ring::z(), k, 0);
    if (fast_) {
        auto bcols = p >= 1 ? bar_columns(m_, p - 1) : decltype(bar_columns(m_, 0)){};
        int nb = static_cast<int>(bcols.size());
        if (rows * (k + nb) > kDenseCap) throw SizeError("cohomology presentation too large");
        modq::MatQ mq(static_cast<int>(rows), k + nb);
        for (int j = 0; j < k; ++j)
            for (long long i = 0; i < rows; ++i)
                if (kmat.at(static_cast<int>(i), j) != 0) {
                    int64_t w = exactla::mod_floor(kmat.at(static_cast<int>(i), j), Int(zq_.q)).get_si();
                    mq.at(static_cast<int>(i), j) = zq_.mul(w, rowscale_[i % r]);
                }
        for (int j = 0; j < nb; ++j)
            for (const auto& [row, v] : bcols[j]) {
                int64_t w = exactla::mod_floor(v, Int(zq_.q)).get_si();
                mq.at(static_cast<int>(row), k + j) = zq_.mul(w, rowscale_[row % r]);
            }
        auto smith = modq::smith_q(zq_, mq);
        auto gens = modq::kernel_q(zq_, smith);
        rel = IntMatrix(Ring::z(), k, static_cast<int>(gens.size()) + k);
        for (size_t j = 0; j < gens.size(); ++j)
            for (int i = 0; i < k; ++i) rel.at(i, static_cast<int>(j)) = gens[j][i];
        for (int i = 0; i < k; ++i) rel.at(i, static_cast<int>(gens.size()) + i) = zq_.q;
        fast_solver_.emplace(p, std::move(smith));
    } else {
        std::vector<std::vector<std::pair<long long, Int>>> cols;
        for (int j = 0; j < k; ++j) {
            std::vector<std::pair<long long, Int>> col;
            for (long long i = 0; i < rows; ++i)
                if (kmat.at(static_cast<int>(i), j) != 0)
                    col.emplace_back(i, kmat.at(static_cast<int>(i), j));
            cols.push_back(std::move(col));
        }
        if (p >= 1)
            for (auto& c : bar_columns(m_, p - 1)) cols.push_back(std::move(c));
        for (long long i = 0; i < rows; ++i)
            if (m_.orders[i % r] != 0) cols.push_back({{i, m_.orders[i % r]}});
        auto big = dense_from_cols(rows, cols);
        auto smith = exactla::smith_normal_form(big);
        auto ker = exactla::kernel_columns(big);
        rel = IntMatrix(Ring::z(), k, ker.cols());
        for (int j = 0; j < ker.cols(); ++j)
            for (int i = 0; i < k; ++i) rel.at(i, j) = ker.at(i, j);
        slow_solver_.emplace(p, std::move(smith));
        slow_solver_mat_.emplace(p, std::move(big));
    }
    Presentation pr{exactla::PresentedModule(Ring::z(), k, rel), {}};
    for (int i = 0; i < pr.pres.dim(); ++i) {
        std::vector<Int> unit(pr.pres.dim(), Int(0));
        unit[i] = 1;
        auto c = pr.pres.lift(unit);
        auto f = flat_canon(p, kmat.apply(c));
        pr.gens.push_back(reduce_cocycle(p, f));
    }
    return coh_.emplace(p, std::move(pr)).first->second;
}

std::vector<Int> CohomologyContext::class_of(int p, const std::vector<Int>& f) {
    const Presentation& pr = cohomology(p);
    int k = kernel_gens(p).cols();
    std::vector<Int> c(k, Int(0));
    if (fast_) {
        const auto& smith = fast_solver_.at(p);
        auto sf = scale_sparse(p, f);
        std::vector<int64_t> dense(table_size(p), 0);
        for (const auto& [row, v] : sf) dense[row] = v;
        auto sol = modq::solve_q(zq_, smith, dense);
        if (!sol) throw InputError("class_of called on a non-cocycle");
        for (int i = 0; i < k; ++i) c[i] = (*sol)[i];
    } else {
        const auto& smith = slow_solver_.at(p);
        auto sol = exactla::solve_linear(smith, f);
        if (!sol) throw InputError("class_of called on a non-cocycle");
        for (int i = 0; i < k; ++i) c[i] = (*sol)[i];
    }
    return pr.pres.reduce(c);
}

std::vector<Int> CohomologyContext::rep_of(int p, const std::vector<Int>& coords) {
    const Presentation& pr = cohomology(p);
    auto c = pr.pres.lift(pr.pres.canon(coords));
    auto f = flat_canon(p, kernel_gens(p).apply(c));
    return reduce_cocycle(p, f);
}

bool CohomologyContext::same_class(int p, const std::vector<Int>& f, const std::vector<Int>& g) {
    return is_coboundary(p, flat_canon(p, exactla::vec_sub(f, g)));
}

}  // namespace gcoh
