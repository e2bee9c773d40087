#include "gcoh/exactla.hpp"

#include <algorithm>
#include <cassert>

namespace gcoh {
namespace exactla {

Int mod_floor(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

Ring Ring::zmod(const Int& n) {
    if (n < 2) throw InputError("modulus must be >= 2");
    return Ring{false, n};
}

std::string Ring::str() const {
    return is_z ? std::string("Z") : "Z/" + n.get_str();
}

IntMatrix::IntMatrix(Ring ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

IntMatrix IntMatrix::identity(Ring ring, int n) {
    IntMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(Ring ring, const std::vector<std::vector<Int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(ring, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = ring.reduce(rows[i][j]);
    }
    return m;
}

void IntMatrix::canonicalize() {
    if (ring_.is_z) return;
    for (auto& x : a_) x = mod_floor(x, ring_.n);
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    IntMatrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    r.canonicalize();
    return r;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    IntMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] + o.a_[i]);
    return r;
}

IntMatrix IntMatrix::sub(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    IntMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] - o.a_[i]);
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.reduce(a_[i] * c);
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& o) const {
    IntMatrix r(ring_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Int& v = at(i, j);
            if (v == 0) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = ring_.reduce(v * o.at(k, l));
        }
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw Error("hstack shape mismatch");
    IntMatrix r(ring_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::with_ring(Ring ring) const {
    IntMatrix r(ring, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = ring.reduce(at(i, j));
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw Error("apply shape mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0) s += at(i, j) * x[j];
        y[i] = ring_.reduce(s);
    }
    return y;
}

std::vector<Int> IntMatrix::column(int c) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void IntMatrix::set_column(int c, const std::vector<Int>& v) {
    for (int i = 0; i < rows_; ++i) at(i, c) = ring_.reduce(v[i]);
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && a_ == o.a_;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j) at(dst, j) = ring_.reduce(at(dst, j) + c * at(src, j));
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, dst) = ring_.reduce(at(i, dst) + c * at(i, src));
}

void IntMatrix::scale_row(int i, const Int& c) {
    for (int j = 0; j < cols_; ++j) at(i, j) = ring_.reduce(at(i, j) * c);
}

void IntMatrix::scale_col(int j, const Int& c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = ring_.reduce(at(i, j) * c);
}

std::vector<Int> Smith::diagonal() const {
    int m = std::min(d.rows(), d.cols());
    std::vector<Int> out(m);
    for (int i = 0; i < m; ++i) out[i] = d.at(i, i);
    return out;
}

int Smith::rank() const {
    int r = 0;
    for (const Int& x : diagonal())
        if (x != 0) ++r;
    return r;
}

namespace {

// Integer Smith normal form with transformation tracking. Pivot rule: entry of
// minimal absolute value, ties broken by smallest row then smallest column.
struct SnfWorker {
    IntMatrix d, u, uinv, v, vinv;

    explicit SnfWorker(const IntMatrix& a)
        : d(a.with_ring(Ring::z())),
          u(IntMatrix::identity(Ring::z(), a.rows())),
          uinv(IntMatrix::identity(Ring::z(), a.rows())),
          v(IntMatrix::identity(Ring::z(), a.cols())),
          vinv(IntMatrix::identity(Ring::z(), a.cols())) {}

    void row_op(int dst, int src, const Int& c) {  // row_dst += c*row_src
        d.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        uinv.add_col_multiple(src, dst, -c);
    }
    void col_op(int dst, int src, const Int& c) {
        d.add_col_multiple(dst, src, c);
        v.add_col_multiple(dst, src, c);
        vinv.add_row_multiple(src, dst, -c);
    }
    void row_swap(int i, int j) {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void col_swap(int i, int j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void row_negate(int i) {
        d.scale_row(i, Int(-1));
        u.scale_row(i, Int(-1));
        uinv.scale_col(i, Int(-1));
    }

    bool find_pivot(int t, int& pr, int& pc) const {
        bool found = false;
        Int best = 0;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                const Int& x = d.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    void run() {
        int m = std::min(d.rows(), d.cols());
        for (int t = 0; t < m; ++t) {
            int pr, pc;
            if (!find_pivot(t, pr, pc)) break;
            row_swap(t, pr);
            col_swap(t, pc);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < d.rows(); ++i) {
                    if (d.at(i, t) == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                    row_op(i, t, -q);
                    if (d.at(i, t) != 0) {  // remainder strictly smaller: promote it
                        row_swap(t, i);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < d.cols(); ++j) {
                    if (d.at(t, j) == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                    col_op(j, t, -q);
                    if (d.at(t, j) != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (d.at(t, t) < 0) row_negate(t);
        }
        // enforce the divisibility chain d_t | d_{t+1}; one 2x2 fix can break
        // earlier pairs, so sweep until stable
        for (bool changed = true; changed;) {
            changed = false;
            for (int t = 0; t + 1 < m; ++t) {
                if (d.at(t, t) == 0 || d.at(t + 1, t + 1) == 0) continue;
                if (d.at(t + 1, t + 1) % d.at(t, t) == 0) continue;
                changed = true;
                col_op(t, t + 1, Int(1));  // puts d_{t+1} into column t
                for (;;) {
                    bool clean = true;
                    if (d.at(t + 1, t) != 0) {
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), d.at(t + 1, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                        row_op(t + 1, t, -q);
                        if (d.at(t + 1, t) != 0) {
                            row_swap(t, t + 1);
                            clean = false;
                        }
                    }
                    if (d.at(t, t + 1) != 0) {
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), d.at(t, t + 1).get_mpz_t(), d.at(t, t).get_mpz_t());
                        col_op(t + 1, t, -q);
                        if (d.at(t, t + 1) != 0) {
                            col_swap(t, t + 1);
                            clean = false;
                        }
                    }
                    if (clean) break;
                }
                if (d.at(t, t) < 0) row_negate(t);
                if (d.at(t + 1, t + 1) < 0) row_negate(t + 1);
            }
        }
    }
};

// unit u mod n with u * (d/g) == 1 (mod n/g) where g = gcd(d, n); then
// u*d == g (mod n) and gcd(u, n) = 1
Int unit_fixing_divisor(const Int& d, const Int& g, const Int& n) {
    Int q = n / g;
    if (q == 1) return Int(1);
    Int dg = mod_floor(d / g, q);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), q.get_mpz_t()) == 0)
        throw Error("internal: divisor not invertible");
    for (Int u = inv;; u += q) {
        Int c;
        mpz_gcd(c.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
        if (c == 1) return mod_floor(u, n);
    }
}

}  // namespace

Smith smith_normal_form(const IntMatrix& a) {
    // Z/n: lift to Z, run the integer algorithm, reduce, gcd diagonal with n.
    SnfWorker w(a);
    w.run();
    Smith s{w.u, w.uinv, w.v, w.vinv, w.d};
    if (!a.ring().is_z) {
        const Int& n = a.ring().n;
        int m = std::min(s.d.rows(), s.d.cols());
        for (int i = 0; i < m; ++i) {
            Int di = s.d.at(i, i);
            if (di == 0) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
            if (g != di) {
                Int uu = unit_fixing_divisor(di, g, n);
                s.u.scale_row(i, uu);
                s.d.scale_row(i, uu);
                Int uinvv;
                mpz_invert(uinvv.get_mpz_t(), uu.get_mpz_t(), n.get_mpz_t());
                s.uinv.scale_col(i, uinvv);
            }
        }
        s.u = s.u.with_ring(a.ring());
        s.uinv = s.uinv.with_ring(a.ring());
        s.v = s.v.with_ring(a.ring());
        s.vinv = s.vinv.with_ring(a.ring());
        s.d = s.d.with_ring(a.ring());
        for (int i = 0; i < m; ++i) {
            Int di = s.d.at(i, i);
            if (di != 0) {
                Int g;
                mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
                s.d.at(i, i) = g;  // same ideal; canonical generator
            }
        }
    }
    return s;
}

namespace {

// d*y == c (mod n), n = 0 meaning over Z
std::optional<Int> solve_scalar(const Int& d, const Int& c, const Int& n) {
    if (n == 0) {
        if (d == 0) return c == 0 ? std::optional<Int>(Int(0)) : std::nullopt;
        if (c % d != 0) return std::nullopt;
        return c / d;
    }
    Int dd = mod_floor(d, n), cc = mod_floor(c, n);
    if (dd == 0) return cc == 0 ? std::optional<Int>(Int(0)) : std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), n.get_mpz_t());
    if (cc % g != 0) return std::nullopt;
    Int q = n / g;
    Int inv;
    mpz_invert(inv.get_mpz_t(), Int(mod_floor(dd / g, q)).get_mpz_t(), q.get_mpz_t());
    return mod_floor((cc / g) * inv, q);
}

}  // namespace

std::optional<std::vector<Int>> solve_linear(const Smith& s, const std::vector<Int>& b) {
    const Ring& ring = s.d.ring();
    Int n = ring.is_z ? Int(0) : ring.n;
    std::vector<Int> c = s.u.apply(b);
    int rows = s.d.rows(), cols = s.d.cols();
    int m = std::min(rows, cols);
    std::vector<Int> y(cols, Int(0));
    for (int i = 0; i < rows; ++i) {
        Int di = i < m ? s.d.at(i, i) : Int(0);
        auto yi = solve_scalar(di, c[i], n);
        if (!yi) return std::nullopt;
        if (i < m) y[i] = *yi;
    }
    auto x = s.v.apply(y);
    return x;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b) {
    return solve_linear(smith_normal_form(a), b);
}

IntMatrix kernel_columns(const IntMatrix& a) {
    Smith s = smith_normal_form(a);
    int cols = a.cols();
    int m = std::min(a.rows(), cols);
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < cols; ++i) {
        Int di = i < m ? s.d.at(i, i) : Int(0);
        if (a.ring().is_z) {
            if (di == 0) gens.push_back(s.v.column(i));
        } else {
            const Int& n = a.ring().n;
            Int g;
            if (di == 0)
                g = n;
            else
                mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
            Int mult = n / g;
            if (mult == n) continue;  // unit pivot: no kernel contribution
            std::vector<Int> col = s.v.column(i);
            for (auto& x : col) x = a.ring().reduce(x * mult);
            gens.push_back(std::move(col));
        }
    }
    IntMatrix k(a.ring(), cols, static_cast<int>(gens.size()));
    for (int j = 0; j < k.cols(); ++j) k.set_column(j, gens[j]);
    return k;
}

namespace {

// append diag(moduli) slack columns for rows with modulus != 0
IntMatrix augment_with_moduli(const IntMatrix& a, const std::vector<Int>& moduli) {
    int extra = 0;
    for (const auto& m : moduli)
        if (m != 0) ++extra;
    IntMatrix r(Ring::z(), a.rows(), a.cols() + extra);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    int c = a.cols();
    for (int i = 0; i < a.rows(); ++i)
        if (moduli[i] != 0) r.at(i, c++) = moduli[i];
    return r;
}

}  // namespace

std::optional<std::vector<Int>> solve_congruence(const IntMatrix& a, const std::vector<Int>& b,
                                                 const std::vector<Int>& moduli) {
    if (static_cast<int>(moduli.size()) != a.rows() || static_cast<int>(b.size()) != a.rows())
        throw Error("solve_congruence shape mismatch");
    IntMatrix aug = augment_with_moduli(a.with_ring(Ring::z()), moduli);
    auto sol = solve_linear(aug, b);
    if (!sol) return std::nullopt;
    sol->resize(a.cols());
    return sol;
}

IntMatrix kernel_congruence(const IntMatrix& a, const std::vector<Int>& moduli) {
    IntMatrix aug = augment_with_moduli(a.with_ring(Ring::z()), moduli);
    IntMatrix k = kernel_columns(aug);
    IntMatrix out(Ring::z(), a.cols(), k.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) out.at(i, j) = k.at(i, j);
    return out;
}

IntMatrix hnf_columns(const IntMatrix& a) {
    if (!a.ring().is_z) throw Error("hnf_columns requires ring Z");
    IntMatrix w = a;
    int rows = w.rows(), cols = w.cols();
    int t = 0;  // next column to fill
    for (int r = 0; r < rows && t < cols; ++r) {
        // gcd-combine columns t.. to clear row r beyond column t
        int piv = -1;
        for (int j = t; j < cols; ++j)
            if (w.at(r, j) != 0) {
                if (piv == -1 || abs(w.at(r, j)) < abs(w.at(r, piv))) piv = j;
            }
        if (piv == -1) continue;
        w.swap_cols(t, piv);
        for (;;) {
            bool clean = true;
            for (int j = t + 1; j < cols; ++j) {
                if (w.at(r, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, t).get_mpz_t());
                w.add_col_multiple(j, t, -q);
                if (w.at(r, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (w.at(r, t) < 0) w.scale_col(t, Int(-1));
        // reduce earlier columns' entries in this row into [0, pivot)
        for (int j = 0; j < t; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, t).get_mpz_t());
            w.add_col_multiple(j, t, -q);
        }
        ++t;
    }
    // drop zero columns
    IntMatrix out(Ring::z(), rows, t);
    // columns 0..t-1 hold the echelon in pivot-row order? After the loop the
    // first t columns are the pivots in increasing pivot-row order.
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < t; ++j) out.at(i, j) = w.at(i, j);
    return out;
}

std::vector<Int> coset_reduce(const IntMatrix& hnf, std::vector<Int> x) {
    int rows = hnf.rows();
    int col = 0;
    for (int r = 0; r < rows && col < hnf.cols(); ++r) {
        if (hnf.at(r, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), x[r].get_mpz_t(), hnf.at(r, col).get_mpz_t());
        if (q != 0)
            for (int i = 0; i < rows; ++i) x[i] -= q * hnf.at(i, col);
        ++col;
    }
    return x;
}

PresentedModule::PresentedModule(Ring ring, int ambient_rank, const IntMatrix& relations)
    : ring_(ring), ambient_(ambient_rank), relations_(relations.with_ring(ring)) {
    if (relations.rows() != ambient_rank)
        throw InputError("relations must have ambient_rank rows");
    Smith s = smith_normal_form(relations_);
    int m = std::min(relations_.rows(), relations_.cols());
    std::vector<int> keep;
    std::vector<Int> orders;
    for (int i = 0; i < ambient_rank; ++i) {
        Int di = i < m ? s.d.at(i, i) : Int(0);
        Int order;
        if (ring_.is_z) {
            order = di < 0 ? Int(-di) : di;  // 0 = free
        } else {
            if (di == 0)
                order = ring_.n;
            else
                mpz_gcd(order.get_mpz_t(), di.get_mpz_t(), ring_.n.get_mpz_t());
        }
        if (order == 1) continue;  // trivial factor
        keep.push_back(i);
        orders.push_back(order);
    }
    orders_ = std::move(orders);
    to_canon_ = IntMatrix(ring_, dim(), ambient_);
    from_canon_ = IntMatrix(ring_, ambient_, dim());
    for (int k = 0; k < dim(); ++k) {
        for (int j = 0; j < ambient_; ++j) to_canon_.at(k, j) = s.u.at(keep[k], j);
        for (int i = 0; i < ambient_; ++i) from_canon_.at(i, k) = s.uinv.at(i, keep[k]);
    }
}

PresentedModule PresentedModule::free_module(Ring ring, int rank) {
    return PresentedModule(ring, rank, IntMatrix(ring, rank, 0));
}

std::vector<Int> PresentedModule::invariant_factors() const {
    std::vector<Int> f = orders_;
    std::sort(f.begin(), f.end(), [](const Int& a, const Int& b) {
        if (a == 0) return true;  // free factors first (treated as largest)
        if (b == 0) return false;
        return a > b;
    });
    return f;
}

bool PresentedModule::is_finite() const {
    for (const auto& o : orders_)
        if (o == 0) return false;
    return true;
}

Int PresentedModule::size() const {
    if (!is_finite()) return 0;
    Int s = 1;
    for (const auto& o : orders_) s *= o;
    return s;
}

std::vector<Int> PresentedModule::canon(std::vector<Int> v) const {
    if (v.size() != orders_.size()) throw Error("canon dimension mismatch");
    for (size_t i = 0; i < v.size(); ++i)
        if (orders_[i] != 0) v[i] = mod_floor(v[i], orders_[i]);
    return v;
}

std::vector<Int> PresentedModule::reduce(const std::vector<Int>& ambient) const {
    return canon(to_canon_.apply(ambient));
}

std::vector<Int> PresentedModule::lift(const std::vector<Int>& canonical) const {
    return from_canon_.apply(canonical);
}

bool PresentedModule::is_zero_element(const std::vector<Int>& v) const {
    for (size_t i = 0; i < v.size(); ++i) {
        if (orders_[i] == 0) {
            if (v[i] != 0) return false;
        } else if (mod_floor(v[i], orders_[i]) != 0)
            return false;
    }
    return true;
}

std::vector<Int> PresentedModule::add(const std::vector<Int>& x, const std::vector<Int>& y) const {
    return canon(vec_add(x, y));
}
std::vector<Int> PresentedModule::sub(const std::vector<Int>& x, const std::vector<Int>& y) const {
    return canon(vec_sub(x, y));
}
std::vector<Int> PresentedModule::neg(const std::vector<Int>& x) const {
    return canon(vec_scale(Int(-1), x));
}
std::vector<Int> PresentedModule::scale(const Int& c, const std::vector<Int>& x) const {
    return canon(vec_scale(c, x));
}

std::vector<std::vector<Int>> PresentedModule::enumerate(long long cap) const {
    if (!is_finite()) throw Error("cannot enumerate an infinite module");
    if (size() > Int(static_cast<long>(cap))) throw SizeError("module too large to enumerate");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(orders_.size(), Int(0));
    for (;;) {
        out.push_back(cur);
        int i = 0;
        for (; i < dim(); ++i) {
            cur[i] += 1;
            if (cur[i] < orders_[i]) break;
            cur[i] = 0;
        }
        if (i == dim()) break;
    }
    if (out.empty()) out.push_back({});
    return out;
}

PresentedModule quotient_presentation(Ring ring, int ambient_rank, const IntMatrix& relations) {
    return PresentedModule(ring, ambient_rank, relations);
}

std::vector<Int> vec_add(const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != y.size()) throw Error("vector sum shape mismatch");
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

std::vector<Int> vec_sub(const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != y.size()) throw Error("vector difference shape mismatch");
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

std::vector<Int> vec_scale(const Int& c, const std::vector<Int>& x) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

bool vec_is_zero(const std::vector<Int>& x) {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

bool lex_less(const std::vector<Int>& x, const std::vector<Int>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace exactla
}  // namespace gcoh
