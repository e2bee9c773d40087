#include "gcoh/complexes.hpp"

namespace gcoh {

using exactla::IntMatrix;
using exactla::Ring;

namespace {

void check_orders(const IntMatrix& a, const std::vector<Int>& tgt, const std::vector<Int>& src) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (tgt[static_cast<size_t>(i)] == 0) {
                if (src[static_cast<size_t>(j)] != 0 && a.at(i, j) != 0)
                    throw InputError("torsion coordinate mapped into a Z coordinate");
            } else if (exactla::mod_floor(a.at(i, j) * src[static_cast<size_t>(j)],
                                          tgt[static_cast<size_t>(i)]) != 0) {
                throw InputError("matrix does not respect coordinate orders");
            }
        }
}

bool zero_mod(const IntMatrix& a, const std::vector<Int>& tgt) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Int& o = tgt[static_cast<size_t>(i)];
            if (o == 0 ? a.at(i, j) != 0 : exactla::mod_floor(a.at(i, j), o) != 0) return false;
        }
    return true;
}

// columns spanning the kernel of d out of slot i (everything when no map)
IntMatrix kernel_at(const BoundedComplex& c, int i) {
    if (i + 1 < c.slots()) return exactla::kernel_congruence(c.diffs[static_cast<size_t>(i)],
                                                            c.orders[static_cast<size_t>(i) + 1]);
    return IntMatrix::identity(Ring::z(), c.rank(i));
}

}  // namespace

void BoundedComplex::validate() const {
    if (static_cast<int>(diffs.size()) + 1 != slots() && !(slots() == 0 && diffs.empty()))
        throw InputError("complex needs one differential between consecutive slots");
    for (size_t i = 0; i < orders.size(); ++i)
        for (const auto& o : orders[i])
            if (o < 0 || o == 1) throw InputError("coordinate order must be 0 or >= 2");
    for (size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].rows() != rank(static_cast<int>(i) + 1) ||
            diffs[i].cols() != rank(static_cast<int>(i)))
            throw InputError("differential shape mismatch");
        check_orders(diffs[i], orders[i + 1], orders[i]);
    }
    for (size_t i = 0; i + 1 < diffs.size(); ++i)
        if (!zero_mod(diffs[i + 1].mul(diffs[i]), orders[i + 2]))
            throw InputError("differential does not square to zero");
}

void ChainMap::validate(const BoundedComplex& src, const BoundedComplex& tgt) const {
    if (static_cast<int>(comps.size()) != src.slots() || src.slots() != tgt.slots() ||
        src.lo != tgt.lo)
        throw InputError("chain map needs matching slot ranges");
    for (int i = 0; i < src.slots(); ++i) {
        const IntMatrix& f = comps[static_cast<size_t>(i)];
        if (f.rows() != tgt.rank(i) || f.cols() != src.rank(i))
            throw InputError("chain map component shape mismatch");
        check_orders(f, tgt.orders[static_cast<size_t>(i)], src.orders[static_cast<size_t>(i)]);
        if (i + 1 < src.slots()) {
            IntMatrix lhs = tgt.diffs[static_cast<size_t>(i)].mul(f);
            IntMatrix rhs = comps[static_cast<size_t>(i) + 1].mul(src.diffs[static_cast<size_t>(i)]);
            if (!zero_mod(lhs.sub(rhs), tgt.orders[static_cast<size_t>(i) + 1]))
                throw InputError("map does not commute with the differentials");
        }
    }
}

ChainMap identity_chain_map(const BoundedComplex& c) {
    ChainMap f;
    for (int i = 0; i < c.slots(); ++i)
        f.comps.push_back(IntMatrix::identity(Ring::z(), c.rank(i)));
    return f;
}

ChainMap compose_chain_maps(const ChainMap& f, const ChainMap& g) {
    if (f.comps.size() != g.comps.size()) throw InputError("chain map sizes differ");
    ChainMap out;
    for (size_t i = 0; i < f.comps.size(); ++i) out.comps.push_back(f.comps[i].mul(g.comps[i]));
    return out;
}

bool induces_zero_on_cohomology(const BoundedComplex& src, const BoundedComplex& tgt,
                                const ChainMap& f, int* offending) {
    for (int i = 0; i < src.slots(); ++i) {
        IntMatrix ker = kernel_at(src, i);
        for (int j = 0; j < ker.cols(); ++j) {
            auto v = f.comps[static_cast<size_t>(i)].apply(ker.column(j));
            bool dead;
            if (i == 0) {
                dead = true;
                for (int r = 0; r < tgt.rank(0); ++r) {
                    const Int& o = tgt.orders[0][static_cast<size_t>(r)];
                    Int val = o == 0 ? v[static_cast<size_t>(r)]
                                     : exactla::mod_floor(v[static_cast<size_t>(r)], o);
                    if (val != 0) dead = false;
                }
            } else {
                dead = static_cast<bool>(exactla::solve_congruence(
                    tgt.diffs[static_cast<size_t>(i) - 1], v, tgt.orders[static_cast<size_t>(i)]));
            }
            if (!dead) {
                if (offending) *offending = src.lo + i;
                return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<IntMatrix>> null_homotopy(const BoundedComplex& src,
                                                    const BoundedComplex& tgt, const ChainMap& f) {
    f.validate(src, tgt);
    int n = src.slots();
    // unknowns: entries of h_i: src slot i -> tgt slot i-1, for i = 1..n-1
    std::vector<int> offset(static_cast<size_t>(n), 0);
    int vars = 0;
    for (int i = 1; i < n; ++i) {
        offset[static_cast<size_t>(i)] = vars;
        vars += src.rank(i) * tgt.rank(i - 1);
    }
    int rows = 0;
    for (int i = 0; i < n; ++i) rows += tgt.rank(i) * src.rank(i);
    IntMatrix a(Ring::z(), rows, vars);
    std::vector<Int> b(static_cast<size_t>(rows));
    std::vector<Int> moduli(static_cast<size_t>(rows));
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < tgt.rank(i); ++r)
            for (int s = 0; s < src.rank(i); ++s) {
                // equation: (d h_i + h_{i+1} d)(r, s) = f_i(r, s)
                if (i >= 1) {
                    const IntMatrix& d = tgt.diffs[static_cast<size_t>(i) - 1];
                    for (int k = 0; k < tgt.rank(i - 1); ++k)
                        a.at(row, offset[static_cast<size_t>(i)] + s * tgt.rank(i - 1) + k) +=
                            d.at(r, k);
                }
                if (i + 1 < n) {
                    const IntMatrix& d = src.diffs[static_cast<size_t>(i)];
                    for (int m = 0; m < src.rank(i + 1); ++m)
                        a.at(row, offset[static_cast<size_t>(i) + 1] + m * tgt.rank(i) + r) +=
                            d.at(m, s);
                }
                b[static_cast<size_t>(row)] = f.comps[static_cast<size_t>(i)].at(r, s);
                moduli[static_cast<size_t>(row)] = tgt.orders[static_cast<size_t>(i)][static_cast<size_t>(r)];
                ++row;
            }
    }
    auto sol = exactla::solve_congruence(a, b, moduli);
    if (!sol) return std::nullopt;
    std::vector<IntMatrix> h;
    h.push_back(IntMatrix(Ring::z(), 0, src.rank(0)));
    for (int i = 1; i < n; ++i) {
        IntMatrix hi(Ring::z(), tgt.rank(i - 1), src.rank(i));
        for (int s = 0; s < src.rank(i); ++s)
            for (int k = 0; k < tgt.rank(i - 1); ++k)
                hi.at(k, s) = (*sol)[static_cast<size_t>(offset[static_cast<size_t>(i)] +
                                                         s * tgt.rank(i - 1) + k)];
        h.push_back(std::move(hi));
    }
    // verify by substitution
    for (int i = 0; i < n; ++i) {
        IntMatrix got(Ring::z(), tgt.rank(i), src.rank(i));
        if (i >= 1) got = got.add(tgt.diffs[static_cast<size_t>(i) - 1].mul(h[static_cast<size_t>(i)]));
        if (i + 1 < n)
            got = got.add(h[static_cast<size_t>(i) + 1].mul(src.diffs[static_cast<size_t>(i)]));
        if (!zero_mod(got.sub(f.comps[static_cast<size_t>(i)]), tgt.orders[static_cast<size_t>(i)]))
            throw Error("homotopy verification failed");
    }
    return h;
}

NilpotencyCertificate nilpotency_certificate(const BoundedComplex& c, const ChainMap& f) {
    c.validate();
    f.validate(c, c);
    NilpotencyCertificate cert;
    int first = 0, last = c.slots() - 1;
    while (first < c.slots() && c.rank(first) == 0) ++first;
    while (last >= 0 && c.rank(last) == 0) --last;
    cert.power = last < first ? 0 : last - first + 1;
    cert.precondition = induces_zero_on_cohomology(c, c, f, &cert.offending_degree);
    if (!cert.precondition) return cert;
    cert.fpow = identity_chain_map(c);
    for (int k = 0; k < cert.power; ++k) cert.fpow = compose_chain_maps(f, cert.fpow);
    auto h = null_homotopy(c, c, cert.fpow);
    if (h) {
        cert.ok = true;
        cert.homotopy = std::move(*h);
    }
    return cert;
}

}  // namespace gcoh
