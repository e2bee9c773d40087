#include "gcoh/functors.hpp"

#include <algorithm>

namespace gcoh {

using exactla::IntMatrix;
using exactla::Ring;
using exactla::mod_floor;

namespace {

Int exponent_of(const GModule& m) {
    Int n = 1;
    for (const auto& o : m.orders) {
        if (o == 0) throw InputError("operation needs a finite module");
        Int l;
        mpz_lcm(l.get_mpz_t(), n.get_mpz_t(), o.get_mpz_t());
        n = l;
    }
    return n;
}

int pair_count(int r) { return r * (r - 1) / 2; }

// lex position of (i, j) with i < j among all such pairs
int pair_index(int r, int i, int j) {
    return i * r - i * (i + 1) / 2 + (j - i - 1);
}

Int uniform_order(const GModule& m) {
    if (m.rank() == 0) return 0;
    for (const auto& o : m.orders)
        if (o != m.orders[0]) throw InputError("module must have uniform coordinate orders");
    return m.orders[0];
}

}  // namespace

GModule dual_module(const GModule& m) {
    Int n = exponent_of(m);
    int r = m.rank();
    std::vector<IntMatrix> act;
    act.reserve(m.group->size());
    for (int g = 0; g < m.group->size(); ++g) {
        const IntMatrix& ap = m.action[m.group->inv(g)];
        IntMatrix d(Ring::z(), r, r);
        for (int j = 0; j < r; ++j) {    // source functional x_j
            Int sj = n / m.orders[j];
            for (int k = 0; k < r; ++k) {  // target coefficient on x_k
                Int sk = n / m.orders[k];
                Int val = mod_floor(ap.at(j, k) * sj, n);
                if (val % sk != 0) throw Error("dual action does not respect the value scaling");
                d.at(k, j) = val / sk;
            }
        }
        act.push_back(std::move(d));
    }
    return module_from_full_action(m.group, m.orders, std::move(act));
}

exactla::IntMatrix dual_evaluation(const GModule& m) {
    Int n = exponent_of(m);
    int r = m.rank();
    IntMatrix p(Ring::z(), 1, r * r);
    for (int i = 0; i < r; ++i) p.at(0, i * r + i) = n / m.orders[i];
    return p;
}

GModule tensor_module(const GModule& a, const GModule& b) {
    if (a.group != b.group) throw InputError("tensor factors over different groups");
    std::vector<Int> orders;
    orders.reserve(static_cast<size_t>(a.rank()) * b.rank());
    for (const auto& oa : a.orders)
        for (const auto& ob : b.orders) {
            Int g;
            mpz_gcd(g.get_mpz_t(), oa.get_mpz_t(), ob.get_mpz_t());
            orders.push_back(g);
        }
    std::vector<IntMatrix> act;
    act.reserve(a.group->size());
    for (int g = 0; g < a.group->size(); ++g) act.push_back(a.action[g].kronecker(b.action[g]));
    return module_from_full_action(a.group, std::move(orders), std::move(act));
}

GModule direct_sum_module(const GModule& a, const GModule& b) {
    if (a.group != b.group) throw InputError("direct sum over different groups");
    std::vector<Int> orders = a.orders;
    orders.insert(orders.end(), b.orders.begin(), b.orders.end());
    int ra = a.rank(), rb = b.rank();
    std::vector<IntMatrix> act;
    act.reserve(a.group->size());
    for (int g = 0; g < a.group->size(); ++g) {
        IntMatrix w(Ring::z(), ra + rb, ra + rb);
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < ra; ++j) w.at(i, j) = a.action[g].at(i, j);
        for (int i = 0; i < rb; ++i)
            for (int j = 0; j < rb; ++j) w.at(ra + i, ra + j) = b.action[g].at(i, j);
        act.push_back(std::move(w));
    }
    return module_from_full_action(a.group, std::move(orders), std::move(act));
}

GModule wedge2_module(const GModule& m) {
    Int o = uniform_order(m);
    int r = m.rank();
    int rp = pair_count(r);
    std::vector<IntMatrix> act;
    act.reserve(m.group->size());
    for (int g = 0; g < m.group->size(); ++g) {
        const IntMatrix& a = m.action[g];
        IntMatrix w(Ring::z(), rp, rp);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (int s = 0; s < r; ++s)
                    for (int t = s + 1; t < r; ++t)
                        w.at(pair_index(r, s, t), pair_index(r, i, j)) =
                            a.at(s, i) * a.at(t, j) - a.at(t, i) * a.at(s, j);
        act.push_back(std::move(w));
    }
    return module_from_full_action(m.group, std::vector<Int>(rp, o), std::move(act));
}

GModule sym2_module(const GModule& m) {
    Int o = uniform_order(m);
    int r = m.rank();
    int rs = r * (r + 1) / 2;
    auto idx = [r](int i, int j) {  // i <= j
        return i * r - i * (i - 1) / 2 + (j - i);
    };
    std::vector<IntMatrix> act;
    act.reserve(m.group->size());
    for (int g = 0; g < m.group->size(); ++g) {
        const IntMatrix& a = m.action[g];
        IntMatrix w(Ring::z(), rs, rs);
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j)
                for (int u = 0; u < r; ++u) {
                    w.at(idx(u, u), idx(i, j)) = a.at(u, i) * a.at(u, j);
                    for (int v = u + 1; v < r; ++v)
                        w.at(idx(u, v), idx(i, j)) =
                            a.at(u, i) * a.at(v, j) + a.at(v, i) * a.at(u, j);
                }
        act.push_back(std::move(w));
    }
    return module_from_full_action(m.group, std::vector<Int>(rs, o), std::move(act));
}

GModule signed_sym_module(const GModule& m) {
    Int o = uniform_order(m);
    if (o == 0) throw InputError("signed symmetric square needs a finite module");
    bool has_diag = (o % 2 == 0);
    int r = m.rank();
    int rp = pair_count(r);
    int total = rp + (has_diag ? r : 0);
    std::vector<Int> orders(static_cast<size_t>(rp), o);
    if (has_diag) orders.insert(orders.end(), static_cast<size_t>(r), Int(2));
    std::vector<IntMatrix> act;
    act.reserve(m.group->size());
    for (int g = 0; g < m.group->size(); ++g) {
        const IntMatrix& a = m.action[g];
        IntMatrix w(Ring::z(), total, total);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                int col = pair_index(r, i, j);
                for (int s = 0; s < r; ++s) {
                    for (int t = s + 1; t < r; ++t)
                        w.at(pair_index(r, s, t), col) =
                            a.at(s, i) * a.at(t, j) - a.at(t, i) * a.at(s, j);
                    if (has_diag) w.at(rp + s, col) = mod_floor(a.at(s, i) * a.at(s, j), 2);
                }
            }
        if (has_diag)
            for (int i = 0; i < r; ++i)
                for (int s = 0; s < r; ++s) w.at(rp + s, rp + i) = mod_floor(a.at(s, i), 2);
        act.push_back(std::move(w));
    }
    return module_from_full_action(m.group, std::move(orders), std::move(act));
}

Quad2 quad2_module(const GModule& m) {
    Int p;
    int kk = 0;
    if (!m.p_primary(&p, &kk)) throw InputError("quadratic-function module needs a p-primary module");
    Int pk = uniform_order(m);
    int r = m.rank();
    Int target = pk;
    if (p == 2) {
        if (kk < 2) throw InputError("need precision at least 4 over the prime 2");
        target = pk / 2;
    }
    int rp = pair_count(r);
    int total = 2 * r + rp;
    // layout: x_0..x_{r-1}, q_0..q_{r-1}, then pairs (i < j) lex
    std::vector<IntMatrix> act;
    act.reserve(m.group->size());
    for (int g = 0; g < m.group->size(); ++g) {
        const IntMatrix& a = m.action[g];
        IntMatrix w(Ring::z(), total, total);
        for (int i = 0; i < r; ++i) {
            for (int s = 0; s < r; ++s) w.at(s, i) = a.at(s, i);
            // q_i: substitute the column a into q(x) = (x^2 - x)/2
            for (int s = 0; s < r; ++s) {
                Int as = a.at(s, i);
                w.at(r + s, r + i) = as * as;
                w.at(s, r + i) = (as * as - as) / 2;
                for (int t = s + 1; t < r; ++t)
                    w.at(2 * r + pair_index(r, s, t), r + i) = as * a.at(t, i);
            }
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                int col = 2 * r + pair_index(r, i, j);
                for (int s = 0; s < r; ++s) {
                    Int asbs = a.at(s, i) * a.at(s, j);
                    w.at(r + s, col) = 2 * asbs;  // x_s^2 = 2 q_s + x_s
                    w.at(s, col) = asbs;
                    for (int t = s + 1; t < r; ++t)
                        w.at(2 * r + pair_index(r, s, t), col) =
                            a.at(s, i) * a.at(t, j) + a.at(t, i) * a.at(s, j);
                }
            }
        act.push_back(std::move(w));
    }
    Quad2 out;
    out.mod = module_from_full_action(m.group, std::vector<Int>(total, target), std::move(act));
    out.base = reduce_mod_module(m, target);
    out.lin = IntMatrix(Ring::z(), total, r);
    for (int i = 0; i < r; ++i) out.lin.at(i, i) = 1;
    out.polar = IntMatrix(Ring::z(), r * r, total);
    for (int i = 0; i < r; ++i) out.polar.at(i * r + i, r + i) = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int col = 2 * r + pair_index(r, i, j);
            out.polar.at(i * r + j, col) = 1;
            out.polar.at(j * r + i, col) = 1;
        }
    out.compare = IntMatrix(Ring::z(), r, total);
    for (int i = 0; i < r; ++i) {
        out.compare.at(i, i) = 2;
        out.compare.at(i, r + i) = target - 1;
    }
    return out;
}

GModule reduce_mod_module(const GModule& m, const Int& k) {
    if (k < 2) throw InputError("reduction modulus must be >= 2");
    std::vector<Int> orders;
    orders.reserve(m.orders.size());
    for (const auto& o : m.orders) {
        Int g;
        mpz_gcd(g.get_mpz_t(), o.get_mpz_t(), k.get_mpz_t());
        if (g == 1) throw InputError("reduction kills a coordinate outright");
        orders.push_back(g);
    }
    return module_from_full_action(m.group, std::move(orders), m.action);
}

GModule twist_module(const GModule& m, const std::vector<Int>& chi) {
    if (static_cast<int>(chi.size()) != m.group->size())
        throw InputError("character needs one value per group element");
    if (chi[0] != 1) throw InputError("character must send the identity to 1");
    std::vector<IntMatrix> act;
    act.reserve(m.group->size());
    for (int g = 0; g < m.group->size(); ++g) act.push_back(m.action[g].scaled(chi[g]));
    // multiplicativity of chi (mod every coordinate order) is caught by the
    // action validation below
    return module_from_full_action(m.group, m.orders, std::move(act));
}

Submodule submodule_module(const GModule& ambient, const exactla::IntMatrix& gens) {
    if (gens.rows() != ambient.rank()) throw InputError("generator columns have the wrong height");
    exactla::PresentedModule pres(Ring::z(), gens.cols(),
                                  exactla::kernel_congruence(gens, ambient.orders));
    int d = pres.dim();
    IntMatrix incl(Ring::z(), ambient.rank(), d);
    for (int t = 0; t < d; ++t) {
        std::vector<Int> unit(static_cast<size_t>(d), Int(0));
        unit[t] = 1;
        incl.set_column(t, ambient.canon(gens.apply(pres.lift(unit))));
    }
    std::vector<IntMatrix> act;
    act.reserve(ambient.group->size());
    for (int g = 0; g < ambient.group->size(); ++g) {
        IntMatrix a(Ring::z(), d, d);
        for (int t = 0; t < d; ++t) {
            auto img = ambient.act(g, incl.column(t));
            auto y = exactla::solve_congruence(gens, img, ambient.orders);
            if (!y) throw InputError("columns do not span a stable submodule");
            a.set_column(t, pres.reduce(*y));
        }
        act.push_back(std::move(a));
    }
    Submodule out;
    out.mod = module_from_full_action(ambient.group, pres.orders(), std::move(act));
    out.incl = std::move(incl);
    return out;
}

}  // namespace gcoh
