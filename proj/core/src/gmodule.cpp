#include "gcoh/gmodule.hpp"

#include <algorithm>
#include <sstream>

namespace gcoh {

using exactla::IntMatrix;
using exactla::Ring;

namespace {

// o_tgt | entry * o_src for every entry, reading order 0 as Z
void check_order_compat(const IntMatrix& a, const std::vector<Int>& tgt_orders,
                        const std::vector<Int>& src_orders) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Int prod = a.at(i, j) * src_orders[j];
            if (tgt_orders[i] == 0) {
                if (src_orders[j] != 0 && a.at(i, j) != 0)
                    throw InputError("torsion coordinate mapped into a Z coordinate");
            } else if (exactla::mod_floor(prod, tgt_orders[i]) != 0) {
                throw InputError("matrix does not respect coordinate orders");
            }
        }
}

IntMatrix canon_rows(IntMatrix a, const std::vector<Int>& orders) {
    for (int i = 0; i < a.rows(); ++i) {
        if (orders[i] == 0) continue;
        for (int j = 0; j < a.cols(); ++j) a.at(i, j) = exactla::mod_floor(a.at(i, j), orders[i]);
    }
    return a;
}

bool rows_equal_mod(const IntMatrix& a, const IntMatrix& b, const std::vector<Int>& orders) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Int d = a.at(i, j) - b.at(i, j);
            if (orders[i] == 0 ? d != 0 : exactla::mod_floor(d, orders[i]) != 0) return false;
        }
    return true;
}

}  // namespace

bool GModule::is_finite() const {
    for (const auto& o : orders)
        if (o == 0) return false;
    return true;
}

bool GModule::is_trivial_action() const {
    IntMatrix id = IntMatrix::identity(Ring::z(), rank());
    for (const auto& a : action)
        if (!rows_equal_mod(a, id, orders)) return false;
    return true;
}

bool GModule::p_primary(Int* p, int* kmax) const {
    Int prime = 0;
    int best = 0;
    for (const auto& o : orders) {
        if (o == 0) return false;
        Int m = o;
        if (m == 1) continue;
        Int q = 2;
        while (m % q != 0) q += 1;
        if (prime == 0) prime = q;
        if (q != prime) return false;
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (m != 1) return false;
        best = std::max(best, e);
    }
    if (prime == 0) return false;  // all coordinates trivial
    if (p) *p = prime;
    if (kmax) *kmax = best;
    return true;
}

std::vector<Int> GModule::canon(std::vector<Int> v) const {
    for (int i = 0; i < rank(); ++i)
        if (orders[i] != 0) v[i] = exactla::mod_floor(v[i], orders[i]);
    return v;
}

std::vector<Int> GModule::act(int g, const std::vector<Int>& v) const {
    return canon(action[g].apply(v));
}

std::string GModule::key() const {
    std::ostringstream os;
    os << group.get() << '|';
    for (const auto& o : orders) os << o << ',';
    os << '|';
    for (const auto& a : action)
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) os << a.at(i, j) << ',';
    return os.str();
}

GModule module_from_full_action(GroupPtr g, std::vector<Int> orders,
                                std::vector<exactla::IntMatrix> action) {
    int r = static_cast<int>(orders.size());
    if (!g) throw InputError("null group");
    if (static_cast<int>(action.size()) != g->size()) throw InputError("action size mismatch");
    for (const auto& o : orders)
        if (o < 0 || o == 1) throw InputError("coordinate order must be 0 or >= 2");
    for (auto& a : action) {
        if (a.rows() != r || a.cols() != r) throw InputError("action matrix shape mismatch");
        check_order_compat(a, orders, orders);
        a = canon_rows(a.with_ring(Ring::z()), orders);
    }
    GModule m{std::move(g), std::move(orders), std::move(action)};
    const FiniteGroup& grp = *m.group;
    if (!rows_equal_mod(m.action[0], IntMatrix::identity(Ring::z(), r), m.orders))
        throw InputError("identity must act trivially");
    for (int a = 0; a < grp.size(); ++a)
        for (int s : grp.generators())
            if (!rows_equal_mod(m.action[grp.mul(a, s)], m.action[a].mul(m.action[s]), m.orders))
                throw InputError("action is not multiplicative");
    return m;
}

GModule module_from_generators(GroupPtr g, std::vector<Int> orders,
                               const std::vector<exactla::IntMatrix>& gen_action) {
    if (!g) throw InputError("null group");
    const FiniteGroup& grp = *g;
    if (gen_action.size() != grp.generators().size())
        throw InputError("one action matrix per generator required");
    int r = static_cast<int>(orders.size());
    std::vector<IntMatrix> action(grp.size());
    action[0] = IntMatrix::identity(Ring::z(), r);
    for (int e = 1; e < grp.size(); ++e) {
        auto [parent, gi] = grp.word_data()[e];
        action[e] = canon_rows(gen_action[gi].with_ring(Ring::z()).mul(action[parent]), orders);
    }
    return module_from_full_action(std::move(g), std::move(orders), std::move(action));
}

GModule trivial_module(GroupPtr g, exactla::Ring ring, int rank) {
    std::vector<Int> orders(rank, ring.is_z ? Int(0) : ring.n);
    std::vector<IntMatrix> action(g->size(), IntMatrix::identity(Ring::z(), rank));
    return GModule{std::move(g), std::move(orders), std::move(action)};
}

GModule permutation_module(GroupPtr g, const std::vector<int>& subgroup, exactla::Ring ring) {
    const FiniteGroup& grp = *g;
    std::vector<int> coset(grp.size(), -1);  // element -> coset index
    std::vector<int> reps;
    for (int e = 0; e < grp.size(); ++e) {
        if (coset[e] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(e);
        for (int h : subgroup) coset[grp.mul(e, h)] = c;
    }
    int r = static_cast<int>(reps.size());
    std::vector<IntMatrix> action(grp.size(), IntMatrix(Ring::z(), r, r));
    for (int e = 0; e < grp.size(); ++e)
        for (int c = 0; c < r; ++c) action[e].at(coset[grp.mul(e, reps[c])], c) = 1;
    std::vector<Int> orders(r, ring.is_z ? Int(0) : ring.n);
    return module_from_full_action(std::move(g), std::move(orders), std::move(action));
}

std::vector<Int> GModuleMap::apply(const std::vector<Int>& v) const {
    return tgt.canon(matrix.apply(v));
}

void GModuleMap::validate() const {
    if (src.group != tgt.group) throw InputError("module map across different groups");
    if (matrix.rows() != tgt.rank() || matrix.cols() != src.rank())
        throw InputError("module map shape mismatch");
    check_order_compat(matrix, tgt.orders, src.orders);
    for (int s : src.group->generators()) {
        auto lhs = tgt.action[s].mul(matrix);
        auto rhs = matrix.mul(src.action[s]);
        if (!rows_equal_mod(lhs, rhs, tgt.orders)) throw InputError("module map not equivariant");
    }
}

QuotientModule quotient_module(const GModule& m, const exactla::IntMatrix& rel_columns) {
    int r = m.rank();
    IntMatrix rel(Ring::z(), r, rel_columns.cols() + r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < rel_columns.cols(); ++j) rel.at(i, j) = rel_columns.at(i, j);
        rel.at(i, rel_columns.cols() + i) = m.orders[i];
    }
    exactla::PresentedModule pres(Ring::z(), r, rel);
    for (int s : m.group->generators())
        for (int j = 0; j < rel_columns.cols(); ++j)
            if (!exactla::vec_is_zero(pres.reduce(m.action[s].apply(rel_columns.column(j)))))
                throw InputError("relation lattice is not stable under the action");
    int d = pres.dim();
    IntMatrix proj(Ring::z(), d, r), sect(Ring::z(), r, d);
    for (int k = 0; k < d; ++k) {
        std::vector<Int> unit(d, Int(0));
        unit[k] = 1;
        auto lifted = pres.lift(unit);
        for (int i = 0; i < r; ++i) sect.at(i, k) = lifted[i];
    }
    for (int i = 0; i < r; ++i) {
        std::vector<Int> e(r, Int(0));
        e[i] = 1;
        auto red = pres.reduce(e);
        for (int k = 0; k < d; ++k) proj.at(k, i) = red[k];
    }
    std::vector<IntMatrix> action(m.group->size());
    for (int g = 0; g < m.group->size(); ++g)
        action[g] = proj.mul(m.action[g]).mul(sect);
    GModule quo = module_from_full_action(m.group, pres.orders(), std::move(action));
    return QuotientModule{std::move(quo), std::move(proj), std::move(sect)};
}

}  // namespace gcoh
