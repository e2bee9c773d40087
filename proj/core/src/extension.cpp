#include "gcoh/extension.hpp"

#include <map>
#include <utility>

namespace gcoh {

using exactla::IntMatrix;
using exactla::Ring;

namespace {

// repeated congruence solving A x = b (mod moduli) against one Smith form
struct EqSolver {
    exactla::Smith smith;
    int nvars = 0;

    EqSolver(const IntMatrix& a, const std::vector<Int>& moduli) {
        int slack = 0;
        for (const auto& m : moduli)
            if (m != 0) ++slack;
        IntMatrix aug(Ring::z(), a.rows(), a.cols() + slack);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        int c = a.cols();
        for (int i = 0; i < a.rows(); ++i)
            if (moduli[i] != 0) aug.at(i, c++) = moduli[i];
        smith = exactla::smith_normal_form(aug);
        nvars = a.cols();
    }

    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        auto s = exactla::solve_linear(smith, b);
        if (!s) return std::nullopt;
        return std::vector<Int>(s->begin(), s->begin() + nvars);
    }
};

}  // namespace

struct Extension::State {
    std::unique_ptr<EqSolver> sect_solver;
    std::unique_ptr<IntMatrix> sect_hnf;
    std::map<std::vector<Int>, std::vector<Int>> sect_memo;
    std::unique_ptr<EqSolver> sub_solver;
    std::unique_ptr<Extension> left, right;
};

Extension::Extension(std::vector<GModule> modules, std::vector<exactla::IntMatrix> maps,
                     std::string tag)
    : modules_(std::move(modules)), maps_(std::move(maps)), tag_(std::move(tag)),
      st_(std::make_shared<State>()) {
    validate();
}

void Extension::validate() const {
    if (terms() != 3 && terms() != 4) throw InputError("extension needs three or four terms");
    if (static_cast<int>(maps_.size()) != terms() - 1)
        throw InputError("extension needs one map per arrow");
    for (int i = 1; i < terms(); ++i)
        if (modules_[i].group != modules_[0].group)
            throw InputError("extension terms over different groups");
    for (int i = 0; i + 1 < terms(); ++i)
        GModuleMap{modules_[i], modules_[i + 1], maps_[i]}.validate();
    // composites vanish
    for (int i = 0; i + 2 < terms(); ++i) {
        IntMatrix c = maps_[i + 1].mul(maps_[i]);
        for (int r = 0; r < c.rows(); ++r)
            for (int j = 0; j < c.cols(); ++j) {
                const Int& o = modules_[i + 2].orders[r];
                if (o == 0 ? c.at(r, j) != 0 : exactla::mod_floor(c.at(r, j), o) != 0)
                    throw InputError("consecutive maps do not compose to zero");
            }
    }
    // injective on the left
    IntMatrix k0 = exactla::kernel_congruence(maps_[0], modules_[1].orders);
    for (int j = 0; j < k0.cols(); ++j)
        if (!exactla::vec_is_zero(modules_[0].canon(k0.column(j))))
            throw InputError("leftmost map is not injective");
    // kernel = image at interior nodes
    for (int i = 1; i + 1 < terms(); ++i) {
        IntMatrix k = exactla::kernel_congruence(maps_[i], modules_[i + 1].orders);
        for (int j = 0; j < k.cols(); ++j)
            if (!exactla::solve_congruence(maps_[i - 1], modules_[i].canon(k.column(j)),
                                           modules_[i].orders))
                throw InputError("sequence is not exact at an interior node");
    }
    // surjective on the right
    const GModule& q = modules_.back();
    for (int j = 0; j < q.rank(); ++j) {
        std::vector<Int> e(static_cast<size_t>(q.rank()), Int(0));
        e[j] = 1;
        if (!exactla::solve_congruence(maps_.back(), e, q.orders))
            throw InputError("rightmost map is not surjective");
    }
}

std::vector<Int> Extension::section(const std::vector<Int>& c) const {
    const GModule& q = quot();
    const GModule& b = modules_[terms() - 2];
    auto key = q.canon(c);
    auto it = st_->sect_memo.find(key);
    if (it != st_->sect_memo.end()) return it->second;
    if (!st_->sect_solver) {
        st_->sect_solver = std::make_unique<EqSolver>(maps_.back(), q.orders);
        st_->sect_hnf = std::make_unique<IntMatrix>(
            exactla::hnf_columns(exactla::kernel_congruence(maps_.back(), q.orders)));
    }
    auto u0 = st_->sect_solver->solve(key);
    if (!u0) throw Error("surjection has no preimage; extension data is inconsistent");
    auto u = exactla::coset_reduce(*st_->sect_hnf, *u0);
    u = b.canon(u);
    st_->sect_memo.emplace(std::move(key), u);
    return u;
}

void Extension::build_splices() const {
    if (st_->left) return;
    const GModule& b1 = modules_[1];
    auto q = quotient_module(b1, maps_[0]);
    st_->left = std::make_unique<Extension>(std::vector<GModule>{modules_[0], b1, q.quo},
                                            std::vector<IntMatrix>{maps_[0], q.proj},
                                            tag_ + "[left]");
    st_->right = std::make_unique<Extension>(
        std::vector<GModule>{q.quo, modules_[2], modules_[3]},
        std::vector<IntMatrix>{maps_[1].mul(q.sect), maps_[2]}, tag_ + "[right]");
}

const Extension& Extension::left_splice() const {
    if (terms() != 4) throw InputError("splice needs a four-term sequence");
    build_splices();
    return *st_->left;
}

const Extension& Extension::right_splice() const {
    if (terms() != 4) throw InputError("splice needs a four-term sequence");
    build_splices();
    return *st_->right;
}

std::vector<Int> Extension::connect(int p, const std::vector<Int>& x) const {
    if (terms() == 4) return left_splice().connect(p + 1, right_splice().connect(p, x));
    const GModule& a = modules_[0];
    const GModule& b = modules_[1];
    const GModule& c = modules_[2];
    int n = a.group->size();
    long long tp = bar_tuples(n, p);
    if (static_cast<long long>(x.size()) != tp * c.rank())
        throw InputError("cochain length does not match the degree");
    std::vector<Int> lifted(static_cast<size_t>(tp) * b.rank());
    std::vector<Int> slice(static_cast<size_t>(c.rank()));
    for (long long t = 0; t < tp; ++t) {
        for (int i = 0; i < c.rank(); ++i) slice[static_cast<size_t>(i)] = x[t * c.rank() + i];
        auto u = section(slice);
        for (int i = 0; i < b.rank(); ++i) lifted[t * b.rank() + i] = u[static_cast<size_t>(i)];
    }
    auto d = bar_differential(b, p, lifted);
    if (!st_->sub_solver) st_->sub_solver = std::make_unique<EqSolver>(maps_[0], b.orders);
    long long tq = bar_tuples(n, p + 1);
    std::vector<Int> out(static_cast<size_t>(tq) * a.rank());
    std::vector<Int> dv(static_cast<size_t>(b.rank()));
    for (long long t = 0; t < tq; ++t) {
        for (int i = 0; i < b.rank(); ++i) dv[static_cast<size_t>(i)] = d[t * b.rank() + i];
        auto v = st_->sub_solver->solve(dv);
        if (!v) throw Error("differential of the lift does not land in the subobject");
        auto vc = a.canon(*v);
        for (int i = 0; i < a.rank(); ++i) out[t * a.rank() + i] = vc[static_cast<size_t>(i)];
    }
    return out;
}

Extension bockstein_extension(const GModule& lattice, const Int& p, int m, int i) {
    if (m < 1 || i < 1) throw InputError("bockstein exponents must be positive");
    Int pm, pi, pmi;
    mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_pow_ui(pi.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(i));
    pmi = pm * pi;
    for (const auto& o : lattice.orders)
        if (o != 0 && (o % pmi) != 0)
            throw InputError("lattice precision too small for this bockstein");
    GModule a = reduce_mod_module(lattice, pi);
    GModule b = reduce_mod_module(lattice, pmi);
    GModule c = reduce_mod_module(lattice, pm);
    int r = lattice.rank();
    IntMatrix up = IntMatrix::identity(Ring::z(), r).scaled(pm);
    IntMatrix down = IntMatrix::identity(Ring::z(), r);
    return Extension({std::move(a), std::move(b), std::move(c)}, {std::move(up), std::move(down)},
                     "bockstein(" + pm.get_str() + "," + pi.get_str() + ")");
}

Extension alpha_extension(const GModule& v) {
    for (const auto& o : v.orders)
        if (o != 2) throw InputError("alpha needs a module over F_2");
    int r = v.rank();
    auto s2 = sym2_module(v);
    auto w2 = wedge2_module(v);
    auto sidx = [r](int i, int j) { return i * r - i * (i - 1) / 2 + (j - i); };
    auto pidx = [r](int i, int j) { return i * r - i * (i + 1) / 2 + (j - i - 1); };
    IntMatrix sq(Ring::z(), s2.rank(), r);
    for (int i = 0; i < r; ++i) sq.at(sidx(i, i), i) = 1;
    IntMatrix pr(Ring::z(), w2.rank(), s2.rank());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) pr.at(pidx(i, j), sidx(i, j)) = 1;
    return Extension({v, std::move(s2), std::move(w2)}, {std::move(sq), std::move(pr)}, "alpha");
}

Extension mu4_extension(GroupPtr g, const std::vector<Int>& chi) {
    if (static_cast<int>(chi.size()) != g->size())
        throw InputError("character needs one value per group element");
    auto z2 = trivial_module(g, Ring::zmod(2), 1);
    std::vector<IntMatrix> act;
    act.reserve(g->size());
    for (int e = 0; e < g->size(); ++e) {
        if (chi[static_cast<size_t>(e)] != 1 && chi[static_cast<size_t>(e)] != -1)
            throw InputError("mu4 character must take values +-1");
        IntMatrix a(Ring::z(), 1, 1);
        a.at(0, 0) = chi[static_cast<size_t>(e)];
        act.push_back(std::move(a));
    }
    GModule mu4 = module_from_full_action(g, {Int(4)}, std::move(act));
    IntMatrix two(Ring::z(), 1, 1);
    two.at(0, 0) = 2;
    IntMatrix one = IntMatrix::identity(Ring::z(), 1);
    return Extension({z2, std::move(mu4), z2}, {std::move(two), std::move(one)}, "mu4");
}

Extension genius_extension(const GModule& m) {
    auto q = quad2_module(m);
    int r = m.rank();
    auto tens = tensor_module(q.base, q.base);
    auto w2 = wedge2_module(q.base);
    auto pidx = [r](int i, int j) { return i * r - i * (i + 1) / 2 + (j - i - 1); };
    IntMatrix pr(Ring::z(), w2.rank(), tens.rank());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            pr.at(pidx(i, j), i * r + j) = 1;
            pr.at(pidx(i, j), j * r + i) = -1;
        }
    return Extension({q.base, q.mod, std::move(tens), std::move(w2)},
                     {q.lin, q.polar, std::move(pr)}, "genius");
}

Extension genius1_extension(const GModule& m) {
    Int p;
    int k = 0;
    if (!m.p_primary(&p, &k) || p != 2 || k < 2)
        throw InputError("sequence needs a free module over Z/2^K with K >= 2");
    for (const auto& o : m.orders)
        if (o != m.orders[0]) throw InputError("module must have uniform coordinate orders");
    int r = m.rank();
    Int half = m.orders[0] / 2;
    GModule mh = reduce_mod_module(m, half);
    auto tsgn = signed_sym_module(mh);
    auto w2 = wedge2_module(mh);
    int rp = r * (r - 1) / 2;
    IntMatrix dbl = IntMatrix::identity(Ring::z(), r).scaled(2);
    IntMatrix sq(Ring::z(), tsgn.rank(), r);
    for (int i = 0; i < r; ++i) sq.at(rp + i, i) = 1;  // m -> class of m (x) m
    IntMatrix pr(Ring::z(), w2.rank(), tsgn.rank());
    for (int i = 0; i < rp; ++i) pr.at(i, i) = 1;
    return Extension({mh, m, std::move(tsgn), std::move(w2)},
                     {std::move(dbl), std::move(sq), std::move(pr)}, "genius1");
}

Extension pullback_extension(const Extension& e, const GModuleMap& f) {
    if (e.terms() != 3) throw InputError("base change needs a short extension");
    if (f.tgt.key() != e.quot().key()) throw InputError("map must land in the quotient");
    const GModule& b = e.module_at(1);
    const GModule& cp = f.src;
    auto dsum = direct_sum_module(b, cp);
    IntMatrix glue(Ring::z(), e.quot().rank(), b.rank() + cp.rank());
    for (int i = 0; i < e.quot().rank(); ++i) {
        for (int j = 0; j < b.rank(); ++j) glue.at(i, j) = e.map_at(1).at(i, j);
        for (int j = 0; j < cp.rank(); ++j) glue.at(i, b.rank() + j) = -f.matrix.at(i, j);
    }
    auto sub = submodule_module(dsum, exactla::kernel_congruence(glue, e.quot().orders));
    int d = sub.mod.rank();
    // inclusion of the original sub: a -> (iota a, 0)
    IntMatrix emb(Ring::z(), d, e.sub().rank());
    EqSolver solver(sub.incl, dsum.orders);
    for (int j = 0; j < e.sub().rank(); ++j) {
        std::vector<Int> tgt(static_cast<size_t>(b.rank() + cp.rank()), Int(0));
        for (int i = 0; i < b.rank(); ++i) tgt[static_cast<size_t>(i)] = e.map_at(0).at(i, j);
        auto x = solver.solve(dsum.canon(tgt));
        if (!x) throw Error("pulled-back middle does not contain the subobject");
        emb.set_column(j, sub.mod.canon(*x));
    }
    IntMatrix proj(Ring::z(), cp.rank(), d);
    for (int i = 0; i < cp.rank(); ++i)
        for (int j = 0; j < d; ++j) proj.at(i, j) = sub.incl.at(b.rank() + i, j);
    return Extension({e.sub(), sub.mod, cp}, {std::move(emb), std::move(proj)},
                     e.tag() + "*pullback");
}

Extension pushout_extension(const Extension& e, const GModuleMap& f) {
    if (e.terms() != 3) throw InputError("base change needs a short extension");
    if (f.src.key() != e.sub().key()) throw InputError("map must come from the subobject");
    const GModule& b = e.module_at(1);
    const GModule& ap = f.tgt;
    auto dsum = direct_sum_module(ap, b);
    IntMatrix rel(Ring::z(), ap.rank() + b.rank(), e.sub().rank());
    for (int j = 0; j < e.sub().rank(); ++j) {
        for (int i = 0; i < ap.rank(); ++i) rel.at(i, j) = f.matrix.at(i, j);
        for (int i = 0; i < b.rank(); ++i) rel.at(ap.rank() + i, j) = -e.map_at(0).at(i, j);
    }
    auto q = quotient_module(dsum, rel);
    IntMatrix inj(Ring::z(), q.quo.rank(), ap.rank());
    for (int j = 0; j < ap.rank(); ++j) {
        std::vector<Int> v(static_cast<size_t>(ap.rank() + b.rank()), Int(0));
        v[static_cast<size_t>(j)] = 1;
        inj.set_column(j, q.quo.canon(q.proj.apply(v)));
    }
    // quotient map to C through the B part of the section
    IntMatrix bpart(Ring::z(), b.rank(), q.quo.rank());
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < q.quo.rank(); ++j) bpart.at(i, j) = q.sect.at(ap.rank() + i, j);
    IntMatrix surj = e.map_at(1).mul(bpart);
    return Extension({ap, q.quo, e.quot()}, {std::move(inj), std::move(surj)},
                     e.tag() + "*pushout");
}

exactla::IntMatrix connecting_induced(const Extension& e, CohomologyContext& src,
                                      CohomologyContext& tgt, int p) {
    if (src.mod().key() != e.quot().key() || tgt.mod().key() != e.sub().key())
        throw InputError("contexts do not match the extension's ends");
    auto& sp = src.cohomology(p);
    int q = p + e.degree_shift();
    auto& tp = tgt.cohomology(q);
    IntMatrix out(Ring::z(), tp.pres.dim(), sp.pres.dim());
    for (int j = 0; j < sp.pres.dim(); ++j)
        out.set_column(j, tgt.class_of(q, e.connect(p, sp.gens[static_cast<size_t>(j)])));
    return out;
}

exactla::IntMatrix map_induced(const GModuleMap& f, CohomologyContext& src,
                               CohomologyContext& tgt, int p) {
    if (src.mod().key() != f.src.key() || tgt.mod().key() != f.tgt.key())
        throw InputError("contexts do not match the map's ends");
    auto& sp = src.cohomology(p);
    auto& tp = tgt.cohomology(p);
    IntMatrix out(Ring::z(), tp.pres.dim(), sp.pres.dim());
    for (int j = 0; j < sp.pres.dim(); ++j)
        out.set_column(j, tgt.class_of(p, map_cochain(f, p, sp.gens[static_cast<size_t>(j)])));
    return out;
}

}  // namespace gcoh
