#include "gcoh/instances.hpp"

#include "gcoh/functors.hpp"
#include "gcoh/modq.hpp"

#include <algorithm>
#include <sstream>

namespace gcoh::gen {

UnitPair random_unit(std::mt19937_64& rng, int n, long m) {
    UnitPair p{IntMatrix::identity(Ring::z(), n), IntMatrix::identity(Ring::z(), n)};
    if (n == 0) return p;
    int ops = 2 * n + static_cast<int>(rng() % 5);
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        switch (rng() % 3) {
            case 0: {
                if (i == j) break;
                Int c(static_cast<long>(rng() % m));
                p.u.add_row_multiple(i, j, c);
                p.uinv.add_col_multiple(j, i, -c);
                break;
            }
            case 1:
                p.u.swap_rows(i, j);
                p.uinv.swap_cols(i, j);
                break;
            default: {
                // -1 is a self-inverse unit for every modulus
                Int w = (rng() % 2) ? Int(m - 1) : Int(1);
                p.u.scale_row(i, w);
                p.uinv.scale_col(i, w);
                break;
            }
        }
    }
    auto canon = [m](IntMatrix& a) {
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c)
                a.at(r, c) = exactla::mod_floor(a.at(r, c), m);
    };
    canon(p.u);
    canon(p.uinv);
    return p;
}

ComplexInstance random_complex_instance(uint64_t seed) {
    std::mt19937_64 rng(seed);
    int nslots = (rng() % 4 == 0) ? 2 : 3;
    std::vector<int> ranks;
    for (int i = 0; i < nslots; ++i) ranks.push_back(1 + static_cast<int>(rng() % 3));
    int r0 = ranks[0], r1 = ranks[1], r2 = nslots == 3 ? ranks[2] : 0;

    IntMatrix e0(Ring::z(), r1, r0), f0(Ring::z(), r0, r0), f1(Ring::z(), r1, r1);
    IntMatrix e1(Ring::z(), r2, r1), f2(Ring::z(), r2, r2);
    static const int menu[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 2}};
    for (int j = 0; j < r1; ++j) {
        int v = menu[rng() % 6][0], w = menu[rng() % 6][1];
        if (v != 0 && w != 0 && v * w % 4 != 0) w = 0;  // keep d d = 0
        if (j >= r0) v = 0;
        if (j >= r2) w = 0;
        Int c = (v == 2 || w == 2) ? Int(2 * static_cast<long>(rng() % 2))
                                   : Int(static_cast<long>(rng() % 4));
        if (v == 0 && w == 0) c = 0;
        if (v != 0) {
            e0.at(j, j) = v;
            f0.at(j, j) = c;
        }
        if (w != 0) {
            e1.at(j, j) = w;
            f2.at(j, j) = c;
        }
        f1.at(j, j) = c;
    }

    auto u0 = random_unit(rng, r0, 4), u1 = random_unit(rng, r1, 4);
    auto u2 = random_unit(rng, r2, 4);
    BoundedComplex c;
    c.lo = 0;
    c.orders.assign(static_cast<size_t>(nslots), {});
    for (int i = 0; i < nslots; ++i)
        c.orders[static_cast<size_t>(i)].assign(static_cast<size_t>(ranks[static_cast<size_t>(i)]),
                                                Int(4));
    IntMatrix d0 = u1.u.mul(e0).mul(u0.uinv);
    c.diffs.push_back(d0);
    IntMatrix d1;
    if (nslots == 3) {
        d1 = u2.u.mul(e1).mul(u1.uinv);
        c.diffs.push_back(d1);
    }

    ChainMap f;
    f.comps.push_back(u0.u.mul(f0).mul(u0.uinv));
    f.comps.push_back(u1.u.mul(f1).mul(u1.uinv));
    if (nslots == 3) f.comps.push_back(u2.u.mul(f2).mul(u2.uinv));

    // exact perturbation s d + d s
    auto rnd = [&rng](int rows, int cols) {
        IntMatrix m(Ring::z(), rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % 4);
        return m;
    };
    IntMatrix s1 = rnd(r0, r1);
    f.comps[0] = f.comps[0].add(s1.mul(d0));
    if (nslots == 3) {
        IntMatrix s2 = rnd(r1, r2);
        f.comps[1] = f.comps[1].add(d0.mul(s1)).add(s2.mul(d1));
        f.comps[2] = f.comps[2].add(d1.mul(s2));
    } else {
        f.comps[1] = f.comps[1].add(d0.mul(s1));
    }
    for (auto& m : f.comps)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = exactla::mod_floor(m.at(i, j), 4);
    return {std::move(c), std::move(f)};
}

GroupPtr subgroup_group(const GroupPtr& g, const std::vector<int>& elems) {
    if (g->permutations().empty()) throw InputError("ambient group carries no permutations");
    std::vector<std::vector<int>> gens;
    for (int e : elems) gens.push_back(g->permutations()[static_cast<size_t>(e)]);
    return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(gens));
}

GModule f2_linear_module(const GroupPtr& g, int dim) {
    std::vector<IntMatrix> acts;
    for (int e = 0; e < g->size(); ++e) {
        const auto& perm = g->permutations()[static_cast<size_t>(e)];
        IntMatrix a(Ring::z(), dim, dim);
        for (int j = 0; j < dim; ++j) {
            int img = perm[static_cast<size_t>((1 << j) - 1)] + 1;
            for (int i = 0; i < dim; ++i) a.at(i, j) = (img >> i) & 1;
        }
        acts.push_back(a);
    }
    return module_from_full_action(g, std::vector<Int>(static_cast<size_t>(dim), Int(2)), acts);
}

namespace {

// random free module over Z/q with rank <= maxrank, assembled from trivial,
// quadratic-character, and small coset-permutation blocks, then conjugated
GModule random_padic_module(std::mt19937_64& rng, const GroupPtr& g, long q, int maxrank) {
    auto subs = g->subgroups();
    int n = g->size();
    int r = 1 + static_cast<int>(rng() % maxrank);

    auto character_block = [&](const std::vector<int>& h) {
        std::vector<IntMatrix> mats;
        for (int e = 0; e < n; ++e) {
            bool inside = std::find(h.begin(), h.end(), e) != h.end();
            IntMatrix a(Ring::z(), 1, 1);
            a.at(0, 0) = inside ? 1 : q - 1;
            mats.push_back(a);
        }
        return module_from_full_action(g, {Int(q)}, mats);
    };

    std::vector<GModule> parts;
    int cur = 0;
    while (cur < r) {
        int room = r - cur;
        std::vector<GModule> options;
        options.push_back(trivial_module(g, Ring::zmod(q), 1));
        for (const auto& h : subs) {
            int index = n / static_cast<int>(h.size());
            if (index == 2) options.push_back(character_block(h));
            if (index >= 2 && index <= room)
                options.push_back(permutation_module(g, h, Ring::zmod(q)));
        }
        const GModule& pick = options[rng() % options.size()];
        parts.push_back(pick);
        cur += pick.rank();
    }
    GModule m = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) m = direct_sum_module(m, parts[i]);

    auto u = random_unit(rng, m.rank(), q);
    std::vector<IntMatrix> acts;
    for (int e = 0; e < n; ++e) {
        IntMatrix a = u.u.mul(m.action[static_cast<size_t>(e)]).mul(u.uinv);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = exactla::mod_floor(a.at(i, j), q);
        acts.push_back(a);
    }
    return module_from_full_action(g, std::vector<Int>(static_cast<size_t>(m.rank()), Int(q)),
                                   acts);
}

// module of matrices Hom(quot, sub) with the conjugation action
GModule hom_module(const GModule& sub, const GModule& quot, long p) {
    const GroupPtr& g = sub.group;
    int n = g->size(), rx = sub.rank(), ry = quot.rank();
    std::vector<IntMatrix> acts;
    for (int e = 0; e < n; ++e) {
        const IntMatrix& ax = sub.action[static_cast<size_t>(e)];
        const IntMatrix& ayi = quot.action[static_cast<size_t>(g->inv(e))];
        IntMatrix a(Ring::z(), rx * ry, rx * ry);
        for (int aa = 0; aa < rx; ++aa)
            for (int bb = 0; bb < ry; ++bb)
                for (int i = 0; i < rx; ++i)
                    for (int j = 0; j < ry; ++j)
                        a.at(aa * ry + bb, i * ry + j) =
                            exactla::mod_floor(ax.at(aa, i) * ayi.at(j, bb), p);
        acts.push_back(a);
    }
    return module_from_full_action(g, std::vector<Int>(static_cast<size_t>(rx * ry), Int(p)),
                                   acts);
}

}  // namespace

BockInstance random_bock_instance(uint64_t seed) {
    std::mt19937_64 rng(seed);

    // group first; the orders 6 and 8 then pin p = 2, m = 1 and cap the
    // ranks, since the degree-four class computations behind the degree-two
    // assertion only stay inside the elimination budget on those shapes
    GroupPtr g;
    const char* gname;
    int maxrank = 3;
    bool big = false;
    switch (rng() % 12) {
        case 0: case 1: g = cyclic_group(2); gname = "C2"; break;
        case 2: case 3: g = cyclic_group(3); gname = "C3"; break;
        case 4: case 5: g = cyclic_group(4); gname = "C4"; break;
        case 6: case 7: g = klein_four_group(); gname = "V4"; break;
        case 8: g = cyclic_group(6); gname = "C6"; big = true; maxrank = 2; break;
        case 9: g = symmetric_group(3); gname = "S3"; big = true; maxrank = 2; break;
        case 10: g = cyclic_group(8); gname = "C8"; big = true; maxrank = 1; break;
        default: g = dihedral_group(4); gname = "D4"; big = true; maxrank = 1; break;
    }
    long p = (!big && rng() % 2 == 1) ? 3 : 2;
    int m = (!big && rng() % 2 == 1) ? 2 : 1;
    long q = p;
    for (int i = 0; i < m + 1; ++i) q *= p;  // p^(m+2)

    GModule x = random_padic_module(rng, g, q, maxrank);
    GModule y = random_padic_module(rng, g, q, maxrank);
    GModule sub = reduce_mod_module(x, p);
    GModule quot = reduce_mod_module(y, p);
    int rx = sub.rank(), ry = quot.rank(), n = g->size();

    // glue cochain: random class plus random coboundary in Hom(quot, sub)
    GModule hom = hom_module(sub, quot, p);
    CohomologyContext hctx(hom);
    auto& h1 = hctx.cohomology(1);
    long long table = bar_tuples(n, 1) * hom.rank();
    std::vector<Int> z(static_cast<size_t>(table), Int(0));
    bool mixed = false;
    for (const auto& cls : h1.gens) {
        long coef = static_cast<long>(rng() % p);
        if (coef == 0) continue;
        mixed = true;
        for (size_t i = 0; i < z.size(); ++i)
            z[i] = exactla::mod_floor(z[i] + coef * cls[i], p);
    }
    std::vector<Int> b0(static_cast<size_t>(hom.rank()));
    for (auto& v : b0) v = static_cast<long>(rng() % p);
    auto cob = bar_differential(hom, 0, b0);
    for (size_t i = 0; i < z.size(); ++i) z[i] = exactla::mod_floor(z[i] + cob[i], p);

    std::vector<IntMatrix> acts;
    for (int e = 0; e < n; ++e) {
        IntMatrix a(Ring::z(), rx + ry, rx + ry);
        const IntMatrix& ax = sub.action[static_cast<size_t>(e)];
        const IntMatrix& ay = quot.action[static_cast<size_t>(e)];
        for (int i = 0; i < rx; ++i)
            for (int j = 0; j < rx; ++j) a.at(i, j) = ax.at(i, j);
        for (int i = 0; i < ry; ++i)
            for (int j = 0; j < ry; ++j) a.at(rx + i, rx + j) = ay.at(i, j);
        if (e != 0) {
            long long base = bar_index(n, {e}) * hom.rank();
            IntMatrix d(Ring::z(), rx, ry);
            for (int i = 0; i < rx; ++i)
                for (int j = 0; j < ry; ++j) d.at(i, j) = z[static_cast<size_t>(base + i * ry + j)];
            IntMatrix c = d.mul(ay);
            for (int i = 0; i < rx; ++i)
                for (int j = 0; j < ry; ++j) a.at(i, rx + j) = exactla::mod_floor(c.at(i, j), p);
        }
        acts.push_back(a);
    }
    GModule mid = module_from_full_action(
        g, std::vector<Int>(static_cast<size_t>(rx + ry), Int(p)), acts);

    IntMatrix inc(Ring::z(), rx + ry, rx);
    for (int i = 0; i < rx; ++i) inc.at(i, i) = 1;
    IntMatrix prj(Ring::z(), ry, rx + ry);
    for (int i = 0; i < ry; ++i) prj.at(i, rx + i) = 1;
    std::ostringstream tag;
    tag << gname << " p=" << p << " m=" << m << " ranks " << rx << "," << ry
        << (mixed ? " glued" : " plain");
    Extension e({sub, mid, quot}, {inc, prj}, tag.str());
    return BockInstance{std::move(x), std::move(y), std::move(e), m, p, tag.str()};
}

namespace {

GModule c2_gen_module(std::vector<Int> orders, const IntMatrix& sigma) {
    return module_from_generators(cyclic_group(2), std::move(orders), {sigma});
}

}  // namespace

std::vector<CorpusEntry> consistency_corpus() {
    auto rows = [](const std::vector<std::vector<Int>>& r) {
        return IntMatrix::from_rows(Ring::z(), r);
    };
    std::vector<CorpusEntry> out;
    for (int mexp = 1; mexp <= 2; ++mexp) {
        Int n = mexp == 1 ? 8 : 16;
        std::string s = mexp == 1 ? "/8" : "/16";
        out.push_back({"swap" + s, c2_gen_module({n, n}, rows({{0, 1}, {1, 0}})), mexp});
        out.push_back({"sign" + s, c2_gen_module({n, n}, rows({{-1, 0}, {0, -1}})), mexp});
        out.push_back({"shear" + s, c2_gen_module({n, n}, rows({{1, 1}, {0, -1}})), mexp});
        out.push_back({"rotation" + s,
                       module_from_generators(cyclic_group(4), {n, n},
                                              {rows({{0, -1}, {1, 0}})}),
                       mexp});
        auto v4 = klein_four_group();
        out.push_back({"klein" + s,
                       module_from_generators(v4, {n, n, n},
                                              {rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                                               rows({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}})}),
                       mexp});
        out.push_back({"cosets" + s,
                       permutation_module(cyclic_group(4), {0, 2},
                                          Ring::zmod(mexp == 1 ? 8 : 16)),
                       mexp});
    }
    return out;
}

}  // namespace gcoh::gen
