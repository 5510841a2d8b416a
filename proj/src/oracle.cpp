#include "homsys/oracle.hpp"

#include <set>

namespace homsys::oracle {

namespace {

using flat = std::vector<std::uint32_t>;

std::uint64_t pow_checked(std::uint32_t p, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r *= p;
        if (r > kMaxEnumeration) throw error("oracle: enumeration budget exceeded");
    }
    return r;
}

// Odometer step over base-p digits; false when all digits wrapped to zero.
bool advance(flat& digits, std::uint32_t p) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

std::uint32_t log_p(std::uint64_t count, std::uint32_t p) {
    std::uint32_t e = 0;
    std::uint64_t r = 1;
    while (r < count) {
        r *= p;
        ++e;
    }
    if (r != count) throw error("oracle: solution count is not a prime power");
    return e;
}

// c += alpha * a*b with raw index loops; all matrices row-major flats.
void mul_acc(std::uint32_t p, std::uint32_t alpha, const flat& a, std::uint32_t ar,
             std::uint32_t ac, const flat& b, std::uint32_t bc, flat& c) {
    for (std::uint32_t i = 0; i < ar; ++i)
        for (std::uint32_t k = 0; k < ac; ++k) {
            std::uint64_t av = a[static_cast<std::size_t>(i) * ac + k];
            if (av == 0) continue;
            for (std::uint32_t j = 0; j < bc; ++j) {
                std::uint64_t t = c[static_cast<std::size_t>(i) * bc + j] +
                                  alpha * av % p * b[static_cast<std::size_t>(k) * bc + j];
                c[static_cast<std::size_t>(i) * bc + j] = static_cast<std::uint32_t>(t % p);
            }
        }
}

flat mul(std::uint32_t p, const flat& a, std::uint32_t ar, std::uint32_t ac, const flat& b,
         std::uint32_t bc) {
    flat c(static_cast<std::size_t>(ar) * bc, 0);
    mul_acc(p, 1, a, ar, ac, b, bc, c);
    return c;
}

bool all_zero(const flat& v) {
    for (std::uint32_t x : v)
        if (x != 0) return false;
    return true;
}

// Evaluates one relation on per-arrow flat matrices; true when it vanishes.
// Path arrows act first-to-last, matrices multiply accordingly.
bool relation_holds(const BoundQuiverAlgebra& alg, const Relation& rel,
                    const std::vector<flat>& maps, const std::vector<std::uint32_t>& dims) {
    std::size_t src = alg.path_source(rel.terms.front());
    std::size_t tgt = alg.path_target(rel.terms.front());
    flat acc(static_cast<std::size_t>(dims[tgt]) * dims[src], 0);
    std::uint32_t p = alg.field.p;
    for (const PathTerm& term : rel.terms) {
        flat cur;  // running product of the term's arrows, first arrow first
        std::uint32_t cur_cols = 0;
        for (std::size_t k = 0; k < term.arrows.size(); ++k) {
            std::size_t a = term.arrows[k];
            std::uint32_t mr = dims[alg.quiver.arrows[a].tgt];
            std::uint32_t mc = dims[alg.quiver.arrows[a].src];
            if (k == 0) {
                cur = maps[a];
                cur_cols = mc;
            } else {
                cur = mul(p, maps[a], mr, mc, cur, cur_cols);
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = static_cast<std::uint32_t>(
                (acc[i] + static_cast<std::uint64_t>(term.coeff) * cur[i]) % p);
    }
    return all_zero(acc);
}

}  // namespace

std::uint32_t hom_dim_brute(const BoundQuiverAlgebra& alg, const Representation& x,
                            const Representation& y) {
    const std::uint32_t p = alg.field.p;
    std::uint64_t params = 0;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        params += static_cast<std::uint64_t>(y.dims[v]) * x.dims[v];
    pow_checked(p, params);

    std::vector<std::size_t> off(alg.num_vertices() + 1, 0);
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(y.dims[v]) * x.dims[v];

    flat f(params, 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t ai = 0; ai < alg.num_arrows() && ok; ++ai) {
            std::size_t s = alg.quiver.arrows[ai].src, t = alg.quiver.arrows[ai].tgt;
            // f_t * X_a == Y_a * f_s entrywise
            for (std::uint32_t u = 0; u < y.dims[t] && ok; ++u)
                for (std::uint32_t w = 0; w < x.dims[s] && ok; ++w) {
                    std::uint64_t lhs = 0, rhs = 0;
                    for (std::uint32_t j = 0; j < x.dims[t]; ++j)
                        lhs += static_cast<std::uint64_t>(f[off[t] + u * x.dims[t] + j]) *
                               x.maps[ai].at(j, w);
                    for (std::uint32_t i = 0; i < y.dims[s]; ++i)
                        rhs += static_cast<std::uint64_t>(y.maps[ai].at(u, i)) *
                               f[off[s] + i * x.dims[s] + w];
                    if (lhs % p != rhs % p) ok = false;
                }
        }
        if (ok) ++count;
    } while (advance(f, p));
    return log_p(count, p);
}

std::uint32_t ext_dim_brute(const BoundQuiverAlgebra& alg, const Representation& x,
                            const Representation& y) {
    const std::uint32_t p = alg.field.p;
    const std::size_t na = alg.num_arrows();

    // Block middle dims and per-arrow shapes of the candidate extension.
    std::vector<std::uint32_t> edims(alg.num_vertices());
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) edims[v] = y.dims[v] + x.dims[v];

    std::vector<std::size_t> doff(na + 1, 0);
    for (std::size_t a = 0; a < na; ++a) {
        std::size_t s = alg.quiver.arrows[a].src, t = alg.quiver.arrows[a].tgt;
        doff[a + 1] = doff[a] + static_cast<std::size_t>(y.dims[t]) * x.dims[s];
    }
    pow_checked(p, doff[na]);

    auto middle_maps = [&](const flat& d) {
        std::vector<flat> maps(na);
        for (std::size_t a = 0; a < na; ++a) {
            std::size_t s = alg.quiver.arrows[a].src, t = alg.quiver.arrows[a].tgt;
            flat& m = maps[a];
            m.assign(static_cast<std::size_t>(edims[t]) * edims[s], 0);
            for (std::uint32_t i = 0; i < y.dims[t]; ++i)
                for (std::uint32_t j = 0; j < y.dims[s]; ++j)
                    m[static_cast<std::size_t>(i) * edims[s] + j] = y.maps[a].at(i, j);
            for (std::uint32_t i = 0; i < y.dims[t]; ++i)
                for (std::uint32_t j = 0; j < x.dims[s]; ++j)
                    m[static_cast<std::size_t>(i) * edims[s] + y.dims[s] + j] =
                        d[doff[a] + static_cast<std::size_t>(i) * x.dims[s] + j];
            for (std::uint32_t i = 0; i < x.dims[t]; ++i)
                for (std::uint32_t j = 0; j < x.dims[s]; ++j)
                    m[static_cast<std::size_t>(y.dims[t] + i) * edims[s] + y.dims[s] + j] =
                        x.maps[a].at(i, j);
        }
        return maps;
    };

    flat d(doff[na], 0);
    std::uint64_t zcount = 0;
    do {
        std::vector<flat> maps = middle_maps(d);
        bool ok = true;
        for (const Relation& rel : alg.relations)
            if (!relation_holds(alg, rel, maps, edims)) {
                ok = false;
                break;
            }
        if (ok) ++zcount;
    } while (advance(d, p));
    std::uint32_t zdim = log_p(zcount, p);

    // Coboundaries c |-> (Y_a c_s - c_t X_a), collected as distinct flats.
    std::vector<std::size_t> coff(alg.num_vertices() + 1, 0);
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        coff[v + 1] = coff[v] + static_cast<std::size_t>(y.dims[v]) * x.dims[v];
    pow_checked(p, coff[alg.num_vertices()]);

    std::set<flat> images;
    flat c(coff[alg.num_vertices()], 0);
    do {
        flat img(doff[na], 0);
        for (std::size_t a = 0; a < na; ++a) {
            std::size_t s = alg.quiver.arrows[a].src, t = alg.quiver.arrows[a].tgt;
            for (std::uint32_t i = 0; i < y.dims[t]; ++i)
                for (std::uint32_t j = 0; j < x.dims[s]; ++j) {
                    std::uint64_t acc = 0;
                    for (std::uint32_t k = 0; k < y.dims[s]; ++k)
                        acc += static_cast<std::uint64_t>(y.maps[a].at(i, k)) *
                               c[coff[s] + static_cast<std::size_t>(k) * x.dims[s] + j];
                    for (std::uint32_t k = 0; k < x.dims[t]; ++k)
                        acc += static_cast<std::uint64_t>(p - 1) *
                               c[coff[t] + static_cast<std::size_t>(i) * x.dims[t] + k] %
                               p * x.maps[a].at(k, j);
                    img[doff[a] + static_cast<std::size_t>(i) * x.dims[s] + j] =
                        static_cast<std::uint32_t>(acc % p);
                }
        }
        images.insert(std::move(img));
    } while (advance(c, p));
    std::uint32_t bdim = log_p(images.size(), p);
    return zdim - bdim;
}

std::uint32_t rank_brute(const Mat& m) {
    pow_checked(m.fld.p, m.rows);
    std::set<flat> span;
    flat coeff(m.rows, 0);
    do {
        flat v(m.cols, 0);
        for (std::uint32_t r = 0; r < m.rows; ++r)
            for (std::uint32_t c = 0; c < m.cols; ++c)
                v[c] = static_cast<std::uint32_t>(
                    (v[c] + static_cast<std::uint64_t>(coeff[r]) * m.at(r, c)) % m.fld.p);
        span.insert(std::move(v));
    } while (advance(coeff, m.fld.p));
    return log_p(span.size(), m.fld.p);
}

std::uint32_t kernel_dim_brute(const Mat& m) {
    pow_checked(m.fld.p, m.cols);
    std::uint64_t count = 0;
    flat x(m.cols, 0);
    do {
        bool zero = true;
        for (std::uint32_t r = 0; r < m.rows && zero; ++r) {
            std::uint64_t acc = 0;
            for (std::uint32_t c = 0; c < m.cols; ++c)
                acc += static_cast<std::uint64_t>(m.at(r, c)) * x[c];
            if (acc % m.fld.p != 0) zero = false;
        }
        if (zero) ++count;
    } while (advance(x, m.fld.p));
    return log_p(count, m.fld.p);
}

namespace {

std::set<flat> span_set(const Subspace& u) {
    std::set<flat> out;
    pow_checked(u.field().p, u.dim());
    flat coeff(u.dim(), 0);
    do {
        flat v(u.ambient, 0);
        for (std::uint32_t r = 0; r < u.dim(); ++r)
            for (std::uint32_t c = 0; c < u.ambient; ++c)
                v[c] = static_cast<std::uint32_t>(
                    (v[c] + static_cast<std::uint64_t>(coeff[r]) * u.basis.at(r, c)) %
                    u.field().p);
        out.insert(std::move(v));
    } while (advance(coeff, u.field().p));
    return out;
}

}  // namespace

std::uint32_t intersect_dim_brute(const Subspace& u, const Subspace& v) {
    std::set<flat> su = span_set(u), sv = span_set(v);
    std::uint64_t count = 0;
    for (const flat& x : su)
        if (sv.count(x)) ++count;
    return log_p(count, u.field().p);
}

std::uint32_t sum_dim_brute(const Subspace& u, const Subspace& v) {
    std::set<flat> out;
    for (const flat& x : span_set(u))
        for (const flat& y : span_set(v)) {
            flat s(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                s[i] = (x[i] + y[i]) % u.field().p;
            out.insert(std::move(s));
        }
    return log_p(out.size(), u.field().p);
}

std::uint32_t preimage_dim_brute(const Mat& m, const Subspace& target) {
    std::set<flat> st = span_set(target);
    pow_checked(m.fld.p, m.cols);
    std::uint64_t count = 0;
    flat x(m.cols, 0);
    do {
        flat img(m.rows, 0);
        for (std::uint32_t r = 0; r < m.rows; ++r) {
            std::uint64_t acc = 0;
            for (std::uint32_t c = 0; c < m.cols; ++c)
                acc += static_cast<std::uint64_t>(m.at(r, c)) * x[c];
            img[r] = static_cast<std::uint32_t>(acc % m.fld.p);
        }
        if (st.count(img)) ++count;
    } while (advance(x, m.fld.p));
    return log_p(count, m.fld.p);
}

std::vector<std::uint32_t> height_brute(const Preorder& p) {
    const std::size_t n = p.size();
    std::vector<std::uint32_t> h(n, 0);
    // longest strictly descending chain starting at each element, computed by
    // memoized recursion over the strict relation
    std::vector<std::uint32_t> memo(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> std::uint32_t {
        if (memo[i]) return memo[i];
        std::uint32_t best = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (p.strictly_less(j, i)) best = std::max(best, 1 + self(self, j));
        return memo[i] = best;
    };
    for (std::size_t i = 0; i < n; ++i) h[i] = rec(rec, i);
    return h;
}

std::vector<std::uint32_t> trace_dims_brute(const BoundQuiverAlgebra& alg,
                                            const std::vector<Representation>& gens,
                                            const Representation& target) {
    const std::uint32_t p = alg.field.p;
    std::vector<std::vector<flat>> generators(alg.num_vertices());  // image vectors

    for (const Representation& g : gens) {
        std::uint64_t params = 0;
        std::vector<std::size_t> off(alg.num_vertices() + 1, 0);
        for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
            params += static_cast<std::uint64_t>(target.dims[v]) * g.dims[v];
            off[v + 1] = off[v] + static_cast<std::size_t>(target.dims[v]) * g.dims[v];
        }
        pow_checked(p, params);
        flat f(params, 0);
        do {
            bool ok = true;
            for (std::size_t ai = 0; ai < alg.num_arrows() && ok; ++ai) {
                std::size_t s = alg.quiver.arrows[ai].src, t = alg.quiver.arrows[ai].tgt;
                for (std::uint32_t u = 0; u < target.dims[t] && ok; ++u)
                    for (std::uint32_t w = 0; w < g.dims[s] && ok; ++w) {
                        std::uint64_t lhs = 0, rhs = 0;
                        for (std::uint32_t j = 0; j < g.dims[t]; ++j)
                            lhs += static_cast<std::uint64_t>(f[off[t] + u * g.dims[t] + j]) *
                                   g.maps[ai].at(j, w);
                        for (std::uint32_t i = 0; i < target.dims[s]; ++i)
                            rhs += static_cast<std::uint64_t>(target.maps[ai].at(u, i)) *
                                   f[off[s] + i * g.dims[s] + w];
                        if (lhs % p != rhs % p) ok = false;
                    }
            }
            if (ok)
                for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
                    // columns of f_v are images of the unit vectors
                    for (std::uint32_t w = 0; w < g.dims[v]; ++w) {
                        flat col(target.dims[v], 0);
                        for (std::uint32_t u = 0; u < target.dims[v]; ++u)
                            col[u] = f[off[v] + u * g.dims[v] + w];
                        generators[v].push_back(std::move(col));
                    }
                }
        } while (advance(f, p));
    }

    std::vector<std::uint32_t> dims(alg.num_vertices(), 0);
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        std::set<flat> closure;
        closure.insert(flat(target.dims[v], 0));
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<flat> batch;
            for (const flat& s : closure)
                for (const flat& g : generators[v]) {
                    flat t(s.size());
                    for (std::size_t i = 0; i < s.size(); ++i) t[i] = (s[i] + g[i]) % p;
                    if (!closure.count(t)) batch.push_back(std::move(t));
                }
            for (flat& t : batch)
                if (closure.insert(std::move(t)).second) changed = true;
        }
        dims[v] = log_p(closure.size(), p);
    }
    return dims;
}

bool iso_brute(const BoundQuiverAlgebra& alg, const Representation& x, const Representation& y) {
    if (x.dims != y.dims) return false;
    const std::uint32_t p = alg.field.p;
    std::uint64_t params = 0;
    std::vector<std::size_t> off(alg.num_vertices() + 1, 0);
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        params += static_cast<std::uint64_t>(y.dims[v]) * x.dims[v];
        off[v + 1] = off[v] + static_cast<std::size_t>(y.dims[v]) * x.dims[v];
    }
    pow_checked(p, params);
    flat f(params, 0);
    do {
        bool ok = true;
        for (std::size_t ai = 0; ai < alg.num_arrows() && ok; ++ai) {
            std::size_t s = alg.quiver.arrows[ai].src, t = alg.quiver.arrows[ai].tgt;
            for (std::uint32_t u = 0; u < y.dims[t] && ok; ++u)
                for (std::uint32_t w = 0; w < x.dims[s] && ok; ++w) {
                    std::uint64_t lhs = 0, rhs = 0;
                    for (std::uint32_t j = 0; j < x.dims[t]; ++j)
                        lhs += static_cast<std::uint64_t>(f[off[t] + u * x.dims[t] + j]) *
                               x.maps[ai].at(j, w);
                    for (std::uint32_t i = 0; i < y.dims[s]; ++i)
                        rhs += static_cast<std::uint64_t>(y.maps[ai].at(u, i)) *
                               f[off[s] + i * x.dims[s] + w];
                    if (lhs % p != rhs % p) ok = false;
                }
        }
        if (!ok) continue;
        for (std::size_t v = 0; v < alg.num_vertices() && ok; ++v) {
            Mat fv(y.dims[v], x.dims[v], alg.field);
            for (std::uint32_t r = 0; r < fv.rows; ++r)
                for (std::uint32_t c = 0; c < fv.cols; ++c)
                    fv.at(r, c) = f[off[v] + static_cast<std::size_t>(r) * x.dims[v] + c];
            if (fv.rows != fv.cols || kernel_dim_brute(fv) != 0) ok = false;
        }
        if (ok) return true;
    } while (advance(f, p));
    return false;
}

std::vector<Representation> all_reps(const BoundQuiverAlgebra& alg,
                                     const std::vector<std::uint32_t>& dims) {
    const std::uint32_t p = alg.field.p;
    std::uint64_t params = 0;
    std::vector<std::size_t> off(alg.num_arrows() + 1, 0);
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        std::size_t s = alg.quiver.arrows[a].src, t = alg.quiver.arrows[a].tgt;
        params += static_cast<std::uint64_t>(dims[t]) * dims[s];
        off[a + 1] = off[a] + static_cast<std::size_t>(dims[t]) * dims[s];
    }
    pow_checked(p, params);

    std::vector<Representation> out;
    flat e(params, 0);
    do {
        std::vector<flat> maps(alg.num_arrows());
        for (std::size_t a = 0; a < alg.num_arrows(); ++a)
            maps[a] = flat(e.begin() + static_cast<std::ptrdiff_t>(off[a]),
                           e.begin() + static_cast<std::ptrdiff_t>(off[a + 1]));
        bool ok = true;
        for (const Relation& rel : alg.relations)
            if (!relation_holds(alg, rel, maps, dims)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Representation r;
        r.dims = dims;
        for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
            std::size_t s = alg.quiver.arrows[a].src, t = alg.quiver.arrows[a].tgt;
            Mat m(dims[t], dims[s], alg.field);
            m.a = maps[a];
            r.maps.push_back(std::move(m));
        }
        out.push_back(std::move(r));
    } while (advance(e, p));
    return out;
}

std::vector<Representation> all_reps_up_to(const BoundQuiverAlgebra& alg, std::uint32_t bound) {
    std::vector<Representation> out;
    std::vector<std::uint32_t> dims(alg.num_vertices(), 0);
    for (;;) {
        std::uint32_t total = 0;
        for (std::uint32_t d : dims) total += d;
        if (total <= bound)
            for (Representation& r : all_reps(alg, dims)) out.push_back(std::move(r));
        std::size_t i = 0;
        while (i < dims.size()) {
            if (++dims[i] <= bound) break;
            dims[i] = 0;
            ++i;
        }
        if (i == dims.size()) break;
    }
    return out;
}

}  // namespace homsys::oracle
