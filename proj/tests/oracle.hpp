#pragma once

// Brute-force reference evaluator for the tests. Every law is written out
// by hand as nested loops over structure constants; nothing here goes
// through the identity language or the compiled checker.

#include "homsuper/algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using V = std::vector<Q>;

struct Alg {
    std::size_t ne = 0, no = 0;
    std::vector<Q> c;  // c[(i*n + j)*n + k]
    std::vector<Q> t;  // empty when there is no ternary product
    std::vector<Q> a;  // a[i*n + j], column j is alpha(b_j)

    std::size_t n() const { return ne + no; }
    int par(std::size_t i) const { return i < ne ? 0 : 1; }
};

inline Alg from(const homsuper::HomSuperalgebra& A) {
    Alg g;
    g.ne = A.space().dim_even();
    g.no = A.space().dim_odd();
    const std::size_t n = g.n();
    g.c.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                g.c[(i * n + j) * n + k] = A.product().at(i, j, k);
    if (A.ternary()) {
        g.t.resize(n * n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l)
                        g.t[((i * n + j) * n + k) * n + l] = A.ternary()->at(i, j, k, l);
    }
    g.a.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.a[i * n + j] = A.alpha().at(i, j);
    return g;
}

inline V e(const Alg& g, std::size_t i) {
    V v(g.n());
    v[i] = 1;
    return v;
}
inline V add(V x, const V& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += y[i];
    return x;
}
inline V sub(V x, const V& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] -= y[i];
    return x;
}
inline V scale(const Q& s, V x) {
    for (auto& q : x)
        q *= s;
    return x;
}
inline bool zero(const V& x) {
    for (const auto& q : x)
        if (q != 0)
            return false;
    return true;
}

inline V mul(const Alg& g, const V& x, const V& y) {
    const std::size_t n = g.n();
    V out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                out[k] += x[i] * y[j] * g.c[(i * n + j) * n + k];
        }
    }
    return out;
}

inline V tern(const Alg& g, const V& x, const V& y, const V& z) {
    if (g.t.empty())
        throw std::runtime_error("no ternary product");
    const std::size_t n = g.n();
    V out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Q f = x[i] * y[j] * z[k];
                if (f == 0)
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    out[l] += f * g.t[((i * n + j) * n + k) * n + l];
            }
    return out;
}

inline V al(const Alg& g, const V& x, unsigned k = 1) {
    V cur = x;
    const std::size_t n = g.n();
    for (unsigned step = 0; step < k; ++step) {
        V next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                next[i] += g.a[i * n + j] * cur[j];
        cur = std::move(next);
    }
    return cur;
}

inline int sg(int p) { return (p & 1) ? -1 : 1; }

// Bracket of the product; p, q are parities of x, y.
inline V brk(const Alg& g, const V& x, int p, const V& y, int q) {
    return sub(mul(g, x, y), scale(sg(p * q), mul(g, y, x)));
}

using Law = std::function<V(const Alg&, const std::vector<V>&, const std::vector<int>&)>;

struct Entry {
    int arity;
    Law law;
};

// Residuals written directly from the definitions. x,y,z,u,v,w = args 0..5.
inline const std::map<std::string, Entry>& laws() {
    static const std::map<std::string, Entry> table = [] {
        std::map<std::string, Entry> m;
        m["LLSI"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                         V lhs = mul(g, al(g, a[0]), mul(g, a[1], a[2]));
                         V r1 = mul(g, mul(g, a[0], a[1]), al(g, a[2]));
                         V r2 = scale(sg(p[0] * p[1]), mul(g, al(g, a[1]), mul(g, a[0], a[2])));
                         return sub(sub(lhs, r1), r2);
                     }};
        m["RLSI"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                         V lhs = mul(g, mul(g, a[0], a[1]), al(g, a[2]));
                         V r1 = mul(g, al(g, a[0]), mul(g, a[1], a[2]));
                         V r2 = scale(sg(p[1] * p[2]), mul(g, mul(g, a[0], a[2]), al(g, a[1])));
                         return sub(sub(lhs, r1), r2);
                     }};
        m["ASSOC_FORM"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                               V as = sub(mul(g, mul(g, a[0], a[1]), al(g, a[2])),
                                          mul(g, al(g, a[0]), mul(g, a[1], a[2])));
                               return add(as, scale(sg(p[0] * p[1]), mul(g, al(g, a[1]), mul(g, a[0], a[2]))));
                           }};
        m["SKEW_SUPER"] = {2, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                               return add(mul(g, a[0], a[1]), scale(sg(p[0] * p[1]), mul(g, a[1], a[0])));
                           }};
        m["HOM_SUPER_JACOBI"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                                     const V &x = a[0], &y = a[1], &z = a[2];
                                     V t1 = mul(g, mul(g, x, y), al(g, z));
                                     V t2 = scale(sg(p[0] * (p[1] + p[2])), mul(g, mul(g, y, z), al(g, x)));
                                     V t3 = scale(sg(p[2] * (p[0] + p[1])), mul(g, mul(g, z, x), al(g, y)));
                                     return add(add(t1, t2), t3);
                                 }};
        m["MULT"] = {2, [](const Alg& g, const std::vector<V>& a, const std::vector<int>&) {
                         return sub(al(g, mul(g, a[0], a[1])), mul(g, al(g, a[0]), al(g, a[1])));
                     }};
        m["LIE_ADMISSIBLE"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                                   V out(g.n());
                                   for (int s = 0; s < 3; ++s) {
                                       const int X = s, Y = (s + 1) % 3, Z = (s + 2) % 3;
                                       out = add(out, scale(sg(p[X] * p[Z]), mul(g, mul(g, a[X], a[Y]), al(g, a[Z]))));
                                   }
                                   return out;
                               }};
        m["AKIVIS_LEIBNIZ_FORM"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                                        V out(g.n());
                                        for (int s = 0; s < 3; ++s) {
                                            const int X = s, Y = (s + 1) % 3, Z = (s + 2) % 3;
                                            V xy = brk(g, a[X], p[X], a[Y], p[Y]);
                                            V j = brk(g, xy, p[X] + p[Y], al(g, a[Z]), p[Z]);
                                            V r = mul(g, mul(g, a[X], a[Y]), al(g, a[Z]));
                                            out = add(out, scale(sg(p[X] * p[Z]), sub(j, r)));
                                        }
                                        return out;
                                    }};
        m["PROP32_I"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                             V s = add(mul(g, a[0], a[1]), scale(sg(p[0] * p[1]), mul(g, a[1], a[0])));
                             return mul(g, s, al(g, a[2]));
                         }};
        m["PROP32_II"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                              const V &x = a[0], &y = a[1], &z = a[2];
                              V lhs = mul(g, al(g, x), brk(g, y, p[1], z, p[2]));
                              V r1 = brk(g, mul(g, x, y), p[0] + p[1], al(g, z), p[2]);
                              V r2 = scale(sg(p[0] * p[1]), brk(g, al(g, y), p[1], mul(g, x, z), p[0] + p[2]));
                              return sub(sub(lhs, r1), r2);
                          }};
        m["TERNARY_EQUIV_ASSOC"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                                        const V &x = a[0], &y = a[1], &z = a[2];
                                        auto as = [&](const V& u, const V& v, const V& w) {
                                            return sub(mul(g, mul(g, u, v), al(g, w)), mul(g, al(g, u), mul(g, v, w)));
                                        };
                                        V lhs = sub(scale(sg(p[0] * p[1]), as(y, x, z)), as(x, y, z));
                                        return add(lhs, mul(g, mul(g, x, y), al(g, z)));
                                    }};
        m["TERNARY_EQUIV_HALF"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                                       V l = scale(-1, mul(g, mul(g, a[0], a[1]), al(g, a[2])));
                                       V r = scale(Q(-1, 2), mul(g, brk(g, a[0], p[0], a[1], p[1]), al(g, a[2])));
                                       return sub(l, r);
                                   }};
        // Binary-ternary laws: "*" is the stored binary product, {} the ternary.
        m["AKIVIS"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                           V out(g.n());
                           for (int s = 0; s < 3; ++s) {
                               const int X = s, Y = (s + 1) % 3, Z = (s + 2) % 3;
                               out = add(out, scale(sg(p[X] * p[Z]), mul(g, mul(g, a[X], a[Y]), al(g, a[Z]))));
                               out = sub(out, scale(sg(p[X] * p[Z]), tern(g, a[X], a[Y], a[Z])));
                               out = add(out, scale(sg((p[Y] + p[Z]) * p[X]), tern(g, a[Y], a[X], a[Z])));
                           }
                           return out;
                       }};
        m["SHLY1"] = {2, [](const Alg& g, const std::vector<V>& a, const std::vector<int>&) {
                          return sub(al(g, mul(g, a[0], a[1])), mul(g, al(g, a[0]), al(g, a[1])));
                      }};
        m["SHLY2"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>&) {
                          return sub(al(g, tern(g, a[0], a[1], a[2])), tern(g, al(g, a[0]), al(g, a[1]), al(g, a[2])));
                      }};
        m["SHLY3"] = {2, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                          return add(mul(g, a[0], a[1]), scale(sg(p[0] * p[1]), mul(g, a[1], a[0])));
                      }};
        m["SHLY4"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                          return add(tern(g, a[0], a[1], a[2]), scale(sg(p[0] * p[1]), tern(g, a[1], a[0], a[2])));
                      }};
        m["SHLY5"] = {3, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                          V out(g.n());
                          for (int s = 0; s < 3; ++s) {
                              const int X = s, Y = (s + 1) % 3, Z = (s + 2) % 3;
                              V body = add(mul(g, mul(g, a[X], a[Y]), al(g, a[Z])), tern(g, a[X], a[Y], a[Z]));
                              out = add(out, scale(sg(p[X] * p[Z]), body));
                          }
                          return out;
                      }};
        m["SHLY6"] = {4, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                          V out(g.n());
                          for (int s = 0; s < 3; ++s) {
                              const int X = s, Y = (s + 1) % 3, Z = (s + 2) % 3;
                              V body = tern(g, mul(g, a[X], a[Y]), al(g, a[Z]), al(g, a[3]));
                              out = add(out, scale(sg(p[X] * p[Z]), body));
                          }
                          return out;
                      }};
        m["SHLY7"] = {5, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                          const V &x = a[0], &y = a[1], &u = a[2], &v = a[3];
                          V lhs = tern(g, al(g, x), al(g, y), mul(g, u, v));
                          V r1 = mul(g, tern(g, x, y, u), al(g, v, 2));
                          V r2 = scale(sg(p[2] * (p[0] + p[1])), mul(g, al(g, u, 2), tern(g, x, y, v)));
                          return sub(sub(lhs, r1), r2);
                      }};
        m["SHLY8"] = {5, [](const Alg& g, const std::vector<V>& a, const std::vector<int>& p) {
                          const V &x = a[0], &y = a[1], &u = a[2], &v = a[3], &w = a[4];
                          V lhs = tern(g, al(g, x, 2), al(g, y, 2), tern(g, u, v, w));
                          V r1 = tern(g, tern(g, x, y, u), al(g, v, 2), al(g, w, 2));
                          V r2 = scale(sg(p[2] * (p[0] + p[1])), tern(g, al(g, u, 2), tern(g, x, y, v), al(g, w, 2)));
                          V r3 = scale(sg((p[0] + p[1]) * (p[2] + p[3])),
                                       tern(g, al(g, u, 2), al(g, v, 2), tern(g, x, y, w)));
                          return sub(sub(sub(lhs, r1), r2), r3);
                      }};
        return m;
    }();
    return table;
}

/// True iff the named law holds on every basis tuple. With `ungraded` all
/// parities are taken as 0.
inline bool holds(const std::string& name, const Alg& g, bool ungraded = false) {
    const Entry& entry = laws().at(name);
    const std::size_t n = g.n();
    std::vector<std::size_t> idx(entry.arity, 0);
    if (n == 0)
        return true;
    for (;;) {
        std::vector<V> args;
        std::vector<int> par;
        for (auto i : idx) {
            args.push_back(e(g, i));
            par.push_back(ungraded ? 0 : g.par(i));
        }
        if (!zero(entry.law(g, args, par)))
            return false;
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == n)
            idx[--pos] = 0;
        if (pos == 0)
            return true;
    }
}

inline bool holds(const std::string& name, const homsuper::HomSuperalgebra& A, bool ungraded = false) {
    return holds(name, from(A), ungraded);
}

inline bool graded_ok(const Alg& g) {
    const std::size_t n = g.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.c[(i * n + j) * n + k] != 0 && ((g.par(i) + g.par(j)) & 1) != g.par(k))
                    return false;
    return true;
}

} // namespace oracle
