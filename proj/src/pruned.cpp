#include "irrec/pruned.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "irrec/oracle.hpp"

namespace irrec {
namespace pruned {

namespace {

MuTuple sorted_desc(MuTuple mu) {
    std::sort(mu.begin(), mu.end(), std::greater<long>());
    return mu;
}

CountTable& b_table() {
    static CountTable t;
    return t;
}

bool base_case(int g, const MuTuple& mu, Rational& out) {
    const size_t n = mu.size();
    if (g == 0 && n == 1) {
        out = 0;
        return true;
    }
    if (g == 0 && n == 2) {
        out = (mu[0] == mu[1]) ? ratio(1, mu[0]) : Rational(0);
        return true;
    }
    if (g == 0 && n == 3) {
        out = 2;
        return true;
    }
    if (g == 1 && n == 1) {
        long m = mu[0];
        out = (m % 2 == 0) ? ratio(m * m - 4, 24) : ratio(m * m - 1, 24);
        return true;
    }
    return false;
}

Rational b_impl(int g, const MuTuple& mu);

// "Cut a path" contributions: sum over p+q+r = m of pqr [ b_{g-1,n+1}(p,q,rest)
// + stable genus/subset splits ]. The stable restriction drops every factor
// that would be a b_{0,1} or b_{0,2}.
Rational cut_terms(int g, long m, const MuTuple& rest) {
    Rational acc = 0;
    const size_t n1 = rest.size();
    for (long p = 1; p + 2 <= m; ++p) {
        for (long q = 1; p + q + 1 <= m; ++q) {
            const long r = m - p - q;
            const Rational w(p * q * r);
            if (g >= 1) {
                MuTuple sub{p, q};
                sub.insert(sub.end(), rest.begin(), rest.end());
                Rational lower = b_impl(g - 1, sub);
                if (lower != 0) acc += w * lower;
            }
            for (int g1 = 0; g1 <= g; ++g1) {
                const int g2 = g - g1;
                const size_t subsets = size_t(1) << n1;
                for (size_t mask = 0; mask < subsets; ++mask) {
                    MuTuple a{p}, b{q};
                    for (size_t k = 0; k < n1; ++k)
                        (mask >> k & 1 ? a : b).push_back(rest[k]);
                    if (g1 == 0 && a.size() <= 2) continue;
                    if (g2 == 0 && b.size() <= 2) continue;
                    Rational ba = b_impl(g1, a);
                    if (ba == 0) continue;
                    acc += w * ba * b_impl(g2, b);
                }
            }
        }
    }
    return acc;
}

Rational b_impl(int g, const MuTuple& mu) {
    if (g < 0) return 0;
    for (long v : mu)
        if (v < 1) throw std::domain_error("b_pruned: parts must be >= 1");
    Rational base;
    if (base_case(g, mu, base)) return base;
    MuTuple key = sorted_desc(mu);
    Rational cached;
    if (b_table().lookup(g, key, cached)) return cached;
    const size_t n = key.size();
    long tot = 0;
    for (long v : key) tot += v;
    Rational acc = 0;
    for (size_t i = 0; i < n; ++i) {
        MuTuple rest;
        for (size_t k = 0; k < n; ++k)
            if (k != i) rest.push_back(key[k]);
        acc += cut_terms(g, key[i], rest);
    }
    // merge faces i and j (ordered pairs): a path of q edges joins them into
    // a single face of perimeter 2p.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            MuTuple rest;
            for (size_t k = 0; k < n; ++k)
                if (k != i && k != j) rest.push_back(key[k]);
            const long s = key[i] + key[j];
            MuTuple sub{0};
            sub.insert(sub.end(), rest.begin(), rest.end());
            for (long p = 1; p + 1 <= s; ++p) {
                sub[0] = p;
                Rational lower = b_impl(g, sub);
                if (lower != 0) acc += Rational(p * (s - p)) * lower;
            }
        }
    }
    Rational val = acc / Rational(tot);
    b_table().store(g, key, val);
    return val;
}

}  // namespace

Rational b_pruned(int g, const MuTuple& mu) {
    if (mu.empty()) throw std::domain_error("b_pruned: empty tuple");
    return b_impl(g, mu);
}

Rational b_pruned_asym(int g, const MuTuple& mu) {
    if (mu.empty()) throw std::domain_error("b_pruned_asym: empty tuple");
    for (long v : mu)
        if (v < 1) throw std::domain_error("b_pruned_asym: parts must be >= 1");
    Rational base;
    if (base_case(g, mu, base)) return base;
    if (g == 0 && mu.size() < 3) return 0;
    const long mu1 = mu[0];
    const MuTuple rest(mu.begin() + 1, mu.end());
    Rational acc = cut_terms(g, mu1, rest);
    for (size_t i = 0; i < rest.size(); ++i) {
        MuTuple sub = rest;
        const long s = mu1 + rest[i];
        for (long p = 1; p + 1 <= s; ++p) {
            sub[i] = p;
            Rational lower = b_impl(g, sub);
            if (lower != 0) acc += Rational(p * (s - p)) * lower;
        }
        const long d = mu1 - rest[i];
        const int sign = (d > 0) - (d < 0);  // sign(0) = 0 kills the term
        if (sign != 0) {
            const long ad = d > 0 ? d : -d;
            for (long p = 1; p + 1 <= ad; ++p) {
                sub[i] = p;
                Rational lower = b_impl(g, sub);
                if (lower != 0) acc += Rational(sign) * Rational(p * (ad - p)) * lower;
            }
        }
    }
    return acc / Rational(mu1);
}

Rational tree_gluing_count(long b, long k) {
    if (k == 0) return 1;
    return Rational(b) / Rational(b + k) * Rational(binomial(b - 1 + 2 * k, k));
}

Rational tree_glue_transform(int g, const MuTuple& mu) {
    const long n = static_cast<long>(mu.size());
    if (g == 0 && n == 1) throw std::domain_error("tree_glue_transform: (0,1) has no pruned seed");
    for (long v : mu)
        if (v < 1) throw std::domain_error("tree_glue_transform: parts must be >= 1");
    MuTuple k(static_cast<size_t>(n), 0);
    Rational acc = 0;
    while (true) {
        MuTuple nu(static_cast<size_t>(n));
        bool ok = true;
        for (size_t i = 0; i < nu.size(); ++i) {
            nu[i] = mu[i] - k[i];
            if (nu[i] < 1) ok = false;
        }
        if (ok) {
            Rational w = b_impl(g, nu);
            if (w != 0) {
                for (size_t i = 0; i < nu.size(); ++i) w *= tree_gluing_count(2 * nu[i], k[i]);
                acc += w;
            }
        }
        size_t v = 0;
        for (; v < k.size(); ++v) {
            if (++k[v] <= mu[v] - 1) break;
            k[v] = 0;
        }
        if (v == k.size()) break;
    }
    return acc;
}

QuasiPolynomial quasipoly_fit(int g, int n) {
    if (2 * g - 2 + n <= 0) throw std::domain_error("quasipoly_fit: stable (g,n) required");
    QuasiPolynomial q;
    q.nvars = n;
    q.degree_bound = 3 * g - 3 + n;
    const long D = q.degree_bound;
    std::vector<int> par(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::vector<Rational>> nodes(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            for (long t = 0; t <= D; ++t) {
                long m = (par[static_cast<size_t>(v)] == 1) ? (2 * t + 1) : (2 * t + 2);
                nodes[static_cast<size_t>(v)].push_back(Rational(m) * Rational(m));
            }
        }
        auto fval = [&](const std::vector<Rational>& pt) -> Rational {
            MuTuple mu;
            for (const auto& u : pt) {
                Integer root;
                mpz_sqrt(root.get_mpz_t(), u.get_num().get_mpz_t());
                mu.push_back(root.get_si());
            }
            return b_impl(g, mu);
        };
        MPoly fitted = interpolate_on_grid(nodes, fval);
        for (long extra = 1; extra <= 2; ++extra) {
            MuTuple mu;
            std::vector<Rational> pt;
            for (int v = 0; v < n; ++v) {
                long m = (par[static_cast<size_t>(v)] == 1 ? 2 * (D + extra) + 1 : 2 * (D + extra) + 2);
                mu.push_back(m);
                pt.push_back(Rational(m) * Rational(m));
            }
            if (fitted.evaluate(pt) != b_impl(g, mu))
                throw std::runtime_error("quasipoly_fit: held-out verification failed");
        }
        q.classes.emplace(par, std::move(fitted));
        int v = 0;
        for (; v < n; ++v) {
            if (++par[static_cast<size_t>(v)] <= 1) break;
            par[static_cast<size_t>(v)] = 0;
        }
        if (v == n) break;
    }
    return q;
}

Rational psi_leading_check(int g, int n, const std::vector<long>& a, const Rational& psi_value) {
    long total = 0;
    for (long x : a) total += x;
    if (total != 3 * g - 3 + n) throw std::domain_error("psi_leading_check: |a| must be 3g-3+n");
    QuasiPolynomial q = quasipoly_fit(g, n);
    Rational coeff;
    bool first = true;
    for (const auto& [par, poly] : q.classes) {
        Rational c = poly.coeff(a);
        if (first) {
            coeff = c;
            first = false;
        } else if (c != coeff) {
            throw std::runtime_error("psi_leading_check: top coefficient differs between classes");
        }
    }
    Rational fact = 1;
    for (long x : a) fact *= Rational(factorial(x));
    Rational predicted = Rational(pow2(1 - g) / fact) * psi_value;
    return Rational(coeff - predicted);
}

Rational nb_count(int g, const MuTuple& mu) {
    MuTuple doubled;
    for (long v : mu) doubled.push_back(2 * v);
    auto counts = oracle::fatgraphs_brute(doubled, /*pruned=*/true);
    Rational n_val = counts.count(g) ? counts.at(g) : Rational(0);
    return Rational(Rational(2) * n_val - b_pruned(g, mu));
}

PMinusPart p_minus_extract(const QuasiPolynomial& q) {
    MPoly even, odd;
    bool have_even = false, have_odd = false;
    for (const auto& [par, poly] : q.classes) {
        int s = 0;
        for (int p : par) s += p;
        if (s % 2 == 0) {
            if (have_even && !(even == poly))
                throw std::domain_error("p_minus_extract: even-|mu| classes disagree");
            even = poly;
            have_even = true;
        } else {
            if (have_odd && !(odd == poly))
                throw std::domain_error("p_minus_extract: odd-|mu| classes disagree");
            odd = poly;
            have_odd = true;
        }
    }
    if (!have_even || !have_odd) throw std::domain_error("p_minus_extract: insufficient classes");
    PMinusPart out;
    out.n = q.nvars;
    out.poly = even - odd;
    return out;
}

namespace {

// Exact dense linear solve (Gaussian elimination); A is m x m, rhs length m.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs) {
    const size_t m = A.size();
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && A[piv][col] == 0) ++piv;
        if (piv == m) throw std::runtime_error("singular fit system");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational inv = Rational(1) / A[col][col];
        for (size_t k = col; k < m; ++k) A[col][k] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (size_t k = col; k < m; ++k) A[r][k] -= f * A[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

QuasiPolynomial nb1_quasipoly(int n) {
    QuasiPolynomial q;
    q.nvars = n;
    if (n == 1) {
        q.degree_bound = 1;
        for (int par = 0; par <= 1; ++par) {
            std::vector<std::vector<Rational>> nodes(1);
            for (long t = 0; t <= 1; ++t) {
                long m = par == 1 ? 2 * t + 1 : 2 * t + 2;
                nodes[0].push_back(Rational(m) * Rational(m));
            }
            auto fval = [&](const std::vector<Rational>& pt) -> Rational {
                Integer root;
                mpz_sqrt(root.get_mpz_t(), pt[0].get_num().get_mpz_t());
                return nb_count(1, {root.get_si()});
            };
            MPoly fitted = interpolate_on_grid(nodes, fval);
            long held = par == 1 ? 5 : 6;
            if (fitted.evaluate({Rational(held * held)}) != nb_count(1, {held}))
                throw std::runtime_error("nb1_quasipoly: held-out verification failed");
            q.classes.emplace(std::vector<int>{par}, std::move(fitted));
        }
        return q;
    }
    if (n != 2) throw std::domain_error("nb1_quasipoly: n in {1,2}");
    // Two variables. The even-|mu| classes share one symmetric polynomial P of
    // total degree 2 in the squared variables (4-dimensional space); fit it
    // from four points, verify on the remaining even-|mu| oracle points, then
    // check that P - NB is one constant on every odd-|mu| point.
    q.degree_bound = 2;
    auto nb = [&](long a, long b) -> Rational { return nb_count(1, {a, b}); };
    if (nb(1, 2) != nb(2, 1)) throw std::runtime_error("nb1_quasipoly: oracle data not symmetric");
    // symmetric basis in u = mu1^2, v = mu2^2: {1, u+v, u^2+v^2, uv}
    auto row = [](long m1, long m2) -> std::vector<Rational> {
        Rational u(m1 * m1), v(m2 * m2);
        return {Rational(1), Rational(u + v), Rational(u * u + v * v), Rational(u * v)};
    };
    const std::vector<std::pair<long, long>> fit_pts{{1, 1}, {1, 3}, {2, 2}, {1, 5}};
    const std::vector<std::pair<long, long>> held_pts{{2, 4}, {3, 3}};
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> rhs;
    for (auto [a, b] : fit_pts) {
        A.push_back(row(a, b));
        rhs.push_back(nb(a, b));
    }
    std::vector<Rational> coef = solve_linear(A, rhs);
    MPoly P(2);
    P.add({0, 0}, coef[0]);
    P.add({1, 0}, coef[1]);
    P.add({0, 1}, coef[1]);
    P.add({2, 0}, coef[2]);
    P.add({0, 2}, coef[2]);
    P.add({1, 1}, coef[3]);
    for (auto [a, b] : held_pts) {
        if (P.evaluate({Rational(a * a), Rational(b * b)}) != nb(a, b))
            throw std::runtime_error("nb1_quasipoly: held-out verification failed (even classes)");
    }
    // constant deviation on the odd-|mu| classes
    const std::vector<std::pair<long, long>> odd_pts{{1, 2}, {1, 4}, {2, 3}};
    Rational d;
    bool first = true;
    for (auto [a, b] : odd_pts) {
        Rational dev = Rational(P.evaluate({Rational(a * a), Rational(b * b)}) - nb(a, b));
        if (first) {
            d = dev;
            first = false;
        } else if (dev != d) {
            throw std::runtime_error("nb1_quasipoly: parity deviation is not constant");
        }
    }
    MPoly Pminus = P;
    Pminus.add({0, 0}, -d);
    q.classes.emplace(std::vector<int>{0, 0}, P);
    q.classes.emplace(std::vector<int>{1, 1}, P);
    q.classes.emplace(std::vector<int>{0, 1}, Pminus);
    q.classes.emplace(std::vector<int>{1, 0}, Pminus);
    return q;
}

}  // namespace pruned
}  // namespace irrec
