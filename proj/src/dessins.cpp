#include "irrec/dessins.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace irrec {

std::string MPoly::str(const std::string& stem) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!first) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0)
            os << "-";
        Rational a = abs(v);
        bool any = false;
        for (long x : e) any |= (x != 0);
        if (!any || a != 1) os << a.get_str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << stem << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

namespace dessins {

namespace {

MuTuple sorted_desc(MuTuple mu) {
    std::sort(mu.begin(), mu.end(), std::greater<long>());
    return mu;
}

CountTable& u_table() {
    static CountTable t;
    return t;
}

Rational u_impl(int g, const MuTuple& mu);

// The recursion with mu1 distinguished; rest arbitrary order.
Rational u_rec(int g, long mu1, const MuTuple& rest) {
    Rational acc = 0;
    const size_t n1 = rest.size();
    // edge-join term: mu_j * U_g(mu1+mu_j-1, rest minus j)
    for (size_t j = 0; j < n1; ++j) {
        MuTuple sub;
        sub.reserve(n1);
        sub.push_back(mu1 + rest[j] - 1);
        for (size_t k = 0; k < n1; ++k)
            if (k != j) sub.push_back(rest[k]);
        acc += Rational(rest[j]) * u_impl(g, sub);
    }
    // edge-cut terms over i + j = mu1 - 1
    for (long i = 0; i + 1 <= mu1; ++i) {
        long j = mu1 - 1 - i;
        {
            MuTuple sub;
            sub.reserve(n1 + 2);
            sub.push_back(i);
            sub.push_back(j);
            for (long v : rest) sub.push_back(v);
            if (g >= 1) acc += u_impl(g - 1, sub);
        }
        // all genus splits and subset splits
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            const size_t subsets = size_t(1) << n1;
            for (size_t mask = 0; mask < subsets; ++mask) {
                MuTuple a{i}, b{j};
                for (size_t k = 0; k < n1; ++k)
                    (mask >> k & 1 ? a : b).push_back(rest[k]);
                Rational ua = u_impl(g1, a);
                if (ua == 0) continue;
                acc += ua * u_impl(g2, b);
            }
        }
    }
    return acc;
}

Rational u_impl(int g, const MuTuple& mu) {
    if (g < 0) return 0;
    // zero-part convention
    for (long v : mu)
        if (v == 0) return (g == 0 && mu.size() == 1) ? Rational(1) : Rational(0);
    MuTuple key = sorted_desc(mu);
    Rational cached;
    if (u_table().lookup(g, key, cached)) return cached;
    Rational val = u_rec(g, key[0], MuTuple(key.begin() + 1, key.end()));
    u_table().store(g, key, val);
    return val;
}

}  // namespace

Rational u_count(int g, const MuTuple& mu) {
    if (g < 0) throw std::domain_error("u_count: negative genus");
    if (mu.empty()) throw std::domain_error("u_count: empty tuple");
    return u_impl(g, mu);
}

Rational u_count_first(int g, long mu1, const MuTuple& rest) {
    if (mu1 == 0 || std::count(rest.begin(), rest.end(), 0) > 0) {
        MuTuple all{mu1};
        all.insert(all.end(), rest.begin(), rest.end());
        return u_impl(g, all);
    }
    return u_rec(g, mu1, rest);
}

Rational b_big(int g, const MuTuple& mu) {
    Rational denom = 1;
    for (long v : mu) {
        if (v <= 0) throw std::domain_error("b_big: parts must be positive (use zero insertion)");
        denom *= v;
    }
    return u_count(g, mu) / denom;
}

Rational three_term_u(int g, long n) {
    if (g < 0 || n < 0) return 0;
    static std::map<std::pair<int, long>, Rational> memo;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lk(m);
        auto it = memo.find({g, n});
        if (it != memo.end()) return it->second;
    }
    Rational val;
    if (n == 0)
        val = (g == 0) ? Rational(1) : Rational(0);
    else
        val = (Rational(2 * (2 * n - 1)) * three_term_u(g, n - 1) +
               Rational((n - 1) * (n - 1) * (n - 2)) * three_term_u(g - 1, n - 2)) /
              Rational(n + 1);
    std::lock_guard<std::mutex> lk(m);
    memo.emplace(std::make_pair(g, n), val);
    return val;
}

Rational epsilon_hz(int g, long n) {
    if (g < 0 || n < 0) return 0;
    static std::map<std::pair<int, long>, Rational> memo;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lk(m);
        auto it = memo.find({g, n});
        if (it != memo.end()) return it->second;
    }
    Rational val;
    if (n == 0)
        val = (g == 0) ? Rational(1) : Rational(0);
    else
        val = (Rational(2 * (2 * n - 1)) * epsilon_hz(g, n - 1) +
               Rational((n - 1) * (2 * n - 1) * (2 * n - 3)) * epsilon_hz(g - 1, n - 2)) /
              Rational(n + 1);
    std::lock_guard<std::mutex> lk(m);
    memo.emplace(std::make_pair(g, n), val);
    return val;
}

namespace {
// binom(z, k) as a polynomial in z.
Poly binom_poly(long k) {
    Poly p = Poly::one();
    for (long i = 0; i < k; ++i) p *= Poly(std::vector<Rational>{Rational(-i), 1});
    return p / Rational(factorial(k));
}
}  // namespace

Poly jackson_poly(long n) {
    if (n < 1) throw std::domain_error("jackson_poly: n >= 1");
    Poly acc;
    for (long r = 0; r <= n - 1; ++r) {
        for (long s = 0; r + s <= n - 1; ++s) {
            Rational mult(factorial(n - 1) / (factorial(r) * factorial(s) * factorial(n - 1 - r - s)));
            acc += binom_poly(r + 1) * binom_poly(s + 1) * mult;
        }
    }
    return acc * Rational(factorial(n));
}

Poly hz_poly(long n) {
    if (n < 0) throw std::domain_error("hz_poly: n >= 0");
    Poly acc;
    for (long r = 0; r <= n; ++r)
        acc += binom_poly(r + 1) * (Rational(binomial(n, r)) * pow2(r));
    Rational pref = Rational(factorial(2 * n)) / (pow2(n) * Rational(factorial(n)));
    return acc * pref;
}

Rational genus0_closed(const MuTuple& mu) {
    const long n = static_cast<long>(mu.size());
    long tot = 0;
    Rational binoms = 1;
    for (long v : mu) {
        tot += v;
        binoms *= Rational(binomial(2 * v, v));
    }
    if (n == 1) {
        // binom(2m,m) / (m (m+1))
        long m = mu[0];
        return binoms / Rational(m * (m + 1));
    }
    if (n == 2) return binoms / Rational(2 * tot);
    Rational fall = 1;
    for (long k = 1; k <= n - 3; ++k) fall *= Rational(tot - k);
    return pow2(1 - n) * fall * binoms;
}

Rational c_factor(int g, long mu) {
    if (mu < 0) throw std::domain_error("c_factor: mu >= 0");
    Rational r(binomial(2 * mu, mu));
    r *= pow2(-g);
    for (long k = 1; k <= g; ++k) r /= Rational(2 * mu - 2 * k + 1);
    return r;
}

}  // namespace dessins

// Tensor-grid Lagrange interpolation of values on per-variable node sets.
MPoly interpolate_on_grid(const std::vector<std::vector<Rational>>& nodes,
                          const std::function<Rational(const std::vector<Rational>&)>& f) {
    const int n = static_cast<int>(nodes.size());
    // univariate Lagrange basis polynomials per variable
    std::vector<std::vector<Poly>> basis(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& xs = nodes[static_cast<size_t>(v)];
        for (size_t i = 0; i < xs.size(); ++i) {
            Poly p = Poly::one();
            Rational denom = 1;
            for (size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                p *= Poly(std::vector<Rational>{-xs[j], 1});
                denom *= xs[i] - xs[j];
            }
            basis[static_cast<size_t>(v)].push_back(p / denom);
        }
    }
    MPoly out(n);
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<Rational> pt(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) pt[static_cast<size_t>(v)] = nodes[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]];
        Rational val = f(pt);
        if (val != 0) {
            // outer product of the univariate basis polynomials
            std::vector<std::pair<std::vector<long>, Rational>> acc{{std::vector<long>{}, val}};
            for (int v = 0; v < n; ++v) {
                const Poly& b = basis[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]];
                std::vector<std::pair<std::vector<long>, Rational>> next;
                for (const auto& [e, c] : acc) {
                    for (long d = 0; d <= b.degree(); ++d) {
                        if (b.coeff(d) == 0) continue;
                        auto e2 = e;
                        e2.push_back(d);
                        next.emplace_back(std::move(e2), c * b.coeff(d));
                    }
                }
                acc = std::move(next);
            }
            for (const auto& [e, c] : acc) out.add(e, c);
        }
        int v = 0;
        for (; v < n; ++v) {
            if (++idx[static_cast<size_t>(v)] < nodes[static_cast<size_t>(v)].size()) break;
            idx[static_cast<size_t>(v)] = 0;
        }
        if (v == n) break;
    }
    return out;
}

namespace dessins {

MPoly structure_polynomial(int g, int n) {
    if (2 * g - 2 + n <= 0) throw std::domain_error("structure_polynomial: stable (g,n) required");
    const long D = 3 * g - 3 + n + static_cast<long>(n) * g;  // total degree bound
    std::vector<std::vector<Rational>> nodes(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        for (long x = g + 1; x <= g + D + 1; ++x) nodes[static_cast<size_t>(v)].push_back(Rational(x));
    auto fval = [&](const std::vector<Rational>& pt) -> Rational {
        MuTuple mu;
        Rational cs = 1;
        for (const auto& x : pt) {
            long m = static_cast<long>(x.get_num().get_si());
            mu.push_back(m);
            cs *= c_factor(g, m);
        }
        return Rational(b_big(g, mu) / cs);
    };
    MPoly p = interpolate_on_grid(nodes, fval);
    // held-out verification on D extra diagonal-ish points
    for (long k = 1; k <= D; ++k) {
        MuTuple mu;
        std::vector<Rational> pt;
        for (int v = 0; v < n; ++v) {
            long m = g + D + 1 + k + v;
            mu.push_back(m);
            pt.push_back(Rational(m));
        }
        Rational cs = 1;
        for (long m : mu) cs *= c_factor(g, m);
        if (p.evaluate(pt) != b_big(g, mu) / cs)
            throw std::runtime_error("structure_polynomial: degree bound violated on held-out point");
    }
    return p;
}

Rational evaluate_zero_insertions(int g, int n, int m, const MuTuple& mu) {
    if (static_cast<int>(mu.size()) != n) throw std::domain_error("tuple length mismatch");
    for (long v : mu)
        if (v < 1) throw std::domain_error("zero insertion needs positive parts");
    long tot = 0;
    for (long v : mu) tot += v;
    Rational acc = b_big(g, mu);
    for (int k = 1; k <= m; ++k)
        acc *= Rational(tot - 2 * g + 2 - (n + k - 1)) / 2;
    return acc;
}

std::pair<Rational, Rational> divisor_dilaton_residuals(int g, int n, const MuTuple& mu) {
    long tot = 0;
    for (long v : mu) tot += v;
    MuTuple one_mu{1};
    one_mu.insert(one_mu.end(), mu.begin(), mu.end());
    Rational b1 = b_big(g, one_mu);
    Rational b0 = evaluate_zero_insertions(g, n, 1, mu);
    Rational base = b_big(g, mu);
    Rational divisor = (g == 0) ? (b1 - Rational(tot) * base) : Rational(0);
    Rational dilaton = (b1 - b0) - Rational(tot + 2 * g - 2 + n) / 2 * base;
    return {divisor, dilaton};
}

std::pair<Rational, Rational> euler_char_probe(int g) {
    if (g < 1) throw std::domain_error("euler_char_probe: g >= 1");
    MPoly p = structure_polynomial(g, 1);
    Rational b0 = p.evaluate({Rational(0)}) * c_factor(g, 0);
    return {b0, zeta_negative_odd(g)};
}

}  // namespace dessins

}  // namespace irrec
