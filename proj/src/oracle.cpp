#include "irrec/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace irrec {
namespace oracle {

Limits& limits() {
    static Limits l;
    return l;
}

namespace {

using Perm = std::vector<int>;

long cycle_count(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    long c = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) seen[j] = true;
    }
    return c;
}

bool has_fixed_point(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) return true;
    return false;
}

bool transitive2(const Perm& a, const Perm& b) {
    const size_t n = a.size();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t covered = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j : {static_cast<size_t>(a[i]), static_cast<size_t>(b[i])}) {
            if (!seen[j]) {
                seen[j] = true;
                ++covered;
                stack.push_back(j);
            }
        }
    }
    return covered == n;
}

// Canonical permutation with labelled cycles of the given lengths, cycle i on
// a contiguous block of points.
Perm canonical_cycles(const MuTuple& lengths) {
    long total = 0;
    for (long l : lengths) total += l;
    Perm phi(static_cast<size_t>(total));
    long base = 0;
    for (long l : lengths) {
        for (long k = 0; k < l; ++k)
            phi[static_cast<size_t>(base + k)] = static_cast<int>(base + (k + 1) % l);
        base += l;
    }
    return phi;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return q;
}

Perm nth_permutation(long d, long idx) {
    std::vector<int> avail(static_cast<size_t>(d));
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<long> fact(static_cast<size_t>(d) + 1, 1);
    for (long i = 1; i <= d; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
    Perm p;
    for (long i = d - 1; i >= 0; --i) {
        long f = fact[static_cast<size_t>(i)];
        long k = idx / f;
        idx %= f;
        p.push_back(avail[static_cast<size_t>(k)]);
        avail.erase(avail.begin() + k);
    }
    return p;
}

// Enumerate sigma0 over S_d with sigma1 := sigma0^{-1} phi^{-1}, so that
// (sigma0 sigma1)^{-1} equals the canonical labelled face permutation phi.
// This is the all-labelings / d! convention after quotienting by
// conjugation; the count divides by prod(mu_i) instead.
std::map<int, Rational> dessin_enumerate(const MuTuple& mu, bool pruned, int threads) {
    long d = 0;
    const long n = static_cast<long>(mu.size());
    for (long m : mu) {
        if (m < 1) throw std::domain_error("oracle: parts must be >= 1");
        d += m;
    }
    if (d > limits().dessin_dmax) throw std::domain_error("oracle: size limit exceeded");
    const Perm phi_inv = inverse(canonical_cycles(mu));
    long total = 1;
    for (long i = 2; i <= d; ++i) total *= i;
    const int nthreads = static_cast<int>(std::max<long>(1, std::min<long>(threads, total)));
    const long chunk = (total + nthreads - 1) / nthreads;
    std::vector<std::vector<long>> hists(static_cast<size_t>(nthreads));
    auto run_chunk = [&](long lo, long hi, std::vector<long>& hist) {
        Perm sigma0 = nth_permutation(d, lo);
        Perm sigma1(static_cast<size_t>(d));
        for (long it = lo; it < hi; ++it) {
            // sigma1 = sigma0^{-1} * phi_inv : i -> sigma0^{-1}(phi_inv(i))
            Perm s0inv = inverse(sigma0);
            for (size_t i = 0; i < sigma1.size(); ++i)
                sigma1[i] = s0inv[static_cast<size_t>(phi_inv[i])];
            bool ok = true;
            if (pruned && (has_fixed_point(sigma0) || has_fixed_point(sigma1))) ok = false;
            if (ok && transitive2(sigma0, sigma1)) {
                long c0 = cycle_count(sigma0), c1 = cycle_count(sigma1);
                long twice_g = 2 - n + d - c0 - c1;
                if (twice_g >= 0 && twice_g % 2 == 0) {
                    size_t g = static_cast<size_t>(twice_g / 2);
                    if (hist.size() <= g) hist.resize(g + 1, 0);
                    hist[g] += 1;
                }
            }
            std::next_permutation(sigma0.begin(), sigma0.end());
        }
    };
    if (nthreads == 1) {
        run_chunk(0, total, hists[0]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) {
            long lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, t] { run_chunk(lo, hi, hists[static_cast<size_t>(t)]); });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<long> hist;  // merged in fixed chunk order
    for (const auto& h : hists) {
        if (h.size() > hist.size()) hist.resize(h.size(), 0);
        for (size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
    }
    Rational weight = 1;
    for (long m : mu) weight /= Rational(m);
    std::map<int, Rational> out;
    for (size_t g = 0; g < hist.size(); ++g)
        if (hist[g] != 0) out[static_cast<int>(g)] = Rational(hist[g]) * weight;
    return out;
}

// Enumerate fixed-point-free involutions via recursive pairing.
void for_each_involution(std::vector<int>& eps, std::vector<bool>& used, size_t npoints,
                         const std::function<void(const Perm&)>& visit) {
    size_t first = npoints;
    for (size_t i = 0; i < npoints; ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first == npoints) {
        visit(eps);
        return;
    }
    used[first] = true;
    for (size_t j = first + 1; j < npoints; ++j) {
        if (used[j]) continue;
        used[j] = true;
        eps[first] = static_cast<int>(j);
        eps[j] = static_cast<int>(first);
        for_each_involution(eps, used, npoints, visit);
        used[j] = false;
    }
    used[first] = false;
}

}  // namespace

std::map<int, Rational> dessins_brute(const MuTuple& mu, int threads) {
    return dessin_enumerate(mu, false, threads);
}

std::map<int, Rational> pruned_brute(const MuTuple& mu, int threads) {
    return dessin_enumerate(mu, true, threads);
}

std::map<int, Rational> fatgraphs_brute(const MuTuple& lengths, bool pruned, int threads) {
    (void)threads;  // (2e-1)!! cases at the default limit; a single thread is instant
    long darts = 0;
    const long n = static_cast<long>(lengths.size());
    for (long l : lengths) {
        if (l < 1) throw std::domain_error("oracle: lengths must be >= 1");
        darts += l;
    }
    if (darts % 2 != 0) return {};
    if (darts / 2 > limits().fatgraph_emax) throw std::domain_error("oracle: size limit exceeded");
    const Perm phi = canonical_cycles(lengths);
    std::vector<long> hist;
    Perm eps(static_cast<size_t>(darts));
    std::vector<bool> used(static_cast<size_t>(darts), false);
    for_each_involution(eps, used, static_cast<size_t>(darts), [&](const Perm& e) {
        // nu = phi * eps (faces of nu*eps are the cycles of phi)
        Perm nu(e.size());
        for (size_t i = 0; i < e.size(); ++i) nu[i] = phi[static_cast<size_t>(e[i])];
        if (pruned && has_fixed_point(nu)) return;
        if (!transitive2(nu, e)) return;
        long v = cycle_count(nu);
        long twice_g = 2 - v + darts / 2 - n;
        if (twice_g >= 0 && twice_g % 2 == 0) {
            size_t g = static_cast<size_t>(twice_g / 2);
            if (hist.size() <= g) hist.resize(g + 1, 0);
            hist[g] += 1;
        }
    });
    Rational weight = 1;
    for (long l : lengths) weight /= Rational(l);
    std::map<int, Rational> out;
    for (size_t g = 0; g < hist.size(); ++g)
        if (hist[g] != 0) out[static_cast<int>(g)] = Rational(hist[g]) * weight;
    return out;
}

Rational disconnected_brute(long v, long e) {
    if (e < 1 || e > 7) throw std::domain_error("oracle: size limit exceeded");
    // histogram of cycle counts over S_e by explicit enumeration
    static std::map<long, std::vector<long>> cache;
    auto it = cache.find(e);
    if (it == cache.end()) {
        std::vector<long> cnt(static_cast<size_t>(e) + 1, 0);
        Perm p(static_cast<size_t>(e));
        std::iota(p.begin(), p.end(), 0);
        do {
            cnt[static_cast<size_t>(cycle_count(p))] += 1;
        } while (std::next_permutation(p.begin(), p.end()));
        it = cache.emplace(e, std::move(cnt)).first;
    }
    const auto& cnt = it->second;
    Integer pairs = 0;
    for (long a = 1; a <= e; ++a) {
        long b = v - a;
        if (b >= 1 && b <= e) pairs += Integer(cnt[static_cast<size_t>(a)]) * Integer(cnt[static_cast<size_t>(b)]);
    }
    return ratio(pairs, factorial(e));
}

Rational connected_brute(long v, long e) {
    if (e < 1 || e > 6) throw std::domain_error("oracle: size limit exceeded");
    Perm p(static_cast<size_t>(e)), q(static_cast<size_t>(e));
    std::iota(p.begin(), p.end(), 0);
    long hits = 0;
    do {
        std::iota(q.begin(), q.end(), 0);
        do {
            if (cycle_count(p) + cycle_count(q) == v && transitive2(p, q)) ++hits;
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p.begin(), p.end()));
    return ratio(Integer(hits), factorial(e));
}

void calibrate() {
    static bool done = false;
    if (done) return;
    auto b01 = dessins_brute({2});
    if (b01.size() != 1 || b01.begin()->first != 0 || b01.begin()->second != 1)
        throw std::runtime_error("oracle calibration failed: B_{0,1}(2) != 1");
    auto b03 = dessins_brute({1, 1, 1});
    if (b03.size() != 1 || b03.begin()->first != 0 || b03.begin()->second != 2)
        throw std::runtime_error("oracle calibration failed: B_{0,3}(1,1,1) != 2");
    auto n02 = fatgraphs_brute({2, 2}, true);
    if (n02.at(0) != ratio(1, 2))
        throw std::runtime_error("oracle calibration failed: N_{0,2}(2,2) != 1/2");
    auto n03 = fatgraphs_brute({2, 2, 2}, true);
    if (n03.at(0) != 1)
        throw std::runtime_error("oracle calibration failed: N_{0,3}(2,2,2) != 1");
    done = true;
}

}  // namespace oracle
}  // namespace irrec
