#include "doctest.h"

#include "irrec/dessins.hpp"
#include "irrec/oracle.hpp"
#include "irrec/quantum.hpp"

using namespace irrec;
using namespace irrec::oracle;

namespace {
void partitions_into(long total, int n, MuTuple cur, std::vector<MuTuple>& out) {
    if (n == 1) {
        if (total >= 1 && (cur.empty() || total <= cur.back())) {
            cur.push_back(total);
            out.push_back(cur);
        }
        return;
    }
    long hi = cur.empty() ? total : cur.back();
    for (long p = std::min(hi, total - (n - 1)); p >= 1; --p) {
        MuTuple next = cur;
        next.push_back(p);
        partitions_into(total - p, n - 1, next, out);
    }
}
std::vector<MuTuple> all_partitions_upto(long max_total) {
    std::vector<MuTuple> out;
    for (long tot = 1; tot <= max_total; ++tot)
        for (int n = 1; n <= tot; ++n) partitions_into(tot, n, {}, out);
    return out;
}
}  // namespace

TEST_CASE("calibration") { oracle::calibrate(); }

TEST_CASE("single edge and small dessins") {
    auto c1 = dessins_brute({1});
    CHECK(c1.size() == 1);
    CHECK(c1.at(0) == 1);
    auto c3 = dessins_brute({3});
    CHECK(c3.at(0) == dessins::b_big(0, {3}));
    CHECK(c3.at(1) == ratio(1, 3));  // B_{1,1}(3)
    auto p3 = pruned_brute({3});
    CHECK(p3.count(0) == 0);
    CHECK(p3.at(1) == ratio(1, 3));  // theta graph, |Aut| = 3
    auto p111 = pruned_brute({1, 1, 1});
    CHECK(p111.at(0) == 2);
    auto p1 = pruned_brute({1});
    CHECK(p1.empty());
}

TEST_CASE("full sweep against the cut-and-join recursion") {
    for (const auto& mu : all_partitions_upto(6)) {
        auto counts = dessins_brute(mu);
        for (int g = 0; g <= 3; ++g) {
            Rational expect = dessins::b_big(g, mu);
            Rational got = counts.count(g) ? counts.at(g) : Rational(0);
            CAPTURE(mu);
            CAPTURE(g);
            CHECK(expect == got);
        }
    }
}

TEST_CASE("threaded enumeration is deterministic") {
    for (int threads : {1, 2, 3, 5}) {
        auto counts = dessins_brute({3, 2}, threads);
        CHECK(counts.at(0) == dessins::b_big(0, {3, 2}));
        CHECK(counts.at(1) == dessins::b_big(1, {3, 2}));
    }
}

TEST_CASE("disconnected counts match the stirling formula") {
    for (long e = 1; e <= 6; ++e)
        for (long v = 1; v <= 2 * e + 1; ++v)
            CHECK(disconnected_brute(v, e) == quantum::f_bullet(v, e));
    CHECK(disconnected_brute(3, 2) == 1);
    CHECK(disconnected_brute(4, 2) == ratio(1, 2));
    // f(2e, e): both permutations are the identity
    for (long e = 1; e <= 6; ++e) CHECK(disconnected_brute(2 * e, e) == ratio(Integer(1), factorial(e)));
}

TEST_CASE("connected/disconnected exponential relation at oracle scale") {
    const long E = 5;
    std::vector<std::vector<Rational>> f(static_cast<size_t>(2 * E + 1),
                                         std::vector<Rational>(static_cast<size_t>(E + 1), Rational(0)));
    for (long e = 1; e <= E; ++e)
        for (long v = 1; v <= 2 * e; ++v) f[static_cast<size_t>(v)][static_cast<size_t>(e)] = connected_brute(v, e);
    std::vector<std::vector<Rational>> expf(static_cast<size_t>(2 * E + 1),
                                            std::vector<Rational>(static_cast<size_t>(E + 1), Rational(0)));
    expf[0][0] = 1;
    auto mul = [&](const std::vector<std::vector<Rational>>& A,
                   const std::vector<std::vector<Rational>>& B) {
        std::vector<std::vector<Rational>> C(static_cast<size_t>(2 * E + 1),
                                             std::vector<Rational>(static_cast<size_t>(E + 1), Rational(0)));
        for (long va = 0; va <= 2 * E; ++va)
            for (long ea = 0; ea <= E; ++ea) {
                if (A[static_cast<size_t>(va)][static_cast<size_t>(ea)] == 0) continue;
                for (long vb = 0; va + vb <= 2 * E; ++vb)
                    for (long eb = 0; ea + eb <= E; ++eb) {
                        if (B[static_cast<size_t>(vb)][static_cast<size_t>(eb)] == 0) continue;
                        C[static_cast<size_t>(va + vb)][static_cast<size_t>(ea + eb)] +=
                            A[static_cast<size_t>(va)][static_cast<size_t>(ea)] *
                            B[static_cast<size_t>(vb)][static_cast<size_t>(eb)];
                    }
            }
        return C;
    };
    std::vector<std::vector<Rational>> power = expf;  // F^0
    Rational kfact = 1;
    for (long k = 1; k <= E; ++k) {
        power = mul(power, f);
        kfact *= k;
        for (long v = 0; v <= 2 * E; ++v)
            for (long e = 0; e <= E; ++e)
                expf[static_cast<size_t>(v)][static_cast<size_t>(e)] +=
                    power[static_cast<size_t>(v)][static_cast<size_t>(e)] / kfact;
    }
    for (long e = 1; e <= E; ++e)
        for (long v = 1; v <= 2 * e; ++v)
            CHECK(expf[static_cast<size_t>(v)][static_cast<size_t>(e)] == disconnected_brute(v, e));
}

TEST_CASE("fatgraph counts and the bipartite inequality") {
    for (const auto& mu : all_partitions_upto(3)) {
        MuTuple doubled;
        for (long v : mu) doubled.push_back(2 * v);
        auto m_cnt = fatgraphs_brute(doubled, false);
        auto b_cnt = dessins_brute(mu);
        for (int g = 0; g <= 2; ++g) {
            Rational m_val = m_cnt.count(g) ? m_cnt.at(g) : Rational(0);
            Rational b_val = b_cnt.count(g) ? b_cnt.at(g) : Rational(0);
            CAPTURE(mu);
            CAPTURE(g);
            CHECK(b_val <= Rational(2) * m_val);
            if (g == 0) CHECK(b_val == Rational(2) * m_val);
        }
    }
    CHECK_THROWS(dessins_brute({8}));
    CHECK_THROWS(fatgraphs_brute({14}, false));
}
