#include "irrec/poly.hpp"

#include <sstream>

namespace irrec {

namespace {

// Clear denominators and divide by integer content; sign normalized so the
// leading coefficient is positive.
std::vector<Integer> to_primitive_int(const Poly& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> v(p.coeffs().size());
    Integer content = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rational scaled = p.coeffs()[i] * Rational(den_lcm);
        v[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[i].get_mpz_t());
    }
    if (content != 0) {
        if (v.back() < 0) content = -content;
        for (auto& c : v) c /= content;
    }
    return v;
}

void int_trim(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void int_primitive(std::vector<Integer>& v) {
    Integer content = 0;
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 0) return;
    if (v.back() < 0) content = -content;
    for (auto& c : v) c /= content;
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer lead = b.back();
    long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long k = static_cast<long>(a.size()) - 1 - db;
        Integer f = a.back();
        for (auto& c : a) c *= lead;
        for (long i = 0; i <= db; ++i) a[static_cast<size_t>(i + k)] -= f * b[static_cast<size_t>(i)];
        int_trim(a);
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b / b.leading();
    if (b.is_zero()) return a / a.leading();
    std::vector<Integer> u = to_primitive_int(a), v = to_primitive_int(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = pseudo_rem(u, v);
        int_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = Rational(u[i]);
    Poly g{std::move(out)};
    return g.is_zero() ? g : g / g.leading();
}

std::vector<std::pair<Rational, long>> Poly::rational_roots() const {
    std::vector<std::pair<Rational, long>> roots;
    if (is_zero()) return roots;
    Poly p = *this;
    // strip x^k
    long k = 0;
    while (p.coeff(0) == 0 && !p.is_zero()) {
        std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly(shifted);
        ++k;
    }
    if (k > 0) roots.emplace_back(Rational(0), k);
    if (p.degree() <= 0) return roots;
    std::vector<Integer> v = to_primitive_int(p);
    Integer a0 = v.front(), an = v.back();
    auto divisors = [](Integer m) {
        std::vector<Integer> ds;
        if (m < 0) m = -m;
        for (Integer d = 1; d * d <= m; ++d) {
            if (m % d == 0) {
                ds.push_back(d);
                if (d * d != m) ds.push_back(m / d);
            }
        }
        return ds;
    };
    for (const Integer& p0 : divisors(a0)) {
        for (const Integer& q0 : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand = ratio(s * p0, q0);
                long m = p.root_multiplicity(cand);
                if (m > 0) {
                    bool seen = false;
                    for (auto& rm : roots)
                        if (rm.first == cand) seen = true;
                    if (!seen) roots.emplace_back(cand, m);
                }
            }
        }
    }
    return roots;
}

std::string Poly::str(const std::string& var) const { return poly_str(*this, var); }

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        Rational a = abs(c);
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace irrec
