#include "qsl/sturm.hpp"

#include <algorithm>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

IntPoly stripped(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Scale a rational-coefficient polynomial to a primitive integer polynomial
// by a positive rational factor (keeps signs everywhere on the real line).
IntPoly primitive_scale(const std::vector<Rat>& p) {
    Int lcm_den = 1;
    for (const auto& c : p) {
        Int den = denominator(c);
        lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    IntPoly z;
    z.reserve(p.size());
    for (const auto& c : p) {
        Rat scaled = c * Rat(lcm_den);
        z.push_back(numerator(scaled));
    }
    Int content = 0;
    for (const auto& c : z) content = gcd(content, c);
    if (content > 1)
        for (auto& c : z) c /= content;
    return stripped(std::move(z));
}

// Euclidean remainder over the rationals.
std::vector<Rat> rat_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<Rat> to_rat(const IntPoly& p) {
    std::vector<Rat> out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c);
    return out;
}

int sign_of(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

// Sign-variation count of the chain at t, zeros skipped.
int variations_at(const std::vector<IntPoly>& chain, const Rat& t) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Exact synthetic division by (x - r); requires r to be a root.
IntPoly deflate_root(const IntPoly& p, const Rat& r) {
    std::vector<Rat> q(p.size() >= 1 ? p.size() - 1 : 0);
    Rat carry = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        carry = Rat(p[i]) + carry * r;
        q[i - 1] = carry;
    }
    return primitive_scale(q);
}

// Distinct roots strictly between a and b, assuming neither endpoint is a
// root (classical Sturm statement).
int open_interval_count(const IntPoly& p, const Rat& a, const Rat& b) {
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

}  // namespace

int poly_degree(const IntPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

IntPoly poly_derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(i));
    return stripped(std::move(d));
}

Int poly_eval(const IntPoly& p, const Int& t) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

int sign_at(const IntPoly& p, const Rat& t) {
    int d = poly_degree(p);
    if (d < 0) return 0;
    Int num = numerator(t), den = denominator(t);  // den > 0 in boost's normal form
    Int acc = 0, den_pow = 1;
    for (int i = d; i >= 0; --i) {
        acc = acc * num + p[i] * den_pow;
        den_pow *= den;
    }
    return sign_of(acc);
}

Rat cauchy_root_bound(const IntPoly& p) {
    int d = poly_degree(p);
    if (d < 0) throw domain_error("root bound of the zero polynomial");
    Rat maxratio = 0;
    for (int i = 0; i < d; ++i) {
        Rat r = Rat(abs(p[i]), abs(p[d]));
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 2;  // strictly beyond every root
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    IntPoly p0 = stripped(p);
    if (poly_degree(p0) < 0) throw domain_error("Sturm chain of the zero polynomial");
    chain.push_back(p0);
    if (poly_degree(p0) == 0) return chain;
    chain.push_back(poly_derivative(p0));
    for (;;) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        auto rem = rat_rem(to_rat(a), to_rat(b));
        if (rem.empty()) break;
        for (auto& c : rem) c = -c;
        chain.push_back(primitive_scale(rem));
        if (poly_degree(chain.back()) == 0) break;
    }
    return chain;
}

int count_real_roots_in(const IntPoly& p, const Rat& a, const Rat& b,
                        bool include_a, bool include_b) {
    if (a > b) throw domain_error("interval endpoints out of order");
    IntPoly q = stripped(p);
    if (poly_degree(q) < 0) throw domain_error("root count of the zero polynomial");
    if (a == b) return (include_a && include_b && sign_at(q, a) == 0) ? 1 : 0;
    int extra = 0;
    if (sign_at(q, a) == 0) {
        if (include_a) extra += 1;
        while (poly_degree(q) > 0 && sign_at(q, a) == 0) q = deflate_root(q, a);
    }
    if (sign_at(q, b) == 0) {
        if (include_b) extra += 1;
        while (poly_degree(q) > 0 && sign_at(q, b) == 0) q = deflate_root(q, b);
    }
    if (poly_degree(q) == 0) return extra;
    return open_interval_count(q, a, b) + extra;
}

bool has_root_above(const IntPoly& p, const Rat& t) {
    IntPoly q = stripped(p);
    if (poly_degree(q) < 0) throw domain_error("root query on the zero polynomial");
    Rat bound = cauchy_root_bound(q);
    if (t >= bound) return false;
    return count_real_roots_in(q, t, bound, false, true) >= 1;
}

double largest_real_root(const IntPoly& p, double tol) {
    if (tol < 1e-12) throw domain_error("tolerance below 1e-12 is not supported");
    IntPoly q = stripped(p);
    if (poly_degree(q) < 1) throw domain_error("polynomial has no real root");
    Rat bound = cauchy_root_bound(q);
    Rat lo = -bound, hi = bound;
    if (count_real_roots_in(q, lo, hi, false, true) == 0)
        throw domain_error("polynomial has no real root");
    Rat width_target(tol);
    // Invariant: the largest real root lies in (lo, hi].
    while (hi - lo > width_target) {
        Rat mid = (lo + hi) / 2;
        if (sign_at(q, mid) == 0 && count_real_roots_in(q, mid, hi, false, true) == 0)
            return to_double(mid);  // bisection landed exactly on the largest root
        if (count_real_roots_in(q, mid, hi, false, true) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return to_double((lo + hi) / 2);
}

}  // namespace qsl
