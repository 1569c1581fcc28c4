#include "twobridge/sturm.hpp"

#include <algorithm>

namespace twobridge {

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& seq, const Bound& x, bool upper) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const Poly& p : seq) {
        if (x) {
            signs.push_back(sgn(p.eval(*x)));
        } else {
            int s = sgn(p.leading());
            if (!upper && p.degree() % 2 != 0) s = -s;
            signs.push_back(s);
        }
    }
    return variations(signs);
}

}  // namespace

EndpointIsRoot::EndpointIsRoot(Rational at)
    : std::domain_error("interval endpoint " + rational_str(at) + " is a root"), at_(std::move(at)) {}

std::vector<Poly> sturm_sequence(const Poly& a) {
    std::vector<Poly> seq;
    if (a.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    seq.push_back(a);
    Poly d = a.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        Poly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        // Positive rescaling keeps signs and tames coefficient growth.
        Rational lc = abs(r.leading());
        seq.push_back(r * (1 / lc));
    }
    return seq;
}

int sturm_count(const Poly& a, const Bound& lo, const Bound& hi) {
    if (lo && a.eval(*lo) == 0) throw EndpointIsRoot(*lo);
    if (hi && a.eval(*hi) == 0) throw EndpointIsRoot(*hi);
    if (lo && hi && *lo >= *hi) return 0;
    const auto seq = sturm_sequence(a);
    return variations_at(seq, lo, false) - variations_at(seq, hi, true);
}

Rational root_bound(const Poly& a) {
    Rational m = 0;
    const Rational lc = abs(a.leading());
    for (long i = 0; i < a.degree(); ++i) m = std::max(m, Rational(abs(a.coeffs()[static_cast<std::size_t>(i)]) / lc));
    // Round up to a power of two so endpoints stay short.
    Rational b = 1;
    while (b < m + 1) b *= 2;
    return b;
}

namespace {

// A point strictly between lo and hi that is not a root of a.
Rational split_point(const Poly& a, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    Rational step = (hi - lo) / 4;
    while (a.eval(mid) == 0) {
        mid += step;  // stays inside (mid, hi); a has finitely many roots
        step /= 2;
    }
    return mid;
}

void isolate(const Poly& a, const std::vector<Poly>& seq, const Rational& lo, int vlo, const Rational& hi, int vhi,
             std::vector<RootInterval>& out) {
    const int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = split_point(a, lo, hi);
    const int vmid = variations_at(seq, mid, false);
    isolate(a, seq, lo, vlo, mid, vmid, out);
    isolate(a, seq, mid, vmid, hi, vhi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    if (a.degree() < 1) return out;
    const auto seq = sturm_sequence(a);
    const Rational b = root_bound(a);
    isolate(a, seq, -b, variations_at(seq, Rational(-b), false), b, variations_at(seq, b, false), out);
    return out;
}

RootInterval refine_root(const Poly& a, RootInterval iv, const Rational& width) {
    int slo = sgn(a.eval(iv.lo));
    while (iv.width() >= width) {
        const Rational mid = iv.midpoint();
        const int sm = sgn(a.eval(mid));
        if (sm == 0) {
            // Rational root: any interval around mid inside iv isolates it.
            const Rational r = std::min(width, iv.width()) / 4;
            return {mid - r, mid + r};
        }
        if (sm == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
        slo = sgn(a.eval(iv.lo));
    }
    return iv;
}

std::string decimal_str(const Rational& x, int digits) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = abs(x) * scale + Rational(1, 2);
    Integer n = scaled.get_num() / scaled.get_den();  // floor, nonnegative
    std::string s = n.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (x < 0 && n != 0) s.insert(0, "-");
    return s;
}

}  // namespace twobridge
