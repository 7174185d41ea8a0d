#include "hirz/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hirz {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int deg) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

int UPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational UPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& k) const {
    if (k == 0) return {};
    UPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

UPoly UPoly::pow(int k) const {
    UPoly r(1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / lead());
}

UPoly UPoly::shift(const Rational& a) const { return compose(UPoly({a, 1})); }

UPoly UPoly::compose(const UPoly& q) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UPoly(*it);
    return acc;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::string cs = to_string(abs(c));
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (i == 0) {
            s += cs;
        } else {
            if (abs(c) != 1) s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const Rational inv = Rational(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = r[static_cast<std::size_t>(i)] * inv;
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.monic();
    UPoly g = gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

int distinct_root_count(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
    return squarefree_part(p).degree();
}

namespace {

// Integer primitive multiple of p, as rationals with denominator 1.
UPoly primitive_integer(const UPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    Integer g = 0;
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) {
        Integer z = c.get_num() * (l / c.get_den());
        g = gcd(g, z);
        v.emplace_back(z);
    }
    if (g != 0)
        for (auto& c : v) c /= Rational(g);
    return UPoly(std::move(v));
}

int variations(const std::vector<UPoly>& seq, const Rational& t) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
        int sg = sgn(s(t));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

// The rational of smallest denominator in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
    return Rational(fl) + Rational(1) / inner;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p0) {
    if (p0.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
    std::vector<Rational> roots;
    UPoly p = squarefree_part(p0);
    if (p.degree() <= 0) return roots;
    if (p.coeff(0) == 0) {
        roots.emplace_back(0);
        p = exact_div(p, UPoly::x());
    }
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    if (p.degree() <= 0) return roots;

    UPoly ip = primitive_integer(p);
    const Integer lead = abs(ip.lead().get_num());
    // Two distinct rationals with denominators dividing `lead` are at least 1/lead^2 apart.
    const Rational width(Integer(1), lead * lead * 2);

    std::vector<UPoly> sturm{ip, ip.derivative()};
    while (true) {
        UPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
        if (r.is_zero()) break;
        sturm.push_back(primitive_integer(-r));
    }

    Rational bound = 0;
    for (const auto& c : ip.coeffs()) bound = std::max(bound, Rational(abs(c / ip.lead())));
    bound += 1;

    std::function<void(Rational, Rational, int)> isolate = [&](Rational lo, Rational hi, int n) {
        // Invariant: lo and hi are not roots; n roots lie in (lo, hi).
        if (n == 0) return;
        if (n == 1 && hi - lo < width) {
            Rational s = simplest_between(lo, hi);
            if (ip(s) == 0) roots.push_back(s);
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (ip(mid) == 0) {
            roots.push_back(mid);
            Rational eps = (hi - lo) / 4;
            while (ip(mid - eps) == 0 || ip(mid + eps) == 0 ||
                   variations(sturm, mid - eps) - variations(sturm, mid + eps) != 1)
                eps /= 2;
            Rational a = mid - eps, b = mid + eps;
            isolate(lo, a, variations(sturm, lo) - variations(sturm, a));
            isolate(b, hi, variations(sturm, b) - variations(sturm, hi));
            return;
        }
        isolate(lo, mid, variations(sturm, lo) - variations(sturm, mid));
        isolate(mid, hi, variations(sturm, mid) - variations(sturm, hi));
    };
    isolate(-bound, bound, variations(sturm, -bound) - variations(sturm, bound));
    std::sort(roots.begin(), roots.end());
    return roots;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly acc;
    for (std::size_t k = n; k-- > 0;) acc = acc * UPoly({-xs[k], 1}) + UPoly(dd[k]);
    return acc;
}

Rational resultant(const UPoly& a0, const UPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return 0;
    UPoly a = a0, b = b0;
    Rational acc = 1;
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) {
            Rational r = 1;
            for (int i = 0; i < da; ++i) r *= b.lead();
            return acc * r;
        }
        if (da == 0) {
            Rational r = 1;
            for (int i = 0; i < db; ++i) r *= a.lead();
            return acc * r;
        }
        UPoly r = divmod(a, b).second;
        if (r.is_zero()) return 0;
        // res(a,b) = (-1)^{da db} lc(b)^{da - deg r} res(b, r)
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        for (int i = 0; i < da - r.degree(); ++i) acc *= b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

int BinaryForm::distinct_root_count() const {
    if (is_zero()) throw std::domain_error("zero binary form");
    return hirz::distinct_root_count(p) + (infinity_multiplicity() > 0 ? 1 : 0);
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    UPoly g = gcd(a.p, b.p);
    int inf = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
    return {g.degree() + inf, g};
}

}  // namespace hirz
