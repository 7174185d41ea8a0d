#include "hirz/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hirz {

BPoly::BPoly(Terms t) : t_(std::move(t)) {
    for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
}

BPoly::BPoly(const Rational& c) {
    if (c != 0) t_[{0, 0}] = c;
}

BPoly BPoly::x() { return monomial(1, 1, 0); }
BPoly BPoly::y() { return monomial(1, 0, 1); }

BPoly BPoly::monomial(const Rational& c, int a, int b) {
    BPoly r;
    if (c != 0) r.t_[{a, b}] = c;
    return r;
}

Rational BPoly::coeff(int a, int b) const {
    auto it = t_.find({a, b});
    return it == t_.end() ? Rational(0) : it->second;
}

int BPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
}

int BPoly::order() const {
    if (t_.empty()) return -1;
    int d = t_.begin()->first.first + t_.begin()->first.second;
    for (const auto& [e, c] : t_) d = std::min(d, e.first + e.second);
    return d;
}

int BPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
}

int BPoly::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
}

BPoly BPoly::homogeneous_part(int d) const {
    Terms r;
    for (const auto& [e, c] : t_)
        if (e.first + e.second == d) r[e] = c;
    return BPoly(std::move(r));
}

Rational BPoly::operator()(const Rational& x0, const Rational& y0) const {
    return at_x(x0)(y0);
}

BPoly BPoly::operator+(const BPoly& o) const {
    Terms r = t_;
    for (const auto& [e, c] : o.t_) r[e] += c;
    return BPoly(std::move(r));
}

BPoly BPoly::operator-(const BPoly& o) const { return *this + (-o); }

BPoly BPoly::operator-() const {
    BPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

BPoly BPoly::operator*(const BPoly& o) const {
    Terms r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
    return BPoly(std::move(r));
}

BPoly BPoly::operator*(const Rational& k) const {
    if (k == 0) return {};
    BPoly r = *this;
    for (auto& [e, c] : r.t_) c *= k;
    return r;
}

BPoly BPoly::pow(int k) const {
    BPoly r(1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

BPoly BPoly::dx() const {
    Terms r;
    for (const auto& [e, c] : t_)
        if (e.first > 0) r[{e.first - 1, e.second}] = c * e.first;
    return BPoly(std::move(r));
}

BPoly BPoly::dy() const {
    Terms r;
    for (const auto& [e, c] : t_)
        if (e.second > 0) r[{e.first, e.second - 1}] = c * e.second;
    return BPoly(std::move(r));
}

BPoly BPoly::translate(const Rational& a, const Rational& b) const {
    if (a == 0 && b == 0) return *this;
    // Expand (x+a)^i (y+b)^j through the univariate shift on each variable.
    std::vector<UPoly> ys = as_poly_in_y();
    std::vector<UPoly> shifted_coeffs;
    shifted_coeffs.reserve(ys.size());
    for (const auto& c : ys) shifted_coeffs.push_back(c.shift(a));
    BPoly r;
    const UPoly yb({b, 1});
    for (std::size_t j = 0; j < shifted_coeffs.size(); ++j) {
        if (shifted_coeffs[j].is_zero()) continue;
        UPoly pw = yb.pow(static_cast<int>(j));
        for (int k = 0; k <= pw.degree(); ++k) {
            Rational ck = pw.coeff(k);
            if (ck == 0) continue;
            const auto& cx = shifted_coeffs[j].coeffs();
            for (std::size_t i = 0; i < cx.size(); ++i)
                if (cx[i] != 0) r.t_[{static_cast<int>(i), k}] += cx[i] * ck;
        }
    }
    return BPoly(std::move(r.t_));
}

BPoly BPoly::mul_monomial(int a, int b) const {
    Terms r;
    for (const auto& [e, c] : t_) r[{e.first + a, e.second + b}] = c;
    return BPoly(std::move(r));
}

BPoly BPoly::div_monomial(int a, int b) const {
    Terms r;
    for (const auto& [e, c] : t_) {
        if (e.first < a || e.second < b) throw std::logic_error("div_monomial: term not divisible");
        r[{e.first - a, e.second - b}] = c;
    }
    return BPoly(std::move(r));
}

BPoly BPoly::blowup_x_chart() const {
    Terms r;
    for (const auto& [e, c] : t_) r[{e.first + e.second, e.second}] = c;
    return BPoly(std::move(r));
}

BPoly BPoly::blowup_y_chart() const {
    Terms r;
    for (const auto& [e, c] : t_) r[{e.first, e.first + e.second}] = c;
    return BPoly(std::move(r));
}

UPoly BPoly::at_y(const Rational& y0) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1);
    for (const auto& [e, c] : t_) {
        Rational p = c;
        for (int k = 0; k < e.second; ++k) p *= y0;
        v[static_cast<std::size_t>(e.first)] += p;
    }
    return UPoly(std::move(v));
}

UPoly BPoly::at_x(const Rational& x0) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1);
    for (const auto& [e, c] : t_) {
        Rational p = c;
        for (int k = 0; k < e.first; ++k) p *= x0;
        v[static_cast<std::size_t>(e.second)] += p;
    }
    return UPoly(std::move(v));
}

std::vector<UPoly> BPoly::as_poly_in_y() const {
    const int dy = degree_y();
    if (dy < 0) return {};
    std::vector<std::vector<Rational>> cs(static_cast<std::size_t>(dy) + 1);
    for (const auto& [e, c] : t_) {
        auto& v = cs[static_cast<std::size_t>(e.second)];
        if (v.size() <= static_cast<std::size_t>(e.first)) v.resize(static_cast<std::size_t>(e.first) + 1);
        v[static_cast<std::size_t>(e.first)] = c;
    }
    std::vector<UPoly> r;
    r.reserve(cs.size());
    for (auto& v : cs) r.emplace_back(std::move(v));
    return r;
}

BPoly BPoly::from_poly_in_y(const std::vector<UPoly>& cs) {
    Terms r;
    for (std::size_t j = 0; j < cs.size(); ++j) {
        const auto& v = cs[j].coeffs();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) r[{static_cast<int>(i), static_cast<int>(j)}] = v[i];
    }
    return BPoly(std::move(r));
}

std::string BPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mon;
        if (e.first > 0) mon += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
        if (e.second > 0) {
            if (!mon.empty()) mon += "*";
            mon += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
        }
        if (mon.empty()) {
            s += to_string(abs(c));
        } else {
            if (abs(c) != 1) s += to_string(abs(c)) + "*";
            s += mon;
        }
    }
    return s;
}

namespace {

using YPoly = std::vector<UPoly>;  // coefficients of y^j in Q[x]

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly content(const YPoly& p) {
    UPoly g;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

YPoly primitive(const YPoly& p) {
    UPoly c = content(p);
    YPoly r;
    for (const auto& a : p) r.push_back(exact_div(a, c));
    trim(r);
    return r;
}

YPoly pseudo_rem(YPoly a, const YPoly& b) {
    const int db = ydeg(b);
    const UPoly& lb = b.back();
    while (!a.empty() && ydeg(a) >= db) {
        const int shift = ydeg(a) - db;
        UPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
        trim(a);
    }
    return a;
}

BPoly normalize(const BPoly& p) {
    if (p.is_zero()) return p;
    // Leading term: highest y-degree, then highest x-degree.
    const auto* best = &*p.terms().begin();
    for (const auto& t : p.terms())
        if (t.first.second > best->first.second ||
            (t.first.second == best->first.second && t.first.first > best->first.first))
            best = &t;
    return p * (Rational(1) / best->second);
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    YPoly A = a.as_poly_in_y(), B = b.as_poly_in_y();
    UPoly c = gcd(content(A), content(B));
    A = primitive(A);
    B = primitive(B);
    if (ydeg(A) < ydeg(B)) std::swap(A, B);
    while (ydeg(B) > 0) {
        YPoly R = pseudo_rem(A, B);
        if (R.empty()) break;
        A = std::move(B);
        B = primitive(R);
    }
    if (ydeg(B) <= 0) return normalize(BPoly::from_poly_in_y({c}));
    YPoly G;
    for (const auto& t : B) G.push_back(t * c);
    return normalize(BPoly::from_poly_in_y(G));
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    YPoly A = a.as_poly_in_y();
    const YPoly B = b.as_poly_in_y();
    const int db = ydeg(B);
    YPoly Q(static_cast<std::size_t>(std::max(ydeg(A) - db, 0)) + 1);
    while (!A.empty()) {
        const int shift = ydeg(A) - db;
        if (shift < 0) throw std::logic_error("exact_div: not divisible");
        UPoly q = exact_div(A.back(), B.back());
        Q[static_cast<std::size_t>(shift)] += q;
        for (int j = 0; j <= db; ++j) A[static_cast<std::size_t>(j + shift)] -= q * B[static_cast<std::size_t>(j)];
        trim(A);
    }
    return BPoly::from_poly_in_y(Q);
}

bool is_squarefree(const BPoly& f) {
    if (f.is_zero()) return false;
    BPoly g = gcd(f, f.dx());
    g = gcd(g, f.dy());
    return g.total_degree() <= 0;
}

UPoly resultant_y(const BPoly& f, const BPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const YPoly F = f.as_poly_in_y(), G = g.as_poly_in_y();
    const int bound = ydeg(F) * std::max(g.degree_x(), 0) + ydeg(G) * std::max(f.degree_x(), 0);
    std::vector<Rational> xs, ys;
    for (long k = 0; static_cast<int>(xs.size()) < bound + 1; ++k) {
        // 0, 1, -1, 2, -2, ...
        Rational x0 = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
        if (F.back()(x0) == 0 || G.back()(x0) == 0) continue;
        xs.push_back(x0);
        ys.push_back(resultant(f.at_x(x0), g.at_x(x0)));
    }
    return interpolate(xs, ys);
}

}  // namespace hirz
