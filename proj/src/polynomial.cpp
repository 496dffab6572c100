#include "coxwl2/polynomial.hpp"

#include "coxwl2/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace coxwl2 {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double UPoly::approx(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (degree() < 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    }
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    Rational lc = leading();
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) {
        c /= lc;
    }
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) {
        c = -c;
    }
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        v[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        v[i] += b.coeffs_[i];
    }
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UPoly(std::move(v));
}

UPoly operator*(const Rational& c, const UPoly& a) {
    std::vector<Rational> v(a.coeffs_);
    for (auto& x : v) {
        x *= c;
    }
    return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (!first) {
            out << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            out << "-";
        }
        first = false;
        if (i == 0 || mag != 1) {
            out << coxwl2::to_string(mag);
            if (i > 0) {
                out << "*";
            }
        }
        if (i > 0) {
            out << var;
            if (i > 1) {
                out << "^" << i;
            }
        }
    }
    return out.str();
}

UDivision divide(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) {
        throw Error("growth", "DivisionByZero", "polynomial division by zero");
    }
    std::vector<Rational> rem(a.coefficients());
    int db = b.degree();
    int da = a.degree();
    if (da < db) {
        return {UPoly{}, a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
    const Rational& lb = b.leading();
    for (int i = da; i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] / lb;
        quot[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divide(x, y).remainder;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() < 1) {
        return p.monic();
    }
    UPoly g = gcd(p, p.derivative());
    return divide(p, g).quotient.monic();
}

std::vector<Rational> power_series(const UPoly& num, const UPoly& den, int terms) {
    if (den.coeff(0) == 0) {
        throw Error("growth", "PoleAtZero", "power series requested at a pole");
    }
    std::vector<Rational> a(static_cast<std::size_t>(std::max(terms, 0)));
    Rational d0 = den.coeff(0);
    for (int k = 0; k < terms; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) {
            acc -= den.coeff(j) * a[static_cast<std::size_t>(k - j)];
        }
        a[static_cast<std::size_t>(k)] = acc / d0;
    }
    return a;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, e, 1);
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int var) const {
    if (terms_.empty()) {
        return -1;
    }
    int d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[static_cast<std::size_t>(var)]);
    }
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) {
        return -1;
    }
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) {
        throw Error("growth", "ArityMismatch", "evaluation point has the wrong number of coordinates");
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[static_cast<std::size_t>(i)] != 0) {
                t *= power(point[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
            }
        }
        total += t;
    }
    return total;
}

UPoly MultiPoly::along_ray(std::span<const Rational> direction) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(total_degree(), 0)) + 1);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        int deg = 0;
        for (int i = 0; i < nvars_; ++i) {
            int k = e[static_cast<std::size_t>(i)];
            if (k != 0) {
                t *= power(direction[static_cast<std::size_t>(i)], k);
                deg += k;
            }
        }
        v[static_cast<std::size_t>(deg)] += t;
    }
    return UPoly(std::move(v));
}

MultiPoly MultiPoly::invert_variables(const Exponents& shift) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            f[i] = shift[i] - e[i];
            assert(f[i] >= 0);
        }
        out.add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (nvars_ == 0 && terms_.empty()) {
        nvars_ = other.nvars_;
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (nvars_ == 0 && terms_.empty()) {
        nvars_ = other.nvars_;
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(std::max(a.nvars_, b.nvars_));
    Exponents e(static_cast<std::size_t>(out.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
    if (c == 0) {
        return MultiPoly(a.nvars_);
    }
    MultiPoly out(a);
    for (auto& [e, x] : out.terms_) {
        x *= c;
    }
    return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        int dx = 0;
        int dy = 0;
        for (int v : x.first) {
            dx += v;
        }
        for (int v : y.first) {
            dy += v;
        }
        if (dx != dy) {
            return dx < dy;
        }
        return x.first > y.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rational mag = abs(c);
        if (!first) {
            out << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            out << "-";
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool need_star = false;
        if (is_const || mag != 1) {
            out << coxwl2::to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (need_star) {
                out << "*";
            }
            out << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) {
                out << "^" << e[i];
            }
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- division and gcd

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_exact_divide(a, b);
    if (!q) {
        throw Error("growth", "InexactDivision", "polynomial division has a remainder");
    }
    return std::move(*q);
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) {
        throw Error("growth", "DivisionByZero", "multivariate division by zero");
    }
    const int n = std::max(a.nvars(), b.nvars());
    MultiPoly quotient(n);
    MultiPoly rem = a;
    const auto& [lead_e, lead_c] = b.leading_term();
    Exponents e(static_cast<std::size_t>(n));
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        for (int i = 0; i < n; ++i) {
            e[static_cast<std::size_t>(i)] = re[static_cast<std::size_t>(i)] - lead_e[static_cast<std::size_t>(i)];
            if (e[static_cast<std::size_t>(i)] < 0) {
                return std::nullopt;
            }
        }
        MultiPoly t = MultiPoly::monomial(n, e, rc / lead_c);
        quotient += t;
        rem -= t * b;
    }
    return quotient;
}

namespace {

int main_variable(const MultiPoly& a, const MultiPoly& b) {
    for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v) {
        if ((v < a.nvars() && a.involves(v)) || (v < b.nvars() && b.involves(v))) {
            return v;
        }
    }
    return -1;
}

bool only_variable(const MultiPoly& p, int v) {
    for (int i = 0; i < p.nvars(); ++i) {
        if (i != v && p.involves(i)) {
            return false;
        }
    }
    return true;
}

UPoly to_upoly(const MultiPoly& p, int v) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1);
    for (const auto& [e, x] : p.terms()) {
        c[static_cast<std::size_t>(e[static_cast<std::size_t>(v)])] += x;
    }
    return UPoly(std::move(c));
}

MultiPoly from_upoly(const UPoly& u, int nvars, int v) {
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for (int k = 0; k <= u.degree(); ++k) {
        e[static_cast<std::size_t>(v)] = k;
        p.add_term(e, u.coeff(k));
    }
    return p;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int v) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1, MultiPoly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        int k = f[static_cast<std::size_t>(v)];
        f[static_cast<std::size_t>(v)] = 0;
        out[static_cast<std::size_t>(k)].add_term(f, c);
    }
    return out;
}

MultiPoly leading_in(const MultiPoly& p, int v) { return coefficients_in(p, v).back(); }

MultiPoly times_var(const MultiPoly& p, int v, int k) {
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        f[static_cast<std::size_t>(v)] += k;
        out.add_term(f, c);
    }
    return out;
}

MultiPoly normalized(const MultiPoly& p) {
    if (p.is_zero()) {
        return p;
    }
    return (Rational(1) / p.leading_term().second) * p;
}

MultiPoly content_in(const MultiPoly& p, int v) {
    auto coeffs = coefficients_in(p, v);
    MultiPoly g(p.nvars());
    for (const auto& c : coeffs) {
        if (c.is_zero()) {
            continue;
        }
        if (c.is_constant()) {
            return MultiPoly::constant(p.nvars(), 1);
        }
        g = g.is_zero() ? normalized(c) : gcd(g, c);
        if (g.is_constant()) {
            return MultiPoly::constant(p.nvars(), 1);
        }
    }
    return g;
}

MultiPoly primitive_in(const MultiPoly& p, int v) {
    MultiPoly c = content_in(p, v);
    return c.is_constant() ? p : exact_divide(p, c);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int v) {
    const int db = b.degree_in(v);
    MultiPoly lb = leading_in(b, v);
    MultiPoly r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        MultiPoly lr = leading_in(r, v);
        r = lb * r - times_var(lr * b, v, dr - db);
    }
    return r;
}

} // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    const int n = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) {
        return normalized(b);
    }
    if (b.is_zero()) {
        return normalized(a);
    }
    const int v = main_variable(a, b);
    if (v < 0) {
        return MultiPoly::constant(n, 1);
    }
    if (only_variable(a, v) && only_variable(b, v)) {
        return normalized(from_upoly(gcd(to_upoly(a, v), to_upoly(b, v)), n, v));
    }
    if (!a.involves(v)) {
        return gcd(a, content_in(b, v));
    }
    if (!b.involves(v)) {
        return gcd(content_in(a, v), b);
    }
    MultiPoly ca = content_in(a, v);
    MultiPoly cb = content_in(b, v);
    MultiPoly c = gcd(ca, cb);
    MultiPoly pa = ca.is_constant() ? a : exact_divide(a, ca);
    MultiPoly pb = cb.is_constant() ? b : exact_divide(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) {
        std::swap(pa, pb);
    }
    MultiPoly g(n);
    while (true) {
        MultiPoly r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) {
            g = primitive_in(pb, v);
            break;
        }
        if (!r.involves(v)) {
            g = MultiPoly::constant(n, 1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_in(r, v);
    }
    return normalized(c * g);
}

UPoly specialize_except(const MultiPoly& p, int keep, std::span<const Rational> point) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(keep), 0)) + 1);
    for (const auto& [e, x] : p.terms()) {
        Rational term = x;
        for (int i = 0; i < p.nvars(); ++i) {
            if (i != keep && e[static_cast<std::size_t>(i)] != 0) {
                term *= power(point[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
            }
        }
        c[static_cast<std::size_t>(e[static_cast<std::size_t>(keep)])] += term;
    }
    return UPoly(std::move(c));
}

bool certainly_coprime(const MultiPoly& a, const MultiPoly& b) {
    const int n = std::max(a.nvars(), b.nvars());
    if (a.is_constant() || b.is_constant()) {
        return true;
    }
    std::vector<Rational> point(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (!a.involves(v) || !b.involves(v)) {
            continue;
        }
        // A common factor g involving v keeps its v-degree under any
        // specialization where the leading coefficients of a and b survive.
        bool decided = false;
        for (int attempt = 0; attempt < 8 && !decided; ++attempt) {
            for (int i = 0; i < n; ++i) {
                point[static_cast<std::size_t>(i)] = Rational(2 * i + 3 + 7 * attempt, i + 2 + attempt);
                point[static_cast<std::size_t>(i)].canonicalize();
            }
            UPoly ua = specialize_except(a, v, point);
            UPoly ub = specialize_except(b, v, point);
            if (ua.degree() != a.degree_in(v) || ub.degree() != b.degree_in(v)) {
                continue;
            }
            if (gcd(ua, ub).degree() > 0) {
                return false;
            }
            decided = true;
        }
        if (!decided) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- MultiRat

MultiRat::MultiRat(MultiPoly numerator)
    : num_(std::move(numerator)), den_(MultiPoly::constant(num_.nvars(), 1)) {}

MultiRat::MultiRat(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    reduce();
}

MultiRat MultiRat::constant(int nvars, const Rational& c) { return MultiRat(MultiPoly::constant(nvars, c)); }

void MultiRat::reduce() {
    if (den_.is_zero()) {
        throw Error("growth", "DivisionByZero", "rational function with zero denominator");
    }
    const int n = std::max(num_.nvars(), den_.nvars());
    if (num_.is_zero()) {
        num_ = MultiPoly(n);
        den_ = MultiPoly::constant(n, 1);
        return;
    }
    if (!den_.is_constant() && !certainly_coprime(num_, den_)) {
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    Rational scale = Rational(1) / den_.trailing_term().second;
    num_ = scale * num_;
    den_ = scale * den_;
}

MultiRat MultiRat::reciprocal() const {
    if (num_.is_zero()) {
        throw Error("growth", "DivisionByZero", "reciprocal of zero rational function");
    }
    return MultiRat(den_, num_);
}

MultiRat MultiRat::invert_variables() const {
    Exponents shift(static_cast<std::size_t>(nvars()), 0);
    for (int i = 0; i < nvars(); ++i) {
        shift[static_cast<std::size_t>(i)] = std::max({num_.degree_in(i), den_.degree_in(i), 0});
    }
    return MultiRat(num_.invert_variables(shift), den_.invert_variables(shift));
}

Rational MultiRat::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) {
        throw Error("growth", "PoleEvaluation", "reduced denominator vanishes at the evaluation point");
    }
    return num_.evaluate(point) / d;
}

MultiRat operator+(const MultiRat& a, const MultiRat& b) {
    if (a.den_ == b.den_) {
        return MultiRat(a.num_ + b.num_, a.den_);
    }
    MultiPoly g = gcd(a.den_, b.den_);
    MultiPoly da = exact_divide(a.den_, g);
    MultiPoly db = exact_divide(b.den_, g);
    return MultiRat(a.num_ * db + b.num_ * da, da * b.den_);
}

MultiRat operator-(const MultiRat& a, const MultiRat& b) {
    return a + MultiRat(-b.num_, b.den_);
}

MultiRat operator*(const MultiRat& a, const MultiRat& b) {
    return MultiRat(a.num_ * b.num_, a.den_ * b.den_);
}

MultiRat operator/(const MultiRat& a, const MultiRat& b) { return a * b.reciprocal(); }

std::string MultiRat::to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_term() == 1) {
        return num_.to_string(names);
    }
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

} // namespace coxwl2
