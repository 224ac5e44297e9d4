#include "salemforge/exactpoly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace salemforge {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(Int c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Int(0);
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("IntPoly::leading: zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return {};
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(Int(1));
    IntPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

Int IntPoly::eval(const Int& t) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Int IntPoly::eval_scaled(const Int& p, const Int& q) const {
    if (is_zero()) return Int(0);
    // sum a_k p^k q^(d-k), Horner in p with trailing powers of q.
    Int acc(0);
    Int qpow(1);
    std::size_t d = coeffs_.size() - 1;
    for (std::size_t k = 0; k <= d; ++k) {
        acc = acc * p + coeffs_[d - k] * qpow;
        if (k != d) qpow *= q;
    }
    return acc;
}

int IntPoly::sign_at(const Rat& t) const {
    Int v = eval_scaled(Int(t.get_num()), Int(t.get_den()));
    return sgn(v);
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Int> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Int(static_cast<long>(k));
    return IntPoly(std::move(v));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int c = content();
    IntPoly r(*this);
    for (auto& a : r.coeffs_) a /= c;
    return r;
}

std::optional<IntPoly> IntPoly::try_divide(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
    if (is_zero()) return IntPoly{};
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    const Int& lead = divisor.coeffs_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + divisor.coeffs_.size() - 1];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[k] = q;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rem[k + i] -= q * divisor.coeffs_[i];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw std::domain_error("IntPoly::divide_exact: inexact division");
    return *q;
}

IntPoly IntPoly::reversed(std::size_t n) const {
    if (degree() > static_cast<long>(n))
        throw std::invalid_argument("IntPoly::reversed: n below degree");
    std::vector<Int> v(n + 1, Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[n - k] = coeffs_[k];
    return IntPoly(std::move(v));
}

bool IntPoly::is_palindromic() const {
    if (is_zero()) return true;
    return *this == reversed(static_cast<std::size_t>(degree()));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) s += ' ';
        s += coeffs_[k].get_str();
    }
    return s;
}

IntPoly IntPoly::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<Int> v;
    std::string tok;
    while (in >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("IntPoly::parse: bad coefficient '" + tok + "'");
        }
    }
    return IntPoly(std::move(v));
}

int IntPoly::compare(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
        int c = cmp(a.coeffs_[k], b.coeffs_[k]);
        if (c) return c;
    }
    return 0;
}

namespace {

// Pseudo-remainder of a by b (sign not normalized).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const long db = b.degree();
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        long shift = a.degree() - db;
        IntPoly t = IntPoly::monomial(a.leading(), static_cast<std::size_t>(shift));
        a = a * lb - t * b;
    }
    return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        IntPoly g = (a.is_zero() ? b : a).primitive_part();
        Int c = a.is_zero() ? b.content() : a.content();
        if (g.leading() < 0) g = -g;
        return g * c;
    }
    Int c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    if (f.leading() < 0) f = -f;
    return f * c;
}

IntPoly bracket_poly(int m) {
    if (m < 1) throw std::invalid_argument("bracket: m must be >= 1");
    std::vector<Int> v(static_cast<std::size_t>(m), Int(1));
    return IntPoly(std::move(v));
}

IntPoly bracket(const std::vector<int>& ms) {
    IntPoly r(Int(1));
    for (int m : ms) r = r * bracket_poly(m);
    return r;
}

IntPoly cyclotomic(int i) {
    if (i < 1) throw std::invalid_argument("cyclotomic: index must be positive");
    // t^i - 1 divided by the cyclotomics of the proper divisors.
    std::vector<Int> v(static_cast<std::size_t>(i) + 1, Int(0));
    v.front() = -1;
    v.back() = 1;
    IntPoly r(std::move(v));
    for (int d = 1; d < i; ++d)
        if (i % d == 0) r = r.divide_exact(cyclotomic(d));
    return r;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc() : num_(), den_(Int(1)) {}

RatFunc::RatFunc(IntPoly numerator) : num_(std::move(numerator)), den_(Int(1)) {}

RatFunc::RatFunc(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(Int(1));
        return;
    }
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    int s = den_.coeff(0) != 0 ? sgn(den_.coeff(0)) : sgn(den_.leading());
    if (s < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    IntPoly g = gcd(den_, o.den_);
    IntPoly da = den_.divide_exact(g);
    IntPoly db = o.den_.divide_exact(g);
    return RatFunc(num_ * db + o.num_ * da, da * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + RatFunc(-o.num_, o.den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const Int& s) const { return RatFunc(num_ * s, den_); }

RatFunc RatFunc::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("RatFunc::reciprocal: zero function");
    return RatFunc(den_, num_);
}

RatFunc ratfunc_combine(const std::vector<std::pair<Int, RatFunc>>& terms) {
    RatFunc acc;
    for (const auto& [scale, f] : terms) acc = acc + f * scale;
    return acc;
}

// ---------------------------------------------------------------------------
// AffineForm

bool AffineForm::is_zero() const { return c0_ == 0 && cl_ == 0 && cm_ == 0 && cn_ == 0; }
bool AffineForm::is_constant() const { return cl_ == 0 && cm_ == 0 && cn_ == 0; }

AffineForm AffineForm::operator-() const { return {-c0_, -cl_, -cm_, -cn_}; }

AffineForm AffineForm::operator+(const AffineForm& o) const {
    return {c0_ + o.c0_, cl_ + o.cl_, cm_ + o.cm_, cn_ + o.cn_};
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + (-o); }

AffineForm AffineForm::operator*(const AffineForm& o) const {
    if (is_constant()) return o * c0_;
    if (o.is_constant()) return *this * o.c0_;
    throw std::domain_error("AffineForm: product would not be affine in (l,m,n)");
}

AffineForm AffineForm::operator*(const Int& s) const {
    return {c0_ * s, cl_ * s, cm_ * s, cn_ * s};
}

Int AffineForm::specialize(const Int& l, const Int& m, const Int& n) const {
    return c0_ + cl_ * l + cm_ * m + cn_ * n;
}

std::string AffineForm::to_string() const {
    std::string s;
    auto append = [&s](const Int& c, const char* var) {
        if (c == 0) return;
        if (s.empty()) {
            if (*var && c == 1) {
            } else if (*var && c == -1)
                s += '-';
            else
                s += c.get_str();
        } else {
            s += (c > 0) ? '+' : '-';
            Int a = abs(c);
            if (!(*var && a == 1)) s += a.get_str();
        }
        s += var;
    };
    append(c0_, "");
    append(cl_, "l");
    append(cm_, "m");
    append(cn_, "n");
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// ParamPoly

ParamPoly::ParamPoly(std::vector<AffineForm> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ParamPoly::ParamPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
    trim();
}

void ParamPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

AffineForm ParamPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : AffineForm();
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    std::vector<AffineForm> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<AffineForm> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::operator*(const AffineForm& s) const {
    ParamPoly r(*this);
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
}

IntPoly ParamPoly::specialize(const Int& l, const Int& m, const Int& n) const {
    std::vector<Int> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.specialize(l, m, n));
    return IntPoly(std::move(v));
}

IntPoly ParamPoly::slice0() const {
    std::vector<Int> v;
    for (const auto& c : coeffs_) v.push_back(c.c0());
    return IntPoly(std::move(v));
}
IntPoly ParamPoly::slice_l() const {
    std::vector<Int> v;
    for (const auto& c : coeffs_) v.push_back(c.cl());
    return IntPoly(std::move(v));
}
IntPoly ParamPoly::slice_m() const {
    std::vector<Int> v;
    for (const auto& c : coeffs_) v.push_back(c.cm());
    return IntPoly(std::move(v));
}
IntPoly ParamPoly::slice_n() const {
    std::vector<Int> v;
    for (const auto& c : coeffs_) v.push_back(c.cn());
    return IntPoly(std::move(v));
}

ParamPoly ParamPoly::divide_exact(const IntPoly& g) const {
    auto lift = [](const IntPoly& q, int which) {
        std::vector<AffineForm> v(static_cast<std::size_t>(q.degree()) + 1);
        for (std::size_t k = 0; k < v.size(); ++k) {
            Int c = q.coeff(k);
            switch (which) {
                case 0: v[k] = AffineForm(c); break;
                case 1: v[k] = AffineForm(Int(0), c, Int(0), Int(0)); break;
                case 2: v[k] = AffineForm(Int(0), Int(0), c, Int(0)); break;
                default: v[k] = AffineForm(Int(0), Int(0), Int(0), c); break;
            }
        }
        return ParamPoly(std::move(v));
    };
    ParamPoly out;
    IntPoly s0 = slice0(), sl = slice_l(), sm = slice_m(), sn = slice_n();
    if (!s0.is_zero()) out = out + lift(s0.divide_exact(g), 0);
    if (!sl.is_zero()) out = out + lift(sl.divide_exact(g), 1);
    if (!sm.is_zero()) out = out + lift(sm.divide_exact(g), 2);
    if (!sn.is_zero()) out = out + lift(sn.divide_exact(g), 3);
    return out;
}

bool ParamPoly::is_palindromic() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!(coeffs_[k] == coeffs_[coeffs_.size() - 1 - k])) return false;
    return true;
}

AffineForm ParamPoly::eval_scaled(const Int& p, const Int& q) const {
    if (is_zero()) return {};
    AffineForm acc;
    Int qpow(1);
    std::size_t d = coeffs_.size() - 1;
    for (std::size_t k = 0; k <= d; ++k) {
        std::size_t idx = d - k;
        acc = acc * p + coeffs_[idx] * qpow;
        if (k != d) qpow *= q;
    }
    return acc;
}

}  // namespace salemforge
