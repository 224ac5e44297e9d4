#pragma once
// Exact scalars and polynomial types used throughout the engine:
// arbitrary-precision integers/rationals, dense univariate integer
// polynomials, reduced rational functions, and polynomials whose
// coefficients are affine forms in the gluing counts (l, m, n).

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemforge {

using Int = mpz_class;
using Rat = mpq_class;

// Univariate polynomial over Z, coefficients ascending by degree.
// The zero polynomial is the empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly x();
    static IntPoly monomial(Int c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(std::size_t k) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly pow(unsigned e) const;

    Int eval(const Int& t) const;
    Rat eval(const Rat& t) const;
    // f(p/q) * q^deg(f); sign-faithful integer evaluation at a rational.
    Int eval_scaled(const Int& p, const Int& q) const;
    int sign_at(const Rat& t) const;

    IntPoly derivative() const;

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;
    IntPoly primitive_part() const;

    std::optional<IntPoly> try_divide(const IntPoly& divisor) const;
    IntPoly divide_exact(const IntPoly& divisor) const;

    // t^n * f(1/t); requires n >= deg(f).
    IntPoly reversed(std::size_t n) const;
    bool is_palindromic() const;

    std::string to_string() const;            // "1 -6 3 ..." ascending
    static IntPoly parse(const std::string& text);

    // Lexicographic by (degree, coefficients); used for deterministic sorting.
    static int compare(const IntPoly& a, const IntPoly& b);

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPoly gcd(const IntPoly& a, const IntPoly& b);

// [m] = 1 + t + ... + t^{m-1}; bracket(ms) is the product over the sequence.
IntPoly bracket_poly(int m);
IntPoly bracket(const std::vector<int>& ms);

// Exact i-th cyclotomic polynomial via iterated division of t^i - 1.
IntPoly cyclotomic(int i);

inline IntPoly reciprocal_transform(const IntPoly& f, std::size_t n) { return f.reversed(n); }
inline bool is_palindromic(const IntPoly& f) { return f.is_palindromic(); }

// Reduced quotient of integer polynomials. Invariants: gcd(num, den) = 1
// including integer content; den(0) > 0 when den(0) != 0, else positive
// leading coefficient.
class RatFunc {
public:
    RatFunc();                                   // zero
    explicit RatFunc(IntPoly numerator);         // denominator 1
    RatFunc(IntPoly numerator, IntPoly denominator);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Int& s) const;
    RatFunc reciprocal() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize();
    IntPoly num_, den_;
};

// Exact signed sum of scaled rational functions, fully reduced.
RatFunc ratfunc_combine(const std::vector<std::pair<Int, RatFunc>>& terms);

// c0 + cl*l + cm*m + cn*n with integer coefficients. Products that would
// leave the affine class (both factors non-constant) throw.
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(Int c0) : c0_(std::move(c0)) {}
    AffineForm(long c0) : c0_(c0) {}
    AffineForm(Int c0, Int cl, Int cm, Int cn)
        : c0_(std::move(c0)), cl_(std::move(cl)), cm_(std::move(cm)), cn_(std::move(cn)) {}

    const Int& c0() const { return c0_; }
    const Int& cl() const { return cl_; }
    const Int& cm() const { return cm_; }
    const Int& cn() const { return cn_; }

    bool is_zero() const;
    bool is_constant() const;

    AffineForm operator-() const;
    AffineForm operator+(const AffineForm& o) const;
    AffineForm operator-(const AffineForm& o) const;
    AffineForm operator*(const AffineForm& o) const;
    AffineForm operator*(const Int& s) const;
    bool operator==(const AffineForm& o) const = default;

    Int specialize(const Int& l, const Int& m, const Int& n) const;
    std::string to_string() const;   // e.g. "32+32n", "5m-l"

private:
    Int c0_{0}, cl_{0}, cm_{0}, cn_{0};
};

// Univariate polynomial with AffineForm coefficients, ascending by degree.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(std::vector<AffineForm> coeffs);
    explicit ParamPoly(const IntPoly& p);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    AffineForm coeff(std::size_t k) const;
    const std::vector<AffineForm>& coeffs() const { return coeffs_; }

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator*(const AffineForm& s) const;
    bool operator==(const ParamPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly specialize(const Int& l, const Int& m, const Int& n) const;

    // Slice polynomials: p = slice0 + l*slice_l + m*slice_m + n*slice_n.
    IntPoly slice0() const;
    IntPoly slice_l() const;
    IntPoly slice_m() const;
    IntPoly slice_n() const;

    // Divides every slice exactly by g; throws if any division is inexact.
    ParamPoly divide_exact(const IntPoly& g) const;

    bool is_palindromic() const;

    // f(p/q) * q^deg(f) as an AffineForm.
    AffineForm eval_scaled(const Int& p, const Int& q) const;

private:
    void trim();
    std::vector<AffineForm> coeffs_;
};

inline IntPoly specialize(const ParamPoly& p, const Int& l, const Int& m, const Int& n) {
    return p.specialize(l, m, n);
}

}  // namespace salemforge
