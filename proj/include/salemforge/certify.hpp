#pragma once
// Mechanical reproduction of the proof artifacts: coefficient-elimination
// systems for palindromic factors of the family denominator, affine sign
// certificates over the gluing-count polyhedron, and mod-3 residue tables.

#include "salemforge/exactpoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace salemforge::certify {

// Polynomial in up to four unknowns (a, b, c, d) with AffineForm
// coefficients in (l, m, n). Coefficient products must stay affine.
class MultiPoly {
public:
    using Exponents = std::array<int, 4>;

    MultiPoly() = default;
    static MultiPoly constant(AffineForm c);
    static MultiPoly variable(int index);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, AffineForm>& terms() const { return terms_; }
    AffineForm coefficient(const Exponents& e) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const AffineForm& s) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    AffineForm evaluate(const std::vector<Int>& values) const;

    // Coefficient vector in the first unknown; throws if others appear.
    std::vector<AffineForm> univariate() const;

    std::string to_string() const;

private:
    void insert(const Exponents& e, const AffineForm& c);
    std::map<Exponents, AffineForm> terms_;
};

// Elimination of a monic palindromic degree-2d factor against the monic
// palindromic cofactor: forward substitution determines the 9-d cofactor
// coefficients; the remaining d coefficient comparisons are the residuals.
struct ElimSystem {
    int factor_degree;                  // 2d
    std::vector<MultiPoly> cofactor;    // c_1 .. c_{9-d} in the unknowns
    std::vector<MultiPoly> residuals;   // d residuals, ascending comparison degree
};

ElimSystem residual_system(int d);

enum class Parity { Even, Odd, Both };

// Strict-sign certificate of an affine form over the rational relaxation of
// the gluing-count region (per parity branch of the facet-count bound),
// decided at the polyhedron's vertices and extreme rays.
struct SignCertificate {
    AffineForm expression;
    Parity parity;
    int verdict;  // +1 strictly positive, -1 strictly negative
    struct VertexEvidence {
        Rat l, m, n;
        Rat value;
    };
    struct RayEvidence {
        long l, m, n;
        Int slope;
    };
    std::vector<VertexEvidence> vertices;
    std::vector<RayEvidence> rays;
};

std::optional<SignCertificate> sign_certificate(const AffineForm& expr, Parity parity,
                                                long n_min = 0);

// One certified entry of a sign table.
struct PointCertificate {
    std::string table;  // "K" or "f"
    std::string point;
    int expected_sign;
    bool certified;
    std::string value;
};

struct TableReport {
    std::vector<PointCertificate> points;
    bool all_certified = false;
    // With both tables certified, the quadratic-factor residual has nine
    // real roots, none of them an integer.
    bool residual_has_no_integer_root = false;
};

TableReport verify_root_location_tables();

enum class Specialization { ZeroNN, NZeroN };  // (0,n,n) and (n,0,n)

struct ResidueRow {
    int a, b;
    Int f0, f1;  // exact residual values at the representatives: f0 + f1*n
    int fr0, fr1;  // balanced residues mod 3
    bool has_g;
    Int g0, g1;
    int gr0, gr1;
    int verdict;  // kRowImpossible or the required residue of n mod 3
};
inline constexpr int kRowImpossible = -2;

// The nine (a,b) classes mod 3 for the quartic-factor residuals under the
// given specialization.
std::vector<ResidueRow> residue_tables(Specialization s);

struct ModSweep {
    int d;  // factor degree 2d
    std::vector<std::vector<int>> surviving_classes;
    bool conclusive() const { return surviving_classes.empty(); }
};

struct SmallFactorVerdict {
    std::array<ModSweep, 3> sweeps;  // d = 2, 3, 4
};

// Exhausts all 3^d residue classes of the unknowns modulo 3 for n in the
// given residue class; a factor degree is excluded when no class satisfies
// every residual.
SmallFactorVerdict no_small_palindromic_factor(Specialization s, int n_residue = 1);

}  // namespace salemforge::certify
