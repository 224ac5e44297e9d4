#pragma once
// Exact verification of the truncated-simplex construction: Gram matrix
// over Q(sqrt 5), Lorentzian signature, cofactor vertex vectors, truncation
// inequalities, the truncated graph, and the compactness check.

#include "salemforge/coxeter.hpp"
#include "salemforge/exactpoly.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace salemforge::geometry {

// a + b*sqrt(5) with exact rational a, b. Sign decisions compare a^2
// against 5 b^2; no floating point anywhere.
class QSqrt5 {
public:
    QSqrt5() = default;
    explicit QSqrt5(Rat a) : a_(std::move(a)) {}
    QSqrt5(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt5 cos_pi_over_5() { return {Rat(1, 4), Rat(1, 4)}; }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QSqrt5 operator-() const { return {-a_, -b_}; }
    QSqrt5 operator+(const QSqrt5& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QSqrt5 operator-(const QSqrt5& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QSqrt5 operator*(const QSqrt5& o) const {
        return {a_ * o.a_ + 5 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    QSqrt5 operator/(const QSqrt5& o) const;
    bool operator==(const QSqrt5& o) const = default;

    int sign() const;
    bool operator<(const QSqrt5& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QSqrt5& o) const { return (*this - o).sign() > 0; }

    // Decimal approximation, for test witnesses only.
    std::string to_decimal(int digits) const;
    std::string to_string() const;

private:
    Rat a_{0}, b_{0};
};

// Symmetric matrix over Q(sqrt 5) with unit diagonal.
class GramMatrix {
public:
    explicit GramMatrix(int order);
    int order() const { return order_; }
    const QSqrt5& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * order_ + j]; }
    void set(int i, int j, const QSqrt5& v);

    GramMatrix principal_submatrix(const std::vector<int>& rows) const;

private:
    int order_;
    std::vector<QSqrt5> e_;
};

// Entries -cos(pi/m) for m in {2,3,5}; other labels are rejected.
GramMatrix gram_from_graph(const coxeter::CoxeterGraph& g);

QSqrt5 determinant(const GramMatrix& g);
QSqrt5 cofactor(const GramMatrix& g, int i, int j);

// (positives, negatives) by Jacobi's leading-principal-minor rule; any zero
// leading minor is an error.
std::pair<int, int> signature(const GramMatrix& g);

// Coordinates with respect to the basis e_1..e_k; inner products through G.
struct NormalVector {
    std::vector<QSqrt5> coords;
};

QSqrt5 inner(const GramMatrix& g, const NormalVector& u, const NormalVector& v);

// w_i = sum_k cof_ik(G) e_k for a nonsingular order-5 Gram matrix.
std::array<NormalVector, 5> cofactor_normals(const GramMatrix& g);

struct TruncationReport {
    // v_i o e_i < -1, squared-compared as det G / cof_ii > 1.
    std::array<bool, 5> opposite_disjoint{};
    // v_i o v_j < -1 via cof_ij > 0 and cof_ij^2 > cof_ii * cof_jj.
    std::vector<std::tuple<int, int, bool>> pairwise_disjoint;
    bool all_ok = false;
};

// Verifies that all five vertices are ultraideal and that the truncating
// hyperplanes are orthogonal and mutually disjoint, then emits the 10-node
// truncated graph. Throws if any inequality fails.
std::pair<coxeter::CoxeterGraph, TruncationReport> truncation_extend(const GramMatrix& g);

// Rank test over the Lannér 4-subsets and the dotted pairs between
// orthogonal-facet nodes of the truncated graph.
bool compactness_check(const GramMatrix& g, const coxeter::CoxeterGraph& star);

// Every extreme ray of the facet cone of the truncated polytope is
// time-like. Independent of compactness_check; used as a cross-check.
bool cone_rays_time_like(const GramMatrix& g);

// The five vertex-deleted subgraphs, each verified to have signature (3,1).
std::array<coxeter::CoxeterGraph, 5> facet_subgraphs(const coxeter::CoxeterGraph& gamma);

}  // namespace salemforge::geometry
