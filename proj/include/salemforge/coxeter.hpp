#pragma once
// Coxeter graph model, finite-type recognition with exponents, Solomon
// polynomials, the Steinberg growth function, a brute-force BFS oracle for
// finite groups, and exact power-series expansion.

#include "salemforge/exactpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace salemforge::coxeter {

// Edge labels. Finite labels are >= 3; label 2 (orthogonal hyperplanes) is
// encoded by the absence of an edge.
inline constexpr int kLabelInfinity = -1;
inline constexpr int kLabelDotted = -2;

class CoxeterGraph {
public:
    CoxeterGraph() = default;
    explicit CoxeterGraph(int size);

    int size() const { return size_; }

    // m >= 3, kLabelInfinity or kLabelDotted; i, j are 0-based and distinct.
    void set_label(int i, int j, int m);
    int label(int i, int j) const;  // 2 when no edge is stored

    std::vector<std::pair<int, int>> edges() const;  // stored pairs, i < j

    CoxeterGraph induced(const std::vector<int>& nodes) const;
    CoxeterGraph vertex_deleted(int v) const;

private:
    void check_pair(int i, int j) const;
    int size_ = 0;
    std::map<std::pair<int, int>, int> labels_;
};

bool is_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b);

// Graph file format: one directive per line, 1-based node indices.
//   nodes <k>
//   edge <i> <j> <m>      (m >= 2; m = 2 stores no edge)
//   inf <i> <j>
//   dotted <i> <j>
CoxeterGraph parse_graph(const std::string& text);

// Built-in graphs: triangle-2-3-7, gamma, gamma-star, facet-A, facet-B,
// facet-C. Returns nothing for unknown names.
std::optional<CoxeterGraph> builtin_graph(const std::string& name);

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct FiniteComponent {
    Family family;
    int rank;
    int i2_label = 0;            // edge label for I2(m)
    std::vector<int> exponents;  // ascending
};

struct FiniteType {
    std::vector<FiniteComponent> components;
    int rank() const;
    // Sorted multiset of (exponent + 1) over all components, e.g. {2,6,10}.
    std::vector<int> bracket_signature() const;
};

// Decomposes the induced subgraph into connected components and matches each
// against the classification of finite Coxeter groups. Returns nothing if
// some component is not finite type (including any DOTTED/INFINITY edge).
std::optional<FiniteType> finite_type(const CoxeterGraph& g, const std::vector<int>& subset);

IntPoly solomon_polynomial(const FiniteType& ft);

// All finite-type subsets grouped by Solomon bracket signature.
std::map<std::vector<int>, long> spherical_census(const CoxeterGraph& g);

RatFunc steinberg_growth(const CoxeterGraph& g);

// Word-length generating polynomial by breadth-first enumeration of the
// geometric representation. Requires all labels in {2,3,5}; aborts when the
// group order exceeds the cap.
IntPoly bfs_growth_finite(const CoxeterGraph& g, std::size_t order_cap = 20000);

// First k Taylor coefficients of f; requires den(0) = +-1.
std::vector<Int> series_prefix(const RatFunc& f, std::size_t k);

}  // namespace salemforge::coxeter
