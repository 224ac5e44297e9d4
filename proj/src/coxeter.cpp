#include "salemforge/coxeter.hpp"

#include "salemforge/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace salemforge::coxeter {

// ---------------------------------------------------------------------------
// CoxeterGraph

CoxeterGraph::CoxeterGraph(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("CoxeterGraph: negative size");
}

void CoxeterGraph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw std::invalid_argument("CoxeterGraph: node index out of range");
    if (i == j) throw std::invalid_argument("CoxeterGraph: self-pair");
}

void CoxeterGraph::set_label(int i, int j, int m) {
    check_pair(i, j);
    if (m != kLabelInfinity && m != kLabelDotted && m < 3)
        throw std::invalid_argument("CoxeterGraph: finite label must be >= 3");
    labels_[std::minmax(i, j)] = m;
}

int CoxeterGraph::label(int i, int j) const {
    check_pair(i, j);
    auto it = labels_.find(std::minmax(i, j));
    return it == labels_.end() ? 2 : it->second;
}

std::vector<std::pair<int, int>> CoxeterGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(labels_.size());
    for (const auto& [p, m] : labels_) e.push_back(p);
    return e;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& nodes) const {
    CoxeterGraph g(static_cast<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            int m = label(nodes[i], nodes[j]);
            if (m != 2) g.set_label(static_cast<int>(i), static_cast<int>(j), m);
        }
    return g;
}

CoxeterGraph CoxeterGraph::vertex_deleted(int v) const {
    std::vector<int> keep;
    for (int i = 0; i < size_; ++i)
        if (i != v) keep.push_back(i);
    return induced(keep);
}

namespace {

// Sorted multiset of incident labels, used as an isomorphism invariant.
std::vector<int> node_signature(const CoxeterGraph& g, int v) {
    std::vector<int> sig;
    for (int j = 0; j < g.size(); ++j)
        if (j != v) sig.push_back(g.label(v, j));
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool extend_isomorphism(const CoxeterGraph& a, const CoxeterGraph& b, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
    if (next == a.size()) return true;
    for (int cand = 0; cand < b.size(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            ok = a.label(prev, next) == b.label(map[prev], cand);
        if (!ok) continue;
        used[cand] = true;
        map[next] = cand;
        if (extend_isomorphism(a, b, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::vector<int>> siga, sigb;
    for (int v = 0; v < a.size(); ++v) siga.push_back(node_signature(a, v));
    for (int v = 0; v < b.size(); ++v) sigb.push_back(node_signature(b, v));
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(a.size(), -1);
    std::vector<bool> used(b.size(), false);
    return extend_isomorphism(a, b, map, used, 0);
}

// ---------------------------------------------------------------------------
// Parsing and built-in graphs

CoxeterGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<CoxeterGraph> g;
    std::set<std::pair<int, int>> declared;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) {
        throw std::invalid_argument("graph line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok[0] == '#') continue;
        if (tok == "nodes") {
            int k;
            if (!(ls >> k) || k < 1) fail("expected positive node count");
            if (g) fail("duplicate nodes directive");
            g.emplace(k);
        } else if (tok == "edge" || tok == "inf" || tok == "dotted") {
            if (!g) fail("nodes directive must come first");
            int i, j;
            if (!(ls >> i >> j)) fail("expected two node indices");
            int m = 2;
            if (tok == "edge") {
                if (!(ls >> m)) fail("expected edge label");
                if (m < 2) fail("edge label must be >= 2");
            }
            if (i < 1 || j < 1 || i > g->size() || j > g->size()) fail("node index out of range");
            if (i == j) fail("self-edge");
            auto key = std::minmax(i, j);
            if (!declared.insert(key).second) fail("duplicate edge");
            if (tok == "inf")
                g->set_label(i - 1, j - 1, kLabelInfinity);
            else if (tok == "dotted")
                g->set_label(i - 1, j - 1, kLabelDotted);
            else if (m >= 3)
                g->set_label(i - 1, j - 1, m);
        } else {
            fail("unknown directive '" + tok + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing token '" + rest + "'");
    }
    if (!g) throw std::invalid_argument("graph: missing nodes directive");
    return *g;
}

namespace {

CoxeterGraph build_gamma() {
    CoxeterGraph g(5);
    g.set_label(0, 1, 5);
    g.set_label(0, 3, 3);
    g.set_label(1, 2, 3);
    g.set_label(1, 4, 3);
    g.set_label(2, 3, 5);
    g.set_label(3, 4, 3);
    return g;
}

// Totally truncated simplex graph: one orthogonal-facet node per vertex of
// gamma, orthogonal to the four facets meeting that vertex, disjoint from
// the opposite facet and from every other orthogonal facet.
CoxeterGraph build_gamma_star() {
    CoxeterGraph base = build_gamma();
    CoxeterGraph g(10);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            int m = base.label(i, j);
            if (m != 2) g.set_label(i, j, m);
        }
    for (int i = 0; i < 5; ++i) {
        g.set_label(5 + i, i, kLabelDotted);
        for (int j = i + 1; j < 5; ++j) g.set_label(5 + i, 5 + j, kLabelDotted);
    }
    return g;
}

CoxeterGraph build_triangle_237() {
    CoxeterGraph g(3);
    g.set_label(0, 1, 3);
    g.set_label(1, 2, 7);
    return g;
}

}  // namespace

std::optional<CoxeterGraph> builtin_graph(const std::string& name) {
    if (name == "triangle-2-3-7") return build_triangle_237();
    if (name == "gamma") return build_gamma();
    if (name == "gamma-star") return build_gamma_star();
    // Orthogonal facets: the three isomorphism classes of vertex-deleted
    // subgraphs of gamma, labelled by growth-function matching.
    if (name == "facet-A") return build_gamma().vertex_deleted(0);
    if (name == "facet-B") return build_gamma().vertex_deleted(1);
    if (name == "facet-C") return build_gamma().vertex_deleted(4);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Finite-type recognition

int FiniteType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

std::vector<int> FiniteType::bracket_signature() const {
    std::vector<int> sig;
    for (const auto& c : components)
        for (int e : c.exponents) sig.push_back(e + 1);
    std::sort(sig.begin(), sig.end());
    return sig;
}

namespace {

std::vector<int> exponents_for(Family f, int rank, int i2_label) {
    std::vector<int> e;
    switch (f) {
        case Family::A:
            for (int k = 1; k <= rank; ++k) e.push_back(k);
            break;
        case Family::B:
            for (int k = 1; k <= rank; ++k) e.push_back(2 * k - 1);
            break;
        case Family::D:
            for (int k = 1; k < rank; ++k) e.push_back(2 * k - 1);
            e.push_back(rank - 1);
            break;
        case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
        case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
        case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
        case Family::F4: e = {1, 5, 7, 11}; break;
        case Family::H3: e = {1, 5, 9}; break;
        case Family::H4: e = {1, 11, 19, 29}; break;
        case Family::I2: e = {1, i2_label - 1}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

std::optional<FiniteComponent> classify_connected(const CoxeterGraph& g,
                                                  const std::vector<int>& comp) {
    const int k = static_cast<int>(comp.size());
    auto make = [&](Family f, int rank, int i2 = 0) {
        return FiniteComponent{f, rank, i2, exponents_for(f, rank, i2)};
    };
    if (k == 1) return make(Family::A, 1);

    // Any non-finite label anywhere kills the component.
    int edge_count = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int m = g.label(comp[i], comp[j]);
            if (m == kLabelInfinity || m == kLabelDotted) return std::nullopt;
            if (m >= 3) ++edge_count;
        }
    if (k == 2) return make(Family::I2, 2, g.label(comp[0], comp[1]));
    if (edge_count != k - 1) return std::nullopt;  // contains a cycle

    std::vector<std::vector<int>> adj(k);
    std::vector<std::pair<std::pair<int, int>, int>> labelled;  // non-3 edges
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int m = g.label(comp[i], comp[j]);
            if (m < 3) continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
            if (m != 3) labelled.push_back({{i, j}, m});
        }

    int branch = -1;
    for (int i = 0; i < k; ++i) {
        if (adj[i].size() >= 4) return std::nullopt;
        if (adj[i].size() == 3) {
            if (branch >= 0) return std::nullopt;
            branch = i;
        }
    }

    if (branch >= 0) {
        if (!labelled.empty()) return std::nullopt;
        std::vector<int> arms;
        for (int start : adj[branch]) {
            int len = 1, prev = branch, cur = start;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return make(Family::D, k);
        if (arms == std::vector<int>{1, 2, 2}) return make(Family::E6, 6);
        if (arms == std::vector<int>{1, 2, 3}) return make(Family::E7, 7);
        if (arms == std::vector<int>{1, 2, 4}) return make(Family::E8, 8);
        return std::nullopt;
    }

    // Path; order the labels from one endpoint.
    int end = -1;
    for (int i = 0; i < k && end < 0; ++i)
        if (adj[i].size() == 1) end = i;
    std::vector<int> path_labels;
    int prev = -1, cur = end;
    while (true) {
        int nxt = -1;
        for (int j : adj[cur])
            if (j != prev) nxt = j;
        if (nxt < 0) break;
        path_labels.push_back(g.label(comp[cur], comp[nxt]));
        prev = cur;
        cur = nxt;
    }

    int non3 = 0, pos = -1;
    for (std::size_t i = 0; i < path_labels.size(); ++i)
        if (path_labels[i] != 3) {
            ++non3;
            pos = static_cast<int>(i);
        }
    if (non3 == 0) return make(Family::A, k);
    if (non3 > 1) return std::nullopt;
    const int m = path_labels[pos];
    const bool at_end = pos == 0 || pos == static_cast<int>(path_labels.size()) - 1;
    if (m == 4) {
        if (at_end) return make(Family::B, k);
        if (k == 4) return make(Family::F4, 4);  // the interior edge of a 4-node path
        return std::nullopt;
    }
    if (m == 5 && at_end) {
        if (k == 3) return make(Family::H3, 3);
        if (k == 4) return make(Family::H4, 4);
    }
    return std::nullopt;
}

}  // namespace

std::optional<FiniteType> finite_type(const CoxeterGraph& g, const std::vector<int>& subset) {
    for (int v : subset)
        if (v < 0 || v >= g.size()) throw std::invalid_argument("finite_type: node out of range");

    // Connected components of the induced subgraph (label 2 = disconnected).
    std::vector<int> nodes = subset;
    std::sort(nodes.begin(), nodes.end());
    const int k = static_cast<int>(nodes.size());
    std::vector<bool> seen(k, false);
    FiniteType ft;
    for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int j = 0; j < k; ++j)
                if (!seen[j] && g.label(nodes[comp[head]], nodes[j]) != 2) {
                    seen[j] = true;
                    comp.push_back(j);
                }
        std::vector<int> comp_nodes;
        for (int idx : comp) comp_nodes.push_back(nodes[idx]);
        auto c = classify_connected(g, comp_nodes);
        if (!c) return std::nullopt;
        ft.components.push_back(std::move(*c));
    }
    return ft;
}

IntPoly solomon_polynomial(const FiniteType& ft) {
    std::vector<int> brackets = ft.bracket_signature();
    return bracket(brackets);
}

std::map<std::vector<int>, long> spherical_census(const CoxeterGraph& g) {
    if (g.size() > 24) throw std::invalid_argument("spherical_census: more than 24 nodes");
    std::map<std::vector<int>, long> census;
    std::vector<int> cur;
    // Depth-first subset enumeration; a non-finite subset has no finite
    // supersets, so the whole branch is pruned.
    auto rec = [&](auto&& self, int start) -> void {
        for (int v = start; v < g.size(); ++v) {
            cur.push_back(v);
            if (auto ft = finite_type(g, cur)) {
                ++census[ft->bracket_signature()];
                self(self, v + 1);
            }
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return census;
}

RatFunc steinberg_growth(const CoxeterGraph& g) {
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    if (auto ft = finite_type(g, all)) return RatFunc(solomon_polynomial(*ft));

    auto census = spherical_census(g);
    std::vector<std::pair<Int, RatFunc>> terms;
    terms.emplace_back(Int(1), RatFunc(IntPoly(Int(1))));
    for (const auto& [sig, count] : census) {
        Int scale = (sig.size() % 2) ? Int(-count) : Int(count);
        terms.emplace_back(scale, RatFunc(IntPoly(Int(1)), bracket(sig)));
    }
    RatFunc tilde = ratfunc_combine(terms);  // 1 / f_S(t^{-1}) as a reduced pair
    long n = std::max(tilde.num().degree(), tilde.den().degree());
    return RatFunc(tilde.den().reversed(static_cast<std::size_t>(n)),
                   tilde.num().reversed(static_cast<std::size_t>(n)));
}

// ---------------------------------------------------------------------------
// BFS oracle over the geometric representation

IntPoly bfs_growth_finite(const CoxeterGraph& g, std::size_t order_cap) {
    using geometry::QSqrt5;
    const int r = g.size();
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            int m = g.label(i, j);
            if (m != 2 && m != 3 && m != 5)
                throw std::invalid_argument("bfs_growth_finite: labels must be in {2,3,5}");
        }

    // Bilinear form B(a_i, a_j) = -cos(pi / m_ij), exact in Q(sqrt 5).
    std::vector<std::vector<QSqrt5>> B(r, std::vector<QSqrt5>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j)
                B[i][j] = QSqrt5(Rat(1));
            else
                switch (g.label(i, j)) {
                    case 2: B[i][j] = QSqrt5(); break;
                    case 3: B[i][j] = QSqrt5(Rat(-1, 2)); break;
                    default: B[i][j] = -QSqrt5::cos_pi_over_5(); break;
                }
        }

    using Matrix = std::vector<QSqrt5>;  // row-major r x r
    auto mat_key = [r](const Matrix& m) {
        std::string key;
        for (const auto& e : m) {
            key += e.a().get_str();
            key += ',';
            key += e.b().get_str();
            key += ';';
        }
        (void)r;
        return key;
    };
    auto mul = [r](const Matrix& x, const Matrix& y) {
        Matrix z(static_cast<std::size_t>(r) * r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) {
                const QSqrt5& v = x[i * r + k];
                if (v.is_zero()) continue;
                for (int j = 0; j < r; ++j) z[i * r + j] = z[i * r + j] + v * y[k * r + j];
            }
        return z;
    };

    Matrix identity(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i) identity[i * r + i] = QSqrt5(Rat(1));

    // Reflection s_i: a_j -> a_j - 2 B(a_i, a_j) a_i; only row i changes.
    std::vector<Matrix> gens;
    for (int i = 0; i < r; ++i) {
        Matrix m = identity;
        for (int j = 0; j < r; ++j) m[i * r + j] = m[i * r + j] - B[i][j] * QSqrt5(Rat(2));
        gens.push_back(std::move(m));
    }

    std::unordered_set<std::string> seen;
    seen.insert(mat_key(identity));
    std::vector<Matrix> frontier{identity};
    std::vector<Int> counts{Int(1)};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& w : frontier)
            for (const auto& s : gens) {
                Matrix ws = mul(w, s);
                if (seen.insert(mat_key(ws)).second) {
                    if (seen.size() > order_cap)
                        throw std::runtime_error("bfs_growth_finite: group order exceeds cap");
                    next.push_back(std::move(ws));
                }
            }
        if (!next.empty()) counts.push_back(Int(static_cast<long>(next.size())));
        frontier = std::move(next);
    }
    return IntPoly(std::move(counts));
}

std::vector<Int> series_prefix(const RatFunc& f, std::size_t k) {
    const Int d0 = f.den().coeff(0);
    if (d0 != 1 && d0 != -1)
        throw std::domain_error("series_prefix: denominator constant term must be +-1");
    std::vector<Int> a(k, Int(0));
    for (std::size_t j = 0; j < k; ++j) {
        Int s = f.num().coeff(j);
        for (std::size_t i = 1; i <= j; ++i) s -= f.den().coeff(i) * a[j - i];
        a[j] = s / d0;
    }
    return a;
}

}  // namespace salemforge::coxeter
