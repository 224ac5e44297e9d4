#include "salemforge/geometry.hpp"

#include <numeric>
#include <stdexcept>

namespace salemforge::geometry {

// ---------------------------------------------------------------------------
// QSqrt5

QSqrt5 QSqrt5::operator/(const QSqrt5& o) const {
    if (o.is_zero()) throw std::domain_error("QSqrt5: division by zero");
    Rat norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
    if (norm == 0) throw std::logic_error("QSqrt5: zero norm for nonzero element");
    QSqrt5 conj{o.a_, -o.b_};
    QSqrt5 num = *this * conj;
    return {num.a_ / norm, num.b_ / norm};
}

int QSqrt5::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 5 b^2.
    Rat d = a_ * a_ - 5 * b_ * b_;
    if (d == 0) throw std::logic_error("QSqrt5: a^2 = 5 b^2 with nonzero parts");
    return sgn(d) == sa ? sa : sb;
}

std::string QSqrt5::to_decimal(int digits) const {
    mpf_set_default_prec(static_cast<mp_bitcnt_t>(digits * 4 + 64));
    mpf_class x(a_), y(b_), s;
    mpf_sqrt_ui(s.get_mpf_t(), 5);
    mpf_class v = x + y * s;
    mp_exp_t exp;
    std::string m = v.get_str(exp, 10, static_cast<std::size_t>(digits));
    std::string sign = !m.empty() && m[0] == '-' ? "-" : "";
    if (!sign.empty()) m = m.substr(1);
    if (m.empty()) m = "0";
    std::string out = sign;
    if (exp <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-exp), '0');
        out += m;
    } else if (static_cast<std::size_t>(exp) >= m.size()) {
        out += m;
        out.append(static_cast<std::size_t>(exp) - m.size(), '0');
    } else {
        out += m.substr(0, static_cast<std::size_t>(exp)) + "." + m.substr(static_cast<std::size_t>(exp));
    }
    return out;
}

std::string QSqrt5::to_string() const {
    return a_.get_str() + (sgn(b_) >= 0 ? "+" : "") + b_.get_str() + "*sqrt5";
}

// ---------------------------------------------------------------------------
// GramMatrix

GramMatrix::GramMatrix(int order) : order_(order), e_(static_cast<std::size_t>(order) * order) {
    if (order < 1) throw std::invalid_argument("GramMatrix: order must be positive");
    for (int i = 0; i < order; ++i) e_[static_cast<std::size_t>(i) * order + i] = QSqrt5(Rat(1));
}

void GramMatrix::set(int i, int j, const QSqrt5& v) {
    if (i == j && !(v == QSqrt5(Rat(1)))) throw std::invalid_argument("GramMatrix: diagonal must be 1");
    e_[static_cast<std::size_t>(i) * order_ + j] = v;
    e_[static_cast<std::size_t>(j) * order_ + i] = v;
}

GramMatrix GramMatrix::principal_submatrix(const std::vector<int>& rows) const {
    GramMatrix s(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            s.e_[i * rows.size() + j] = at(rows[i], rows[j]);
    return s;
}

GramMatrix gram_from_graph(const coxeter::CoxeterGraph& g) {
    GramMatrix m(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            switch (g.label(i, j)) {
                case 2: break;
                case 3: m.set(i, j, QSqrt5(Rat(-1, 2))); break;
                case 5: m.set(i, j, -QSqrt5::cos_pi_over_5()); break;
                default:
                    throw std::invalid_argument("gram_from_graph: label outside {2,3,5}");
            }
        }
    return m;
}

QSqrt5 determinant(const GramMatrix& g) {
    // Fraction-free enough at these sizes: straight Gaussian elimination
    // over the field with row swaps.
    const int n = g.order();
    std::vector<std::vector<QSqrt5>> a(n, std::vector<QSqrt5>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.at(i, j);
    QSqrt5 det{Rat(1)};
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return QSqrt5();
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            QSqrt5 f = a[row][col] / a[col][col];
            for (int j = col; j < n; ++j) a[row][j] = a[row][j] - f * a[col][j];
        }
    }
    return det;
}

QSqrt5 cofactor(const GramMatrix& g, int i, int j) {
    const int n = g.order();
    GramMatrix sub(n - 1);
    std::vector<int> rows, cols;
    for (int r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
    for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
    // Not principal in general; build via a scratch matrix.
    struct Mat {
        int n;
        std::vector<QSqrt5> e;
    } m{n - 1, {}};
    m.e.resize(static_cast<std::size_t>(m.n) * m.n);
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) m.e[static_cast<std::size_t>(r) * m.n + c] = g.at(rows[r], cols[c]);
    // Determinant of the scratch matrix.
    QSqrt5 det{Rat(1)};
    auto at = [&m](int r, int c) -> QSqrt5& { return m.e[static_cast<std::size_t>(r) * m.n + c]; };
    for (int col = 0; col < m.n; ++col) {
        int pivot = -1;
        for (int row = col; row < m.n; ++row)
            if (!at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) {
            det = QSqrt5();
            break;
        }
        if (pivot != col) {
            for (int c = 0; c < m.n; ++c) std::swap(at(pivot, c), at(col, c));
            det = -det;
        }
        det = det * at(col, col);
        for (int row = col + 1; row < m.n; ++row) {
            if (at(row, col).is_zero()) continue;
            QSqrt5 f = at(row, col) / at(col, col);
            for (int c = col; c < m.n; ++c) at(row, c) = at(row, c) - f * at(col, c);
        }
    }
    if ((i + j) % 2) det = -det;
    return det;
}

std::pair<int, int> signature(const GramMatrix& g) {
    const int n = g.order();
    int negatives = 0;
    int prev = 1;  // sign of the empty minor
    for (int k = 1; k <= n; ++k) {
        std::vector<int> rows(k);
        std::iota(rows.begin(), rows.end(), 0);
        QSqrt5 minor = determinant(g.principal_submatrix(rows));
        int s = minor.sign();
        if (s == 0) throw std::domain_error("signature: zero leading principal minor");
        if (s != prev) ++negatives;
        prev = s;
    }
    return {n - negatives, negatives};
}

QSqrt5 inner(const GramMatrix& g, const NormalVector& u, const NormalVector& v) {
    const int n = g.order();
    QSqrt5 s;
    for (int i = 0; i < n; ++i) {
        if (u.coords[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (v.coords[j].is_zero()) continue;
            s = s + u.coords[i] * g.at(i, j) * v.coords[j];
        }
    }
    return s;
}

std::array<NormalVector, 5> cofactor_normals(const GramMatrix& g) {
    if (g.order() != 5) throw std::invalid_argument("cofactor_normals: order-5 matrix required");
    if (determinant(g).sign() == 0) throw std::domain_error("cofactor_normals: singular matrix");
    std::array<NormalVector, 5> w;
    for (int i = 0; i < 5; ++i) {
        w[i].coords.resize(5);
        for (int k = 0; k < 5; ++k) w[i].coords[k] = cofactor(g, i, k);
    }
    return w;
}

std::pair<coxeter::CoxeterGraph, TruncationReport> truncation_extend(const GramMatrix& g) {
    if (g.order() != 5) throw std::invalid_argument("truncation_extend: order-5 matrix required");
    if (signature(g) != std::pair<int, int>(4, 1))
        throw std::domain_error("truncation_extend: signature is not (4,1)");

    const QSqrt5 det = determinant(g);
    TruncationReport report;
    report.all_ok = true;

    for (int i = 0; i < 5; ++i) {
        QSqrt5 cii = cofactor(g, i, i);
        // Ultraideal vertex: w_i space-like, i.e. cof_ii * det > 0.
        if (!((cii * det).sign() > 0))
            throw std::domain_error("truncation_extend: vertex is not ultraideal");
        // v_i o e_i = -sqrt(det/cof_ii) < -1  <=>  det/cof_ii > 1; both are
        // negative here, so this is det < cof_ii.
        bool ok = (det - cii).sign() < 0;
        report.opposite_disjoint[i] = ok;
        report.all_ok = report.all_ok && ok;
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            QSqrt5 cij = cofactor(g, i, j);
            QSqrt5 cii = cofactor(g, i, i), cjj = cofactor(g, j, j);
            bool ok = cij.sign() > 0 && (cij * cij - cii * cjj).sign() > 0;
            report.pairwise_disjoint.emplace_back(i, j, ok);
            report.all_ok = report.all_ok && ok;
        }
    if (!report.all_ok) throw std::domain_error("truncation_extend: disjointness inequality failed");

    // Emit the truncated graph; interior labels recovered from the entries.
    coxeter::CoxeterGraph star(10);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const QSqrt5& e = g.at(i, j);
            if (e.is_zero()) continue;
            if (e == QSqrt5(Rat(-1, 2)))
                star.set_label(i, j, 3);
            else if (e == -QSqrt5::cos_pi_over_5())
                star.set_label(i, j, 5);
            else
                throw std::domain_error("truncation_extend: unsupported Gram entry");
        }
    for (int i = 0; i < 5; ++i) {
        star.set_label(5 + i, i, coxeter::kLabelDotted);
        for (int j = i + 1; j < 5; ++j) star.set_label(5 + i, 5 + j, coxeter::kLabelDotted);
    }
    return {star, report};
}

namespace {

int rank_of(std::vector<std::vector<QSqrt5>> rows) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = row; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[row]);
        for (int r = row + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col].is_zero()) continue;
            QSqrt5 f = rows[r][col] / rows[row][col];
            for (int c = col; c < cols; ++c) rows[r][c] = rows[r][c] - f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<QSqrt5> coordinate_vector(const std::array<NormalVector, 5>& w, int node) {
    std::vector<QSqrt5> v(5);
    if (node < 5)
        v[node] = QSqrt5(Rat(1));
    else
        v = w[node - 5].coords;
    return v;
}

}  // namespace

bool compactness_check(const GramMatrix& g, const coxeter::CoxeterGraph& star) {
    if (star.size() != 10) throw std::invalid_argument("compactness_check: 10-node graph required");
    auto w = cofactor_normals(g);

    std::vector<std::vector<int>> subsets;
    for (int skip = 0; skip < 5; ++skip) {
        std::vector<int> j;
        for (int i = 0; i < 5; ++i)
            if (i != skip) j.push_back(i);
        subsets.push_back(std::move(j));
    }
    for (int i = 5; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (star.label(i, j) == coxeter::kLabelDotted) subsets.push_back({i, j});

    for (const auto& j : subsets) {
        std::vector<int> n_of_j = j;
        for (int x = 0; x < 10; ++x) {
            if (std::find(j.begin(), j.end(), x) != j.end()) continue;
            bool orthogonal_to_all = true;
            for (int y : j) orthogonal_to_all = orthogonal_to_all && star.label(x, y) == 2;
            if (orthogonal_to_all) n_of_j.push_back(x);
        }
        std::vector<std::vector<QSqrt5>> rows;
        for (int node : n_of_j) rows.push_back(coordinate_vector(w, node));
        if (rank_of(std::move(rows)) != 5) return false;
    }
    return true;
}

bool cone_rays_time_like(const GramMatrix& g) {
    // Normals: e_1..e_5 and the unnormalized truncation vectors w_1..w_5.
    // An extreme ray of the cone {x : x o normal <= 0} lies on four
    // independent walls; enumerate 4-subsets, solve for the line, keep
    // directions satisfying every constraint, and demand x o x < 0.
    auto w = cofactor_normals(g);
    std::vector<NormalVector> normals;
    for (int i = 0; i < 5; ++i) {
        NormalVector e;
        e.coords.assign(5, QSqrt5());
        e.coords[i] = QSqrt5(Rat(1));
        normals.push_back(std::move(e));
    }
    for (int i = 0; i < 5; ++i) normals.push_back(w[i]);

    const int n = static_cast<int>(normals.size());
    bool found_ray = false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    // Solve u o normals = 0 for the four chosen walls: rows
                    // are the G-pairings of the normals with the basis.
                    std::vector<std::vector<QSqrt5>> rows;
                    for (int idx : {a, b, c, d}) {
                        std::vector<QSqrt5> row(5);
                        for (int k = 0; k < 5; ++k) {
                            NormalVector ek;
                            ek.coords.assign(5, QSqrt5());
                            ek.coords[k] = QSqrt5(Rat(1));
                            row[k] = inner(g, normals[idx], ek);
                        }
                        rows.push_back(std::move(row));
                    }
                    // Null space by elimination; skip if not 1-dimensional.
                    auto m = rows;
                    std::vector<int> pivot_col;
                    int row = 0;
                    for (int col = 0; col < 5 && row < 4; ++col) {
                        int p = -1;
                        for (int r = row; r < 4; ++r)
                            if (!m[r][col].is_zero()) {
                                p = r;
                                break;
                            }
                        if (p < 0) continue;
                        std::swap(m[p], m[row]);
                        for (int r = 0; r < 4; ++r) {
                            if (r == row || m[r][col].is_zero()) continue;
                            QSqrt5 f = m[r][col] / m[row][col];
                            for (int cc = col; cc < 5; ++cc) m[r][cc] = m[r][cc] - f * m[row][cc];
                        }
                        pivot_col.push_back(col);
                        ++row;
                    }
                    if (row != 4) continue;
                    int free_col = -1;
                    for (int col = 0; col < 5; ++col)
                        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
                            free_col = col;
                    NormalVector u;
                    u.coords.assign(5, QSqrt5());
                    u.coords[free_col] = QSqrt5(Rat(1));
                    for (int r = 3; r >= 0; --r) {
                        QSqrt5 s;
                        for (int col = pivot_col[r] + 1; col < 5; ++col)
                            s = s + m[r][col] * u.coords[col];
                        u.coords[pivot_col[r]] = -(s / m[r][pivot_col[r]]);
                    }
                    // Orient into the cone if possible.
                    for (int flip = 0; flip < 2; ++flip) {
                        bool inside = true;
                        for (int idx = 0; idx < n && inside; ++idx)
                            inside = inner(g, u, normals[idx]).sign() <= 0;
                        if (inside) {
                            found_ray = true;
                            if (!(inner(g, u, u).sign() < 0)) return false;
                            break;
                        }
                        for (auto& x : u.coords) x = -x;
                    }
                }
    return found_ray;
}

std::array<coxeter::CoxeterGraph, 5> facet_subgraphs(const coxeter::CoxeterGraph& gamma) {
    if (gamma.size() != 5) throw std::invalid_argument("facet_subgraphs: 5-node graph required");
    std::array<coxeter::CoxeterGraph, 5> out;
    for (int v = 0; v < 5; ++v) {
        out[v] = gamma.vertex_deleted(v);
        auto sig = signature(gram_from_graph(out[v]));
        if (sig != std::pair<int, int>(3, 1))
            throw std::domain_error("facet_subgraphs: signature is not (3,1)");
    }
    return out;
}

}  // namespace salemforge::geometry
