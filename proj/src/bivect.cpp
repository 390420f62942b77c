#include "bialg/bivect.hpp"

#include <set>

namespace bialg {

MatGF mat_make(int p, int rows, int cols, std::vector<int> entries) {
    if (!is_prime(p)) fail("BadParameters", "matrix field order must be prime");
    if (static_cast<int>(entries.size()) != rows * cols)
        fail("SchemaError", "matrix entries do not match the shape");
    for (auto& e : entries) e = static_cast<int>(mod_floor(e, p));
    return {p, rows, cols, std::move(entries)};
}

MatGF mat_zero(int p, int rows, int cols) {
    return {p, rows, cols, std::vector<int>(static_cast<size_t>(rows) * cols, 0)};
}

MatGF mat_identity(int p, int n) {
    auto m = mat_zero(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatGF mat_mul(const MatGF& x, const MatGF& y) {
    if (x.p != y.p || x.cols != y.rows) fail("ShapeMismatch", "matrix product shapes");
    auto out = mat_zero(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) =
                    static_cast<int>(mod_floor(out.at(i, j) + x.at(i, k) * y.at(k, j), x.p));
        }
    return out;
}

std::vector<int> mat_apply(const MatGF& m, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != m.cols) fail("ShapeMismatch", "matrix-vector shapes");
    std::vector<int> out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out[i] = static_cast<int>(mod_floor(out[i] + m.at(i, j) * v[j], m.p));
    return out;
}

BiVectorSpace make_bivector_space(int p, int m, int n) {
    if (!is_prime(p)) fail("BadParameters", "scalars must form a prime field");
    if (m < 1 || n < 1) fail("BadParameters", "both component dimensions must be >= 1");
    return {p, m, n};
}

int dim(const BiVectorSpace& v) { return v.m + v.n; }

bool isomorphic(const BiVectorSpace& v, const BiVectorSpace& w) {
    return v.p == w.p && v.m == w.m && v.n == w.n;
}

BiVector make_bivector(const BiVectorSpace& v, int component, std::vector<int> block) {
    if (component != 0 && component != 1) fail("BadParameters", "component must be 0 or 1");
    int want = component == 0 ? v.m : v.n;
    if (static_cast<int>(block.size()) != want)
        fail("ShapeMismatch", "block length does not match the component dimension");
    BiVector x;
    x.component = component;
    x.coords.assign(v.m + v.n, 0);
    for (int i = 0; i < want; ++i)
        x.coords[(component == 0 ? 0 : v.m) + i] = static_cast<int>(mod_floor(block[i], v.p));
    return x;
}

BiLinearMap make_bilinear(const BiVectorSpace& v, const BiVectorSpace& w, MatGF first,
                          MatGF second) {
    if (first.p != v.p || second.p != v.p || v.p != w.p)
        fail("BadParameters", "field mismatch");
    if (first.rows != w.m || first.cols != v.m || second.rows != w.n || second.cols != v.n)
        fail("ShapeMismatch", "block shapes must be (m1 x m) and (n1 x n)");
    return {std::move(first), std::move(second)};
}

BiVector apply(const BiLinearMap& t, const BiVectorSpace& v, const BiVectorSpace& w,
               const BiVector& x) {
    if (static_cast<int>(x.coords.size()) != dim(v))
        fail("ShapeMismatch", "vector does not live in the domain");
    std::vector<int> block;
    if (x.component == 0)
        block.assign(x.coords.begin(), x.coords.begin() + v.m);
    else
        block.assign(x.coords.begin() + v.m, x.coords.end());
    auto image = mat_apply(x.component == 0 ? t.first : t.second, block);
    return make_bivector(w, x.component, std::move(image));
}

MatGF block_matrix(const BiLinearMap& t) {
    auto out = mat_zero(t.first.p, t.first.rows + t.second.rows,
                        t.first.cols + t.second.cols);
    for (int i = 0; i < t.first.rows; ++i)
        for (int j = 0; j < t.first.cols; ++j) out.at(i, j) = t.first.at(i, j);
    for (int i = 0; i < t.second.rows; ++i)
        for (int j = 0; j < t.second.cols; ++j)
            out.at(t.first.rows + i, t.first.cols + j) = t.second.at(i, j);
    return out;
}

BiLinearMap compose(const BiLinearMap& s, const BiLinearMap& t) {
    return {mat_mul(s.first, t.first), mat_mul(s.second, t.second)};
}

long long bihom_dim(const BiVectorSpace& v, const BiVectorSpace& w) {
    return static_cast<long long>(v.m) * w.m + static_cast<long long>(v.n) * w.n;
}

BihomCount bihom_count_check(const BiVectorSpace& v, const BiVectorSpace& w,
                             long long cap) {
    BihomCount out;
    long long exponent = bihom_dim(v, w);
    out.expected = 1;
    for (long long i = 0; i < exponent; ++i) {
        out.expected *= v.p;
        if (out.expected > cap) fail("CapExceeded", "bihom enumeration above cap");
    }
    // enumerate every block pair and count the distinct assembled matrices
    std::set<std::vector<int>> assembled;
    std::vector<int> fb(static_cast<size_t>(v.m) * w.m, 0);
    std::vector<int> sb(static_cast<size_t>(v.n) * w.n, 0);
    auto bump = [&](std::vector<int>& digits) {
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == v.p) digits[i++] = 0;
        return i < digits.size();
    };
    bool more_first = true;
    while (more_first) {
        std::vector<int> sb_local = sb;
        bool more_second = true;
        while (more_second) {
            auto t = make_bilinear(v, w, mat_make(v.p, w.m, v.m, fb),
                                   mat_make(v.p, w.n, v.n, sb_local));
            assembled.insert(block_matrix(t).a);
            more_second = bump(sb_local);
        }
        more_first = bump(fb);
    }
    out.counted = static_cast<long long>(assembled.size());
    out.matches = out.counted == out.expected;
    return out;
}

BiVector bivector_add(const BiVectorSpace& v, const BiVector& x, const BiVector& y) {
    if (x.component != y.component)
        fail("ComponentMismatch", "vectors of different components never add");
    if (x.coords.size() != y.coords.size() || static_cast<int>(x.coords.size()) != dim(v))
        fail("ShapeMismatch", "vectors must live in the same space");
    BiVector out = x;
    for (size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = static_cast<int>(mod_floor(out.coords[i] + y.coords[i], v.p));
    return out;
}

namespace {

// determinant over GF(p) by Gaussian elimination
int det_gf(MatGF m) {
    if (m.rows != m.cols) fail("ShapeMismatch", "determinant needs a square matrix");
    const int n = m.rows, p = m.p;
    long long det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = mod_floor(-det, p);
        }
        det = mod_floor(det * m.at(col, col), p);
        // scale the pivot row to 1
        int inv = 1;
        for (int v = 1; v < p; ++v)
            if (mod_floor(v * m.at(col, col), p) == 1) inv = v;
        for (int c = col; c < n; ++c) m.at(col, c) = static_cast<int>(mod_floor(m.at(col, c) * inv, p));
        for (int r = col + 1; r < n; ++r) {
            int factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < n; ++c)
                m.at(r, c) = static_cast<int>(mod_floor(m.at(r, c) - factor * m.at(col, c), p));
        }
    }
    return static_cast<int>(det);
}

} // namespace

std::vector<int> char_poly_roots(const MatGF& a) {
    if (a.rows != a.cols) fail("ShapeMismatch", "eigenvalues need a square block");
    std::vector<int> roots;
    for (int lambda = 0; lambda < a.p; ++lambda) {
        MatGF shifted = a;
        for (int i = 0; i < a.rows; ++i)
            shifted.at(i, i) = static_cast<int>(mod_floor(shifted.at(i, i) - lambda, a.p));
        if (det_gf(shifted) == 0) roots.push_back(lambda);
    }
    return roots;
}

std::pair<std::vector<int>, std::vector<int>> eigen_bivalues(const BiLinearMap& t) {
    return {char_poly_roots(t.first), char_poly_roots(t.second)};
}

nlohmann::json mat_to_json(const MatGF& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

MatGF mat_from_json(int p, const nlohmann::json& doc) {
    if (!doc.is_array() || doc.empty()) fail("SchemaError", "matrix must be a nonempty array");
    int rows = static_cast<int>(doc.size());
    int cols = static_cast<int>(doc[0].size());
    std::vector<int> entries;
    for (const auto& row : doc) {
        if (static_cast<int>(row.size()) != cols) fail("SchemaError", "ragged matrix");
        for (const auto& v : row) entries.push_back(v.get<int>());
    }
    return mat_make(p, rows, cols, std::move(entries));
}

} // namespace bialg
