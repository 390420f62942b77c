#pragma once

#include "bialg/core.hpp"

#include <json.hpp>

namespace bialg {

/// Dense matrix over GF(p); small and exact, row-major.
struct MatGF {
    int p = 2;
    int rows = 0, cols = 0;
    std::vector<int> a; // row-major

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

MatGF mat_make(int p, int rows, int cols, std::vector<int> entries);
MatGF mat_zero(int p, int rows, int cols);
MatGF mat_identity(int p, int n);
MatGF mat_mul(const MatGF& x, const MatGF& y);
std::vector<int> mat_apply(const MatGF& m, const std::vector<int>& v);

/// A pair of coordinate spaces over the same prime field, of dimensions m and n.
struct BiVectorSpace {
    int p = 2;
    int m = 1, n = 1;
};

BiVectorSpace make_bivector_space(int p, int m, int n);

/// dimension m + n
int dim(const BiVectorSpace& v);

/// Isomorphic iff the splits agree componentwise (equal totals do not suffice).
bool isomorphic(const BiVectorSpace& v, const BiVectorSpace& w);

/// Padded coordinate vector: exactly one block may be nonzero, matching the tag.
struct BiVector {
    int component = 0;        // 0 = first block, 1 = second
    std::vector<int> coords;  // length m + n, complementary block all zeros
};

BiVector make_bivector(const BiVectorSpace& v, int component, std::vector<int> block);

/// Componentwise sum; vectors of different components never add
/// (ComponentMismatch), mirroring the bookkeeping convention.
BiVector bivector_add(const BiVectorSpace& v, const BiVector& x, const BiVector& y);

/// Blockwise linear map: B on the first component, C on the second.
struct BiLinearMap {
    MatGF first;  // m1 x m
    MatGF second; // n1 x n
};

BiLinearMap make_bilinear(const BiVectorSpace& v, const BiVectorSpace& w, MatGF first,
                          MatGF second);

/// Component-respecting application; the image keeps the component tag.
BiVector apply(const BiLinearMap& t, const BiVectorSpace& v, const BiVectorSpace& w,
               const BiVector& x);

/// Assembled (m1+n1) x (m+n) matrix with zero off-diagonal blocks.
MatGF block_matrix(const BiLinearMap& t);

/// Blockwise composition (first with first, second with second).
BiLinearMap compose(const BiLinearMap& s, const BiLinearMap& t);

/// dim B-Hom(V, W) = m*m1 + n*n1.
long long bihom_dim(const BiVectorSpace& v, const BiVectorSpace& w);

/// Enumerates all block-map pairs over GF(p) and checks the count equals
/// p^(m*m1 + n*n1).  Feasible only for tiny parameters.
struct BihomCount {
    long long expected = 0;
    long long counted = 0;
    bool matches = false;
};

BihomCount bihom_count_check(const BiVectorSpace& v, const BiVectorSpace& w,
                             long long cap = 1 << 22);

/// Roots of det(A - xI) over GF(p), listed by scanning the field; no
/// algebraic closure machinery.  Needs a square matrix.
std::vector<int> char_poly_roots(const MatGF& a);

/// Eigen-analysis of a blockwise map is per block: the two root lists.
std::pair<std::vector<int>, std::vector<int>> eigen_bivalues(const BiLinearMap& t);

nlohmann::json mat_to_json(const MatGF& m);
MatGF mat_from_json(int p, const nlohmann::json& doc);

} // namespace bialg
