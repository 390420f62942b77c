#include "bialg/designs.hpp"

#include <algorithm>
#include <map>

namespace bialg {

double Design::efficiency() const {
    if (r == 0 || k == 0) return 0.0;
    return static_cast<double>(lambda) * v / (static_cast<double>(r) * k);
}

PlanarReport planar_check(const RingTable& nr) {
    auto rc = classify_ringlike(nr);
    if (!rc.right_near_ring) fail("NotNearRing", nr.name() + " is not a right near-ring");
    const int n = nr.size();

    // a ~ b iff the right translation columns coincide
    PlanarReport rep;
    std::vector<int> cls(n, -1);
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = static_cast<int>(rep.equivalence_classes.size());
        rep.equivalence_classes.push_back({a});
        for (int b = a + 1; b < n; ++b) {
            if (cls[b] >= 0) continue;
            bool same = true;
            for (int x = 0; x < n; ++x)
                if (nr.mul(x, a) != nr.mul(x, b)) {
                    same = false;
                    break;
                }
            if (same) {
                cls[b] = cls[a];
                rep.equivalence_classes.back().push_back(b);
            }
        }
    }

    if (rep.equivalence_classes.size() < 3) {
        rep.planar = false;
        return rep;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (cls[a] == cls[b]) continue;
            for (int c = 0; c < n; ++c) {
                int solutions = 0;
                for (int x = 0; x < n; ++x)
                    if (nr.mul(x, a) == nr.add(nr.mul(x, b), c)) ++solutions;
                if (solutions != 1) {
                    rep.witness = {a, b, c};
                    rep.planar = false;
                    return rep;
                }
            }
        }
    rep.planar = true;
    return rep;
}

namespace {

Design count_parameters(std::vector<std::string> points,
                        std::vector<std::vector<int>> blocks) {
    Design d;
    d.points = std::move(points);
    d.blocks = std::move(blocks);
    d.v = static_cast<int>(d.points.size());
    d.b = static_cast<int>(d.blocks.size());

    std::vector<int> point_count(d.v, 0);
    std::map<std::pair<int, int>, int> pair_count;
    std::set<int> sizes;
    for (auto& blk : d.blocks) {
        std::sort(blk.begin(), blk.end());
        sizes.insert(static_cast<int>(blk.size()));
        for (size_t i = 0; i < blk.size(); ++i) {
            ++point_count[blk[i]];
            for (size_t j = i + 1; j < blk.size(); ++j) ++pair_count[{blk[i], blk[j]}];
        }
    }
    d.k = sizes.size() == 1 ? *sizes.begin() : 0;
    std::set<int> rs(point_count.begin(), point_count.end());
    d.r = rs.size() == 1 ? *rs.begin() : 0;
    // the histogram must cover every unordered pair with a constant count
    std::set<int> lambdas;
    for (int i = 0; i < d.v; ++i)
        for (int j = i + 1; j < d.v; ++j) {
            auto it = pair_count.find({i, j});
            lambdas.insert(it == pair_count.end() ? 0 : it->second);
        }
    d.lambda = lambdas.size() == 1 ? *lambdas.begin() : 0;

    bool balanced = sizes.size() == 1 && rs.size() == 1 && lambdas.size() == 1 &&
                    d.lambda > 0 && d.k < d.v;
    bool identities = balanced && d.b * d.k == d.r * d.v &&
                      d.r * (d.k - 1) == d.lambda * (d.v - 1) && d.b >= d.v;
    d.bibd = identities;
    d.symmetric = d.v == d.b;
    return d;
}

} // namespace

Design bibd_from_planar(const RingTable& nr) {
    auto rep = planar_check(nr);
    if (!rep.planar) fail("NotPlanar", nr.name() + " is not planar");
    auto rc = classify_ringlike(nr);
    const int n = nr.size();
    const int zero = *rc.zero;

    std::set<std::vector<int>> blocks;
    for (int a = 0; a < n; ++a) {
        if (a == zero) continue;
        std::set<int> aN;
        for (int x = 0; x < n; ++x) aN.insert(nr.mul(a, x));
        for (int b = 0; b < n; ++b) {
            std::set<int> blk;
            for (int x : aN) blk.insert(nr.add(x, b));
            blocks.insert(std::vector<int>(blk.begin(), blk.end()));
        }
    }
    auto d = count_parameters(nr.labels(),
                              std::vector<std::vector<int>>(blocks.begin(), blocks.end()));
    if (!d.bibd) fail("NotBalanced", "block family is not balanced");
    return d;
}

Design design_from_blocks(std::vector<std::string> points,
                          std::vector<std::vector<int>> blocks) {
    for (const auto& blk : blocks)
        for (int p : blk)
            if (p < 0 || p >= static_cast<int>(points.size()))
                fail("IndexOutOfRange", "block entry outside the point set");
    return count_parameters(std::move(points), std::move(blocks));
}

std::vector<std::vector<int>> incidence_matrix(const Design& d) {
    std::vector<std::vector<int>> m(d.v, std::vector<int>(d.b, 0));
    for (int j = 0; j < d.b; ++j)
        for (int p : d.blocks[j]) m[p][j] = 1;
    return m;
}

Design design_from_incidence(const std::vector<std::vector<int>>& matrix,
                             std::vector<std::string> points) {
    const int v = static_cast<int>(matrix.size());
    if (v == 0) return Design{};
    const int b = static_cast<int>(matrix[0].size());
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != b) fail("SchemaError", "ragged incidence matrix");
    if (points.empty())
        for (int i = 0; i < v; ++i) points.push_back("p" + std::to_string(i));
    std::vector<std::vector<int>> blocks(b);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < b; ++j)
            if (matrix[i][j]) blocks[j].push_back(i);
    return design_from_blocks(std::move(points), std::move(blocks));
}

std::vector<Design> biplanar_designs(const std::vector<RingTable>& components) {
    std::vector<Design> out;
    for (const auto& c : components) out.push_back(bibd_from_planar(c));
    return out;
}

nlohmann::json design_to_json(const Design& d) {
    nlohmann::json j;
    j["v"] = d.v;
    j["b"] = d.b;
    j["r"] = d.r;
    j["k"] = d.k;
    j["lambda"] = d.lambda;
    j["bibd"] = d.bibd;
    j["symmetric"] = d.symmetric;
    j["efficiency"] = d.efficiency();
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& blk : d.blocks) {
        nlohmann::json row = nlohmann::json::array();
        for (int p : blk) row.push_back(d.points[p]);
        blocks.push_back(row);
    }
    j["blocks"] = blocks;
    // incidence rows as 0/1 strings for downstream code construction
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& row : incidence_matrix(d)) {
        std::string s;
        for (int v : row) s += v ? '1' : '0';
        inc.push_back(s);
    }
    j["incidence"] = inc;
    return j;
}

} // namespace bialg
