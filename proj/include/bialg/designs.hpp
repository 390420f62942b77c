#pragma once

#include "bialg/ringlike.hpp"

namespace bialg {

/// Block design record; invariants are recounted directly from the blocks
/// rather than trusted.
struct Design {
    int v = 0, b = 0, r = 0, k = 0, lambda = 0;
    std::vector<std::string> points;
    std::vector<std::vector<int>> blocks; // indices into points
    bool bibd = false;
    bool symmetric = false; // v == b

    /// lambda*v / (r*k), the usual quality estimate.
    double efficiency() const;
};

struct PlanarReport {
    bool planar = false;
    std::vector<std::vector<int>> equivalence_classes; // a ~ b iff x*a = x*b for all x
    std::optional<std::array<int, 3>> witness;         // violating (a, b, c)
};

/// Planarity of a right near-ring: at least three equivalence classes and a
/// unique solution x of x*a = x*b + c for every inequivalent a, b and every c.
PlanarReport planar_check(const RingTable& nr);

/// Blocks a*N + b for a != 0 (deduplicated); parameters counted directly and
/// balance verified by a full pair-count histogram.
Design bibd_from_planar(const RingTable& nr);

/// Build a design from explicit blocks; parameters recounted, bibd flag set
/// iff the balance histogram is constant.
Design design_from_blocks(std::vector<std::string> points,
                          std::vector<std::vector<int>> blocks);

/// 0/1 incidence matrix, one row per point and one column per block.
std::vector<std::vector<int>> incidence_matrix(const Design& d);

/// Reads a design back off an incidence matrix (columns become blocks).
Design design_from_incidence(const std::vector<std::vector<int>>& matrix,
                             std::vector<std::string> points = {});

/// Biplanar handling is componentwise: check each table and emit one design
/// per planar component.
std::vector<Design> biplanar_designs(const std::vector<RingTable>& components);

nlohmann::json design_to_json(const Design& d);

} // namespace bialg
