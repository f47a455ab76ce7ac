#pragma once

#include "polytile/polygon.hpp"
#include "polytile/tiling_desc.hpp"

#include <optional>

namespace polytile {

// One orbit family of vertex-sharing equivalence classes. The representative
// class is base (+) H; its translates under the description's global lattice
// are the remaining classes of the family.
struct ClassFamily {
    Component representative; // descaled: base points and H generators
    Subgroup h_scaled;        // displacement group of the class, scaled world
    long long class_count = 0; // classes in this family; -1 when infinite
};

struct ClassPartition {
    long long scale = 1;     // q with q*T described over Z^2
    Lattice global_scaled;   // intersection lattice of the description, scaled
    std::vector<ClassFamily> families;
    long long total_classes = 0; // -1 when infinite

    // membership tables (scaled world): quotient nodes with their family and
    // lift displacement
    std::vector<IVec> nodes_scaled;
    std::vector<int> node_family;
    std::vector<IVec> node_phi;

    bool single_class() const { return total_classes == 1; }
};

// Transitive closure of the vertex-sharing relation t ~ t' (translated vertex
// sets meet), computed on the quotient by the description's lattice with
// displacement tracking.
ClassPartition vertex_share_classes(const IntegerPolygonalSet& omega,
                                    const TilingDesc& desc);

// Which class of the partition a translate belongs to: (family, coset of H).
struct ClassKey {
    int family = -1;
    IVec coset{0, 0};
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};
ClassKey class_key_of(const ClassPartition& classes, const RatPoint& translate);

// Common direction along which every class union is a full open strip;
// nullopt for a single class. Throws InvariantViolation when more than one
// class exists but no direction fits (impossible for a verified tiling).
std::optional<IVec> sliding_direction(const IntegerPolygonalSet& omega,
                                      const TilingDesc& desc,
                                      const ClassPartition& classes);

struct StripOffset {
    Component strip;  // the class being slid (descaled, original coordinates)
    Rational offset;  // multiple of the slide direction
};

struct MergeResult {
    TilingDesc merged;       // integral periodic description of T'
    IVec direction{0, 1};    // the slide direction used
    std::vector<StripOffset> offsets;
};

// Slides whole classes along the common direction so that adjacent strips
// share a vertex, producing an integer tiling with a single class.
MergeResult merge_by_sliding(const IntegerPolygonalSet& omega, const TilingDesc& desc);

} // namespace polytile
