#ifndef VECON_KERNEL_HPP
#define VECON_KERNEL_HPP

#include <compare>
#include <optional>
#include <span>

#include "vecon/graph.hpp"

namespace vecon {

/// A connected piece with small boundary whose boundary is the closest
/// minimum separator between some internal demand vertex and the demand
/// vertices outside. These pieces are the replacement targets of the
/// kernelization.
struct YSet {
    vertex_set vertices;  ///< Y, sorted
    vertex_set boundary;  ///< Z = N(Y); the ascending order fixes positions
    int witness = -1;     ///< lowest qualifying demand vertex in Y
};

/// Boundary-role triple over Z, stored as sorted lists of Z positions so
/// that pieces over different graphs sharing Z compare position-wise.
struct ConnectorTriple {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;
    auto operator<=>(const ConnectorTriple&) const = default;
};

/// Boundary-role tuple for a demand vertex on the boundary itself.
struct SpecialConnector {
    int z = 0;            ///< Z position of the boundary vertex
    int multiplicity = 0; ///< paths anchored at z
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;
    auto operator<=>(const SpecialConnector&) const = default;
};

/// The satisfying connectors of one internal demand vertex: the boundary
/// interactions under which its demand can be met.
struct SatSet {
    std::vector<ConnectorTriple> triples; ///< sorted
    auto operator<=>(const SatSet&) const = default;
};

/// One row of a signature: everything a piece requires from and offers to
/// the rest of the graph under a partial solution of the given size.
struct SignatureRecord {
    int partial_size = 0;
    std::vector<SatSet> requirement;        ///< sorted, duplicates collapsed
    std::vector<ConnectorTriple> provided;  ///< sorted
    std::vector<SpecialConnector> provided_special; ///< sorted
    auto operator<=>(const SignatureRecord&) const = default;
};

/// Canonical piece summary: equal signatures license replacing one piece by
/// the other behind the shared boundary.
struct Signature {
    std::vector<SignatureRecord> records; ///< sorted, duplicates collapsed
    bool operator==(const Signature&) const = default;
};

/// Caps for the replacement search.
struct ReplacementLimits {
    int max_new_vertices = 6;
    long max_candidates = 10000; ///< graph+demand combinations per piece
    int full_kernel_d = 2;       ///< replacement attempted only for d up to this
};

/// All boundary pieces of a Rule-1/2-reduced instance, found by a branching
/// enumeration over demand vertices and filtered against the defining
/// conditions. Sorted by (size, vertex list).
std::vector<YSet> enumerate_y(const Instance& inst);

/// Signature of a piece graph h whose vertex set splits into the boundary z
/// (listed in position order) and the internal part. Demands must be zero on
/// the boundary and bounded by phi.bound(); at most bound^3 internal demand
/// vertices and at most bound boundary vertices are allowed.
Signature compute_signature(const Graph& h, std::span<const int> z, const DemandMap& phi);

/// A candidate piece on the boundary (ids 0..|Z|-1) plus fresh vertices.
struct Replacement {
    Graph graph;
    DemandMap demands; ///< zero on the boundary ids
};

/// Smallest-first search for a strictly smaller piece with an identical
/// signature. Candidates are enumerated by vertex count, then adjacency
/// bitmask, then demand vector, so the outcome is reproducible. Returns
/// nothing when no admissible candidate exists within the caps.
std::optional<Replacement> find_replacement(const Graph& h, std::span<const int> z,
                                            const DemandMap& phi,
                                            const ReplacementLimits& caps);

/// Replaces the piece y by a smaller equivalent one if the search succeeds;
/// otherwise returns nothing and the instance stands.
std::optional<Instance> apply_rule4(const Instance& inst, const YSet& y,
                                    const ReplacementLimits& caps);

/// Torso of g on w: keep w, add an edge between any two members joined by a
/// path whose internal vertices all lie outside w.
SubgraphResult torso(const Graph& g, std::span<const int> w);

struct ReplacementEvent {
    vertex_set piece;   ///< Y at the time of replacement (then-current ids)
    int new_piece_size = 0;
};

struct KernelReport {
    Instance output;
    bool rejected = false; ///< demand-count bound exceeded after reduction
    vertex_set torso_set;  ///< W in the final pre-torso instance
    std::vector<YSet> ysets;
    std::vector<ReplacementEvent> replacements;
};

/// Full kernelization pipeline: forget demands, reject on the demand-count
/// bound, shrink pieces while possible, then take the torso on the demand
/// vertices plus all piece neighborhoods. The output instance is equivalent
/// to the input.
KernelReport kernelize(const Instance& inst, const ReplacementLimits& caps = {});

} // namespace vecon

#endif
