#ifndef VECON_IO_HPP
#define VECON_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "vecon/graph.hpp"
#include "vecon/hardness.hpp"

namespace vecon {

/// Instance text format, 0-based ids:
///   p vc <n> <m> <k> <d>
///   e <u> <v>                 one line per edge
///   d <v> <phi>               one line per vertex with nonzero demand
///   c ...                     comment
/// Parsing reports the offending line; serialization is canonical (sorted
/// edge and demand lines), so serialize(parse(x)) == canonical(x) bit-exactly.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

/// Hitting Set text format:
///   p hs <n> <m> <k>
///   s <e1> <e2> ...           one line per set
///   c ...                     comment
HittingSetInstance parse_hs(std::string_view text);
std::string serialize_hs(const HittingSetInstance& hs);

/// Vertex list: whitespace-separated ids, `c` comment lines allowed.
vertex_set parse_solution(std::string_view text, const Graph& g);

struct GenParams {
    int n = 8;
    double edge_prob = 0.3;
    std::string demand_dist = "uniform"; ///< uniform | zero | sparse:<p>
    int d = 2;
    int k = 3;
    std::uint64_t seed = 1;
};

/// Seeded random instance; identical parameters reproduce identical
/// instances (the generator avoids platform-dependent distributions).
Instance gen_random(const GenParams& params);

/// FNV-1a 64-bit content digest, as "fnv1a64:<hex>".
std::string content_digest(std::string_view bytes);

} // namespace vecon

#endif
