#ifndef LFMRA_TREES_HPP
#define LFMRA_TREES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lfmra/gf.hpp"

namespace lfmra {

/// Rooted tree on the vertex set GF(p^s) with root 0. Vertices are GF element
/// indices; parent[v] is defined for v = 1..q-1 and parent[0] == -1.
struct RootedTree {
    std::vector<int> parent;
    int height = 0;                // vertices on the longest root-leaf path
    std::vector<int> first_level;  // children of the root, ascending
    bool operator==(const RootedTree& o) const { return parent == o.parent; }
};

/// Validates a total parent map on GF(p^s)\{0}; computes height and the
/// first-level vertex list. Throws ValidationError on cycles, missing or
/// extra keys, or out-of-range vertices.
RootedTree tree_validate(const FieldParams& f, const std::map<int, int>& parent);

/// Root-to-v path (0, u_j, ..., v); throws on v == 0.
std::vector<int> tree_path(const RootedTree& t, int v);

/// Standard Pruefer bijection on labels 0..q-1, rooted afterward at 0 by
/// orienting every edge toward 0. seq has length q-2 (q >= 2).
RootedTree prufer_decode(const FieldParams& f, const std::vector<int>& seq);
std::vector<int> prufer_encode(const FieldParams& f, const RootedTree& t);

long long tree_count(const FieldParams& f); // (p^s)^(p^s-2)

/// Decode of the base-q digits of index (least significant digit first).
RootedTree tree_from_index(const FieldParams& f, long long index);

RootedTree tree_random(const FieldParams& f, uint64_t seed);

/// Calls fn for every tree in index order; throws if tree_count exceeds cap.
void tree_enumerate(const FieldParams& f, long long cap,
                    const std::function<void(long long, const RootedTree&)>& fn);

RootedTree star_tree(const FieldParams& f);

} // namespace lfmra

#endif
