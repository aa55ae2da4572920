#include "lfmra/trees.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace lfmra {

namespace {

void finish(const FieldParams& f, RootedTree& t) {
    int q = f.order();
    t.first_level.clear();
    std::vector<int> depth(q, -1); // vertices on the root-to-v path
    depth[0] = 1;
    t.height = 1;
    for (int v = 1; v < q; ++v) {
        // walk to the first vertex with known depth
        std::vector<int> chain;
        int w = v;
        while (depth[w] < 0) {
            chain.push_back(w);
            w = t.parent[w];
        }
        int d = depth[w];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth[*it] = ++d;
        t.height = std::max(t.height, d);
        if (t.parent[v] == 0) t.first_level.push_back(v);
    }
}

} // namespace

RootedTree tree_validate(const FieldParams& f, const std::map<int, int>& parent) {
    int q = f.order();
    RootedTree t;
    t.parent.assign(q, -1);
    for (auto [v, p] : parent) {
        if (v <= 0 || v >= q)
            throw ValidationError("tree: vertex out of range or root among keys");
        if (p < 0 || p >= q) throw ValidationError("tree: parent out of range");
        t.parent[v] = p;
    }
    for (int v = 1; v < q; ++v)
        if (t.parent[v] < 0)
            throw ValidationError("tree: missing parent for vertex " + std::to_string(v));
    // reachability of the root from every vertex
    std::vector<int> state(q, 0); // 0 unvisited, 1 on stack, 2 done
    state[0] = 2;
    for (int v = 1; v < q; ++v) {
        std::vector<int> chain;
        int w = v;
        while (state[w] == 0) {
            state[w] = 1;
            chain.push_back(w);
            w = t.parent[w];
        }
        if (state[w] == 1) throw ValidationError("tree: cycle detected");
        for (int u : chain) state[u] = 2;
    }
    finish(f, t);
    return t;
}

std::vector<int> tree_path(const RootedTree& t, int v) {
    if (v == 0) throw ValidationError("tree_path: v must be nonzero");
    std::vector<int> path;
    for (int w = v; w != 0; w = t.parent[w]) path.push_back(w);
    path.push_back(0);
    std::reverse(path.begin(), path.end());
    return path;
}

RootedTree prufer_decode(const FieldParams& f, const std::vector<int>& seq) {
    int q = f.order();
    if (q < 2) throw ValidationError("prufer: need at least 2 vertices");
    if (static_cast<int>(seq.size()) != q - 2)
        throw ValidationError("prufer: sequence must have length p^s - 2");
    for (int v : seq)
        if (v < 0 || v >= q) throw ValidationError("prufer: entry out of range");

    std::vector<int> degree(q, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::vector<int>> adj(q);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        adj[leaf].push_back(v);
        adj[v].push_back(leaf);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    // last edge joins the final leaf to q-1
    adj[leaf].push_back(q - 1);
    adj[q - 1].push_back(leaf);

    RootedTree t;
    t.parent.assign(q, -1);
    std::queue<int> bfs;
    bfs.push(0);
    std::vector<char> seen(q, 0);
    seen[0] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                t.parent[w] = v;
                bfs.push(w);
            }
    }
    finish(f, t);
    return t;
}

std::vector<int> prufer_encode(const FieldParams& f, const RootedTree& t) {
    int q = f.order();
    std::vector<std::vector<int>> adj(q);
    for (int v = 1; v < q; ++v) {
        adj[v].push_back(t.parent[v]);
        adj[t.parent[v]].push_back(v);
    }
    std::vector<int> degree(q);
    for (int v = 0; v < q; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<char> removed(q, 0);
    std::vector<int> seq;
    seq.reserve(q - 2);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < q - 2; ++step) {
        int next = -1;
        for (int w : adj[leaf])
            if (!removed[w]) next = w;
        seq.push_back(next);
        removed[leaf] = 1;
        if (--degree[next] == 1 && next < ptr) {
            leaf = next;
        } else {
            ++ptr;
            while (ptr < q && degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

long long tree_count(const FieldParams& f) {
    long long q = f.order(), r = 1;
    for (int i = 0; i < f.order() - 2; ++i) {
        if (r > (1LL << 56) / q) throw Error("tree_count: overflow");
        r *= q;
    }
    return r;
}

RootedTree tree_from_index(const FieldParams& f, long long index) {
    int q = f.order();
    std::vector<int> seq(std::max(q - 2, 0));
    for (auto& v : seq) {
        v = static_cast<int>(index % q);
        index /= q;
    }
    return prufer_decode(f, seq);
}

RootedTree tree_random(const FieldParams& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int q = f.order();
    std::uniform_int_distribution<int> dist(0, q - 1);
    std::vector<int> seq(std::max(q - 2, 0));
    for (auto& v : seq) v = dist(rng);
    return prufer_decode(f, seq);
}

void tree_enumerate(const FieldParams& f, long long cap,
                    const std::function<void(long long, const RootedTree&)>& fn) {
    long long n = tree_count(f);
    if (n > cap)
        throw ValidationError("tree_enumerate: " + std::to_string(n) +
                              " trees exceed cap " + std::to_string(cap));
    for (long long i = 0; i < n; ++i) fn(i, tree_from_index(f, i));
}

RootedTree star_tree(const FieldParams& f) {
    RootedTree t;
    t.parent.assign(f.order(), 0);
    t.parent[0] = -1;
    finish(f, t);
    return t;
}

} // namespace lfmra
