#pragma once

// Block-structured state space: every entity carries 3k coordinates ordered
// [physical | digital | social] with a uniform block size k.

#include <string>
#include <utility>

#include "phygital/linalg.hpp"
#include "phygital/mass.hpp"

namespace phygital {

struct DimensionLayout {
    int k = 1;  // coordinates per dimension block

    DimensionLayout() = default;
    explicit DimensionLayout(int k_) : k(k_) {
        if (k < 1) throw StructuralError("DimensionLayout: k must be >= 1");
    }
    int total() const { return 3 * k; }
};

struct PhygitalState {
    DimensionLayout layout;
    Vec coords;  // length 3k, [p | d | s]

    PhygitalState() : coords(Vec::Zero(3)) {}
    PhygitalState(DimensionLayout l, Vec c) : layout(l), coords(std::move(c)) {
        if (coords.size() != layout.total())
            throw StructuralError("PhygitalState: coords length != 3k");
        if (!coords.allFinite()) throw NumericError("PhygitalState: non-finite coordinate");
    }
};

struct BlockView {
    Vec physical, digital, social;
};

// Three length-k copies whose concatenation reproduces coords exactly.
inline BlockView split_blocks(const PhygitalState& s) {
    const int k = s.layout.k;
    if (s.coords.size() != 3 * k) throw StructuralError("split_blocks: malformed state length");
    return BlockView{s.coords.segment(0, k), s.coords.segment(k, k), s.coords.segment(2 * k, k)};
}

// Raw-vector variant used by I/O paths; rejects lengths not divisible by 3.
inline BlockView split_blocks(const Vec& coords) {
    if (coords.size() % 3 != 0 || coords.size() == 0)
        throw StructuralError("split_blocks: length not divisible by 3");
    const int k = int(coords.size()) / 3;
    return BlockView{coords.segment(0, k), coords.segment(k, k), coords.segment(2 * k, k)};
}

enum class EntityKind { biological, synthetic, platform, object };

inline const char* kind_name(EntityKind k) {
    switch (k) {
        case EntityKind::biological: return "biological";
        case EntityKind::synthetic: return "synthetic";
        case EntityKind::platform: return "platform";
        case EntityKind::object: return "object";
    }
    return "?";
}

struct Entity {
    std::string id;
    PhygitalState state;
    MassTensor mass;
    EntityKind kind = EntityKind::biological;

    // A synthetic entity must have a degenerate physical block.
    void validate() const {
        if (id.empty()) throw StructuralError("Entity: empty id");
        if (kind == EntityKind::synthetic) {
            const Mat3& m = mass.matrix();
            if (m.row(0).norm() > mass.rank_tol() || m.col(0).norm() > mass.rank_tol())
                throw StructuralError("Entity '" + id +
                                      "': synthetic kind requires zero physical row/column");
        }
    }
};

}  // namespace phygital
