#ifndef CROSSWALK_GEOMETRY_HPP
#define CROSSWALK_GEOMETRY_HPP

#include <cstdlib>
#include <stdexcept>

namespace crosswalk {

// One gridworld cell. col grows eastward, row grows southward.
struct Cell {
    int col = 0;
    int row = 0;

    bool operator==(const Cell&) const = default;
};

inline int manhattan(const Cell& a, const Cell& b) {
    return std::abs(a.col - b.col) + std::abs(a.row - b.row);
}

// Rectangular gridworld. distance_cap is the ceiling x of the proximity
// function d(s1,s2) in [0,x].
struct GridWorld {
    int width = 7;
    int height = 7;
    int distance_cap = 6;

    GridWorld() = default;
    GridWorld(int w, int h, int cap = 6) : width(w), height(h), distance_cap(cap) {
        if (width < 2 || height < 2)
            throw std::invalid_argument("GridWorld: width and height must be >= 2");
        if (distance_cap <= 0)
            throw std::invalid_argument("GridWorld: distance_cap must be > 0");
    }

    bool contains(const Cell& c) const {
        return c.col >= 0 && c.col < width && c.row >= 0 && c.row < height;
    }

    Cell clamp(const Cell& c) const {
        Cell out = c;
        if (out.col < 0) out.col = 0;
        if (out.col >= width) out.col = width - 1;
        if (out.row < 0) out.row = 0;
        if (out.row >= height) out.row = height - 1;
        return out;
    }
};

// Proximity d(s1,s2): Manhattan distance clamped to the cap.
inline int proximity(const Cell& s1, const Cell& s2, int cap) {
    int d = manhattan(s1, s2);
    return d < cap ? d : cap;
}

} // namespace crosswalk

#endif
