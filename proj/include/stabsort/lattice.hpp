#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace stabsort {

// Lattice vertex. Lexicographic (x, y, z) order is the canonical order used
// wherever indexing must be deterministic.
struct Site {
    int x = 0, y = 0, z = 0;

    friend auto operator<=>(const Site&, const Site&) = default;
    Site operator+(const Site& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Site operator-(const Site& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Site operator-() const { return {-x, -y, -z}; }
    int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
    int& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
};

inline Site axis_unit(int axis) {
    Site s;
    s[axis] = 1;
    return s;
}

struct SiteHash {
    std::size_t operator()(const Site& s) const {
        uint64_t h = uint64_t(uint32_t(s.x));
        h = h * 0x9e3779b97f4a7c15ull + uint64_t(uint32_t(s.y));
        h = h * 0x9e3779b97f4a7c15ull + uint64_t(uint32_t(s.z));
        h ^= h >> 31;
        return std::size_t(h * 0xbf58476d1ce4e5b9ull);
    }
};

struct Box {
    Site lo, hi;  // inclusive

    bool contains(const Site& s) const {
        return s.x >= lo.x && s.x <= hi.x && s.y >= lo.y && s.y <= hi.y && s.z >= lo.z && s.z <= hi.z;
    }
    Box padded(int m) const { return {{lo.x - m, lo.y - m, lo.z - m}, {hi.x + m, hi.y + m, hi.z + m}}; }
    int extent(int axis) const { return hi[axis] - lo[axis] + 1; }

    template <typename F>
    void for_each(F&& f) const {
        for (int x = lo.x; x <= hi.x; ++x)
            for (int y = lo.y; y <= hi.y; ++y)
                for (int z = lo.z; z <= hi.z; ++z) f(Site{x, y, z});
    }
};

inline Box bounding_box(const std::vector<Site>& sites) {
    Box b{sites.front(), sites.front()};
    for (const Site& s : sites) {
        for (int a = 0; a < 3; ++a) {
            if (s[a] < b.lo[a]) b.lo[a] = s[a];
            if (s[a] > b.hi[a]) b.hi[a] = s[a];
        }
    }
    return b;
}

}  // namespace stabsort
