#pragma once

// Structured triangulation of the unit disk: a center vertex plus ring k of
// 8k evenly spaced vertices at radius k/rings, triangulated band by band.
// rings=1 gives 9 nodes / 8 triangles; in general 1+4r(r+1) nodes and 8r^2
// triangles. The outer ring carries boundary marker 1. Fully deterministic.

#include <numbers>
#include <vector>

#include "dec2d/mesh.hpp"

namespace dec2d {

inline TriangleMesh gen_disk_mesh(int rings) {
    if (rings < 1) throw MeshError("gen_disk_mesh: rings must be >= 1");

    std::vector<Point2> vertices;
    std::vector<int> markers;
    vertices.push_back({0.0, 0.0});
    markers.push_back(0);

    // ring_start[k] = index of the first vertex of ring k (1-based rings).
    std::vector<int> ring_start(static_cast<std::size_t>(rings) + 1, 0);
    for (int k = 1; k <= rings; ++k) {
        ring_start[static_cast<std::size_t>(k)] = static_cast<int>(vertices.size());
        const double radius = static_cast<double>(k) / rings;
        const int count = 8 * k;
        for (int j = 0; j < count; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / count;
            vertices.push_back({radius * std::cos(theta), radius * std::sin(theta)});
            markers.push_back(k == rings ? 1 : 0);
        }
    }

    const auto ring_vertex = [&](int k, int j) {
        if (k == 0) return 0;
        return ring_start[static_cast<std::size_t>(k)] + (j % (8 * k) + 8 * k) % (8 * k);
    };

    std::vector<std::array<int, 3>> triangles;
    for (int k = 1; k <= rings; ++k) {
        if (k == 1) {
            for (int s = 0; s < 8; ++s)
                triangles.push_back({ring_vertex(1, s), ring_vertex(1, s + 1), 0});
            continue;
        }
        // Band between ring k-1 and ring k, one merge per 45-degree sector.
        // Pointers advance through the sector's inner (k) and outer (k+1)
        // vertices in angle order; ties go to the outer ring.
        for (int s = 0; s < 8; ++s) {
            int a = 0; // inner offset within sector, 0..k-1
            int b = 0; // outer offset within sector, 0..k
            const auto inner = [&](int off) { return ring_vertex(k - 1, s * (k - 1) + off); };
            const auto outer = [&](int off) { return ring_vertex(k, s * k + off); };
            const auto inner_angle = [&](int off) {
                return static_cast<double>(s * (k - 1) + off) / (8.0 * (k - 1));
            };
            const auto outer_angle = [&](int off) {
                return static_cast<double>(s * k + off) / (8.0 * k);
            };
            while (a < k - 1 || b < k) {
                const bool advance_outer =
                    b < k && (a == k - 1 || outer_angle(b + 1) <= inner_angle(a + 1));
                if (advance_outer) {
                    triangles.push_back({outer(b), outer(b + 1), inner(a)});
                    ++b;
                } else {
                    triangles.push_back({inner(a + 1), inner(a), outer(b)});
                    ++a;
                }
            }
        }
    }

    return build_mesh(std::move(vertices), std::move(triangles), std::move(markers));
}

} // namespace dec2d
