#include "crossfield/meshgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace crossfield {

namespace {

double tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return (b - a).cross(c - a).dot(d - a) / 6.0;
}

// Appends a tet, swapping two vertices if the orientation is negative.
void push_tet(TetMesh& mesh, std::array<int, 4> tet) {
    const double vol = tet_volume(mesh.vertices[tet[0]], mesh.vertices[tet[1]],
                                  mesh.vertices[tet[2]], mesh.vertices[tet[3]]);
    if (vol < 0.0) std::swap(tet[2], tet[3]);
    mesh.tets.push_back(tet);
}

// Splits the prism with bottom triangle (a,b,c), top (a',b',c') into three
// tets. Quad-face diagonals run from the smaller bottom index to the top of
// the other corner, so adjacent prisms agree on shared faces; bottom indices
// must all be smaller than top indices.
void split_prism(TetMesh& mesh, std::array<int, 3> bottom, std::array<int, 3> top) {
    // Sort the bottom triangle, carrying the top along.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (bottom[j] < bottom[i]) {
                std::swap(bottom[i], bottom[j]);
                std::swap(top[i], top[j]);
            }
        }
    }
    const auto [a, b, c] = bottom;
    const auto [a2, b2, c2] = top;
    push_tet(mesh, {a, b, c, c2});
    push_tet(mesh, {a, b, c2, b2});
    push_tet(mesh, {a, b2, c2, a2});
}

struct IcoSurface {
    std::vector<Vec3> vertices;                 // unit vectors
    std::vector<std::array<int, 3>> triangles;
};

IcoSurface icosphere(int subdivisions) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    IcoSurface s;
    const double raw[12][3] = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                               {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                               {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (const auto& v : raw) {
        s.vertices.push_back(Vec3(v[0], v[1], v[2]).normalized());
    }
    s.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                   {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                   {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                   {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int u, int v) {
            const auto key = std::minmax(u, v);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const int idx = static_cast<int>(s.vertices.size());
            s.vertices.push_back((s.vertices[u] + s.vertices[v]).normalized());
            midpoint[key] = idx;
            return idx;
        };
        std::vector<std::array<int, 3>> refined;
        refined.reserve(s.triangles.size() * 4);
        for (const auto& t : s.triangles) {
            const int ab = mid(t[0], t[1]);
            const int bc = mid(t[1], t[2]);
            const int ca = mid(t[2], t[0]);
            refined.push_back({t[0], ab, ca});
            refined.push_back({t[1], bc, ab});
            refined.push_back({t[2], ca, bc});
            refined.push_back({ab, bc, ca});
        }
        s.triangles = std::move(refined);
    }
    return s;
}

}  // namespace

TetMesh make_cube_mesh(int n) {
    if (n < 1) throw std::invalid_argument("cube grid needs n >= 1");
    TetMesh mesh;
    const int stride = n + 1;
    auto vid = [stride](int i, int j, int k) { return i + stride * (j + stride * k); };

    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i)
                mesh.vertices.push_back(Vec3(double(i) / n, double(j) / n, double(k) / n));

    // Six tets around the main diagonal of each cell, one per axis order.
    constexpr int axis_orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                for (const auto& order : axis_orders) {
                    std::array<int, 4> tet;
                    int c[3] = {i, j, k};
                    tet[0] = vid(c[0], c[1], c[2]);
                    for (int step = 0; step < 3; ++step) {
                        c[order[step]] += 1;
                        tet[step + 1] = vid(c[0], c[1], c[2]);
                    }
                    push_tet(mesh, tet);
                }
            }
        }
    }
    mesh.build_topology();
    return mesh;
}

TetMesh make_sphere_mesh(int subdivisions, int layers) {
    if (layers < 1) throw std::invalid_argument("sphere mesh needs layers >= 1");
    const IcoSurface surface = icosphere(subdivisions);
    const int nv = static_cast<int>(surface.vertices.size());

    TetMesh mesh;
    mesh.vertices.push_back(Vec3::Zero());  // center, index 0
    for (int shell = 1; shell <= layers; ++shell) {
        const double r = static_cast<double>(shell) / layers;
        for (const Vec3& u : surface.vertices) mesh.vertices.push_back(r * u);
    }
    auto shell_vid = [nv](int shell, int v) { return 1 + (shell - 1) * nv + v; };

    for (const auto& tri : surface.triangles) {
        push_tet(mesh, {0, shell_vid(1, tri[0]), shell_vid(1, tri[1]), shell_vid(1, tri[2])});
        for (int shell = 1; shell < layers; ++shell) {
            split_prism(mesh,
                        {shell_vid(shell, tri[0]), shell_vid(shell, tri[1]),
                         shell_vid(shell, tri[2])},
                        {shell_vid(shell + 1, tri[0]), shell_vid(shell + 1, tri[1]),
                         shell_vid(shell + 1, tri[2])});
        }
    }
    mesh.build_topology();
    return mesh;
}

}  // namespace crossfield
