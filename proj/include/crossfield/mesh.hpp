#ifndef CROSSFIELD_MESH_HPP
#define CROSSFIELD_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "crossfield/types.hpp"

namespace crossfield {

// Tetrahedral mesh with derived topology. Vertices and tets are the input;
// edges, boundary triangles (with outward unit normals) and the vertex
// adjacency are filled by build_topology(). Immutable after load.
struct TetMesh {
    struct BoundaryTriangle {
        std::array<int, 3> v{};
        Vec3 normal = Vec3::Zero();  // unit, outward
    };

    std::vector<Vec3> vertices;
    std::vector<std::array<int, 4>> tets;

    std::vector<std::array<int, 2>> edges;           // deduplicated, i < j
    std::vector<BoundaryTriangle> boundary;          // faces owned by one tet
    std::vector<std::vector<int>> adjacency;         // per-vertex neighbors
    std::vector<char> on_boundary;                   // per-vertex flag

    // Derives edges, adjacency, boundary faces and normals. Throws
    // TopologyError on out-of-range indices or faces shared by 3+ tets.
    void build_topology();

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

enum class MeshFormat { msh_ascii, simple_tet };

// Loads a mesh and builds its topology.
//
// msh_ascii is the Gmsh MSH 2.2 ASCII subset ($MeshFormat / $Nodes /
// $Elements, element type 4 = 4-node tetrahedron); other element types are
// skipped with a warning on stderr. simple_tet is "nv nt", then nv lines
// "x y z", then nt lines "i j k l" with 0-based indices.
TetMesh load_mesh(const std::string& path, MeshFormat format);

// Same, picking the format from the extension (.msh -> msh_ascii).
TetMesh load_mesh(const std::string& path);

// Writes the Gmsh MSH 2.2 ASCII form readable by load_mesh.
void write_msh(const std::string& path, const TetMesh& mesh);

}  // namespace crossfield

#endif  // CROSSFIELD_MESH_HPP
