#include "crossfield/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace crossfield {

namespace {

Vec3 tet_centroid(const TetMesh& mesh, const std::array<int, 4>& tet) {
    Vec3 c = Vec3::Zero();
    for (int v : tet) c += mesh.vertices[v];
    return c / 4.0;
}

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
    throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void TetMesh::build_topology() {
    const int nv = vertex_count();
    for (const auto& tet : tets) {
        for (int v : tet) {
            if (v < 0 || v >= nv) {
                throw TopologyError("tet references vertex " + std::to_string(v) + " of " +
                                    std::to_string(nv));
            }
        }
    }

    std::set<std::array<int, 2>> edge_set;
    // face (sorted) -> (count, owning tet)
    std::map<std::array<int, 3>, std::pair<int, int>> face_count;
    for (std::size_t t = 0; t < tets.size(); ++t) {
        const auto& tet = tets[t];
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                edge_set.insert({std::min(tet[i], tet[j]), std::max(tet[i], tet[j])});
            }
            std::array<int, 3> face;
            int slot = 0;
            for (int j = 0; j < 4; ++j) {
                if (j != i) face[slot++] = tet[j];
            }
            std::sort(face.begin(), face.end());
            auto [it, inserted] = face_count.try_emplace(face, 0, static_cast<int>(t));
            it->second.first++;
            if (it->second.first > 2) {
                throw TopologyError("face shared by more than two tets");
            }
        }
    }

    edges.assign(edge_set.begin(), edge_set.end());
    adjacency.assign(nv, {});
    for (const auto& e : edges) {
        adjacency[e[0]].push_back(e[1]);
        adjacency[e[1]].push_back(e[0]);
    }

    boundary.clear();
    on_boundary.assign(nv, 0);
    for (const auto& [face, info] : face_count) {
        if (info.first != 1) continue;
        BoundaryTriangle tri;
        tri.v = face;
        const Vec3& a = vertices[face[0]];
        const Vec3& b = vertices[face[1]];
        const Vec3& c = vertices[face[2]];
        Vec3 n = (b - a).cross(c - a);
        const double len = n.norm();
        if (len < 1e-30) {
            throw TopologyError("degenerate boundary triangle");
        }
        n /= len;
        const Vec3 face_centroid = (a + b + c) / 3.0;
        if (n.dot(face_centroid - tet_centroid(*this, tets[info.second])) < 0.0) {
            n = -n;
        }
        tri.normal = n;
        boundary.push_back(tri);
        for (int v : face) on_boundary[v] = 1;
    }
}

TetMesh load_mesh(const std::string& path, MeshFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw FileError("cannot open mesh file: " + path);
    }

    TetMesh mesh;
    int line_no = 0;
    std::string line;
    auto next_line = [&](const char* context) {
        if (!std::getline(in, line)) parse_fail(path, line_no, std::string("unexpected end of file in ") + context);
        ++line_no;
        return line;
    };

    if (format == MeshFormat::simple_tet) {
        std::istringstream header(next_line("header"));
        int nv = 0, nt = 0;
        if (!(header >> nv >> nt) || nv < 0 || nt < 0) parse_fail(path, line_no, "expected 'nv nt'");
        mesh.vertices.reserve(nv);
        for (int i = 0; i < nv; ++i) {
            std::istringstream ls(next_line("vertices"));
            Vec3 p;
            if (!(ls >> p(0) >> p(1) >> p(2))) parse_fail(path, line_no, "expected 'x y z'");
            mesh.vertices.push_back(p);
        }
        mesh.tets.reserve(nt);
        for (int i = 0; i < nt; ++i) {
            std::istringstream ls(next_line("tets"));
            std::array<int, 4> tet;
            if (!(ls >> tet[0] >> tet[1] >> tet[2] >> tet[3])) parse_fail(path, line_no, "expected 'i j k l'");
            mesh.tets.push_back(tet);
        }
        mesh.build_topology();
        return mesh;
    }

    // Gmsh MSH 2.2 ASCII subset.
    std::map<long, int> node_index;
    bool saw_nodes = false, saw_elements = false;
    int skipped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.rfind("$MeshFormat", 0) == 0) {
            std::istringstream ls(next_line("$MeshFormat"));
            double version = 0.0;
            int file_type = 0, data_size = 0;
            if (!(ls >> version >> file_type >> data_size)) parse_fail(path, line_no, "bad $MeshFormat header");
            if (version < 2.0 || version >= 3.0 || file_type != 0) {
                parse_fail(path, line_no, "unsupported MSH format (need 2.x ASCII)");
            }
            next_line("$EndMeshFormat");
        } else if (line.rfind("$Nodes", 0) == 0) {
            std::istringstream ls(next_line("$Nodes"));
            long count = 0;
            if (!(ls >> count) || count < 0) parse_fail(path, line_no, "bad node count");
            for (long i = 0; i < count; ++i) {
                std::istringstream ns(next_line("$Nodes"));
                long id = 0;
                Vec3 p;
                if (!(ns >> id >> p(0) >> p(1) >> p(2))) parse_fail(path, line_no, "expected 'id x y z'");
                node_index[id] = mesh.vertex_count();
                mesh.vertices.push_back(p);
            }
            next_line("$EndNodes");
            saw_nodes = true;
        } else if (line.rfind("$Elements", 0) == 0) {
            std::istringstream ls(next_line("$Elements"));
            long count = 0;
            if (!(ls >> count) || count < 0) parse_fail(path, line_no, "bad element count");
            for (long i = 0; i < count; ++i) {
                std::istringstream es(next_line("$Elements"));
                long id = 0;
                int type = 0, ntags = 0;
                if (!(es >> id >> type >> ntags)) parse_fail(path, line_no, "expected 'id type ntags ...'");
                for (int t = 0; t < ntags; ++t) {
                    long tag;
                    if (!(es >> tag)) parse_fail(path, line_no, "missing element tag");
                }
                if (type != 4) {
                    ++skipped;
                    continue;
                }
                std::array<int, 4> tet;
                for (int v = 0; v < 4; ++v) {
                    long node = 0;
                    if (!(es >> node)) parse_fail(path, line_no, "tetrahedron needs 4 nodes");
                    auto it = node_index.find(node);
                    if (it == node_index.end()) {
                        throw TopologyError(path + ":" + std::to_string(line_no) +
                                            ": element references unknown node " + std::to_string(node));
                    }
                    tet[v] = it->second;
                }
                mesh.tets.push_back(tet);
            }
            next_line("$EndElements");
            saw_elements = true;
        }
        // Unknown sections are passed over line by line.
    }
    if (!saw_nodes || !saw_elements) {
        throw ParseError(path + ": missing $Nodes or $Elements section");
    }
    if (skipped > 0) {
        std::cerr << "warning: " << path << ": skipped " << skipped
                  << " non-tetrahedral elements\n";
    }
    mesh.build_topology();
    return mesh;
}

TetMesh load_mesh(const std::string& path) {
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    return load_mesh(path, ext == ".msh" ? MeshFormat::msh_ascii : MeshFormat::simple_tet);
}

void write_msh(const std::string& path, const TetMesh& mesh) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write mesh file: " + path);
    out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
    out << "$Nodes\n" << mesh.vertices.size() << "\n";
    char buffer[128];
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Vec3& p = mesh.vertices[i];
        std::snprintf(buffer, sizeof(buffer), "%zu %.17g %.17g %.17g\n", i + 1, p(0), p(1), p(2));
        out << buffer;
    }
    out << "$EndNodes\n$Elements\n" << mesh.tets.size() << "\n";
    for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
        const auto& tet = mesh.tets[t];
        out << (t + 1) << " 4 2 0 1 " << (tet[0] + 1) << ' ' << (tet[1] + 1) << ' '
            << (tet[2] + 1) << ' ' << (tet[3] + 1) << '\n';
    }
    out << "$EndElements\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace crossfield
