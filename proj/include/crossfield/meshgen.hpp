#ifndef CROSSFIELD_MESHGEN_HPP
#define CROSSFIELD_MESHGEN_HPP

#include "crossfield/mesh.hpp"

namespace crossfield {

// Axis-aligned unit cube [0,1]^3 on an n x n x n grid, six tets per cell
// (Freudenthal split, conforming across cells).
TetMesh make_cube_mesh(int n);

// Unit ball: an icosahedron subdivided `subdivisions` times gives the
// angular resolution; `layers` radial shells connect the surface to the
// center through prisms split into three tets each (plus one tet fan at the
// center). subdivisions = 3, layers = 13 gives 47,360 tets.
TetMesh make_sphere_mesh(int subdivisions, int layers);

}  // namespace crossfield

#endif  // CROSSFIELD_MESHGEN_HPP
