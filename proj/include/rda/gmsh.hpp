#pragma once

#include <iosfwd>
#include <string>

#include "rda/mesh.hpp"

namespace rda {

// Read an ASCII Gmsh MSH file, version 2.2 or 4.1. Only simplex volume
// elements are kept (type 2 triangles, type 4 tetrahedra); lines and points
// are skipped, and in a 3D file surface triangles are skipped as well.
// Throws ParseError for malformed input or unsupported element types, and
// EmptyMesh when no volume element is present.
Mesh load_gmsh(const std::string& path);
Mesh load_gmsh(std::istream& in);

// Write a mesh as ASCII MSH v2.2.
void write_gmsh(const Mesh& mesh, const std::string& path);
void write_gmsh(const Mesh& mesh, std::ostream& out);

}  // namespace rda
