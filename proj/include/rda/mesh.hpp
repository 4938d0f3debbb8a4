#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

namespace rda {

// A (d-1)-face of a simplicial mesh: an edge in 2D, a triangle in 3D.
// The stored normal is the unit outward normal of elem_plus; for interior
// faces the outward normal of elem_minus is its negation.
struct Face {
    std::array<int, 3> vertices{-1, -1, -1};
    int n_vertices = 0;
    double diameter = 0.0;
    double measure = 0.0;  // length in 2D, area in 3D
    Eigen::Vector3d normal = Eigen::Vector3d::Zero();
    Eigen::Vector3d barycenter = Eigen::Vector3d::Zero();
    int elem_plus = -1;
    int elem_minus = -1;  // -1 on the boundary

    bool is_boundary() const { return elem_minus < 0; }
};

// Simplicial partition (triangles/tetrahedra) with full face connectivity.
// Coordinates are stored as 3-vectors; in 2D the z component is zero.
// Immutable after construction.
struct Mesh {
    int dim = 0;
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 4>> elements;  // first dim+1 entries used
    std::vector<Face> faces;

    std::vector<double> elem_diameter;   // h_K, longest edge
    std::vector<double> elem_volume;
    std::vector<Eigen::Vector3d> elem_barycenter;
    std::vector<std::vector<int>> vertex_elements;  // incidence, sorted

    int n_elements() const { return static_cast<int>(elements.size()); }
    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_faces() const { return static_cast<int>(faces.size()); }
    int verts_per_elem() const { return dim + 1; }

    double total_volume() const;
    double max_diameter() const;
    int n_boundary_faces() const;
    int n_interior_faces() const;

    // Physical vertex positions of an element / face.
    Eigen::Vector3d element_vertex(int k, int i) const {
        return vertices[elements[k][static_cast<std::size_t>(i)]];
    }
};

// Uniform triangulation of (0,1)^2: each of n^2 squares split along the
// (i,j)-(i+1,j+1) diagonal. 2n^2 triangles, (n+1)^2 vertices.
Mesh build_unit_square_mesh(int n);

// Kuhn split of (0,1)^3: each of n^3 cubes cut into 6 tetrahedra sharing
// the cube's main diagonal. 6n^3 tetrahedra.
Mesh build_unit_cube_mesh(int n);

// Build a mesh from raw vertices + element connectivity. Computes volumes
// (normalizing orientation), barycenters, diameters and face connectivity.
// Throws NonManifold if some face is shared by more than two elements.
Mesh build_mesh(int dim, std::vector<Eigen::Vector3d> vertices,
                std::vector<std::array<int, 4>> elements);

}  // namespace rda
