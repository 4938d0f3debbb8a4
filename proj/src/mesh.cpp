#include "rda/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rda/errors.hpp"

namespace rda {

double Mesh::total_volume() const {
    return std::accumulate(elem_volume.begin(), elem_volume.end(), 0.0);
}

double Mesh::max_diameter() const {
    return *std::max_element(elem_diameter.begin(), elem_diameter.end());
}

int Mesh::n_boundary_faces() const {
    int c = 0;
    for (const auto& f : faces) c += f.is_boundary() ? 1 : 0;
    return c;
}

int Mesh::n_interior_faces() const { return n_faces() - n_boundary_faces(); }

namespace {

double simplex_volume(int dim, const Eigen::Vector3d* v) {
    if (dim == 2) {
        Eigen::Vector3d a = v[1] - v[0], b = v[2] - v[0];
        return 0.5 * (a.x() * b.y() - a.y() * b.x());
    }
    Eigen::Vector3d a = v[1] - v[0], b = v[2] - v[0], c = v[3] - v[0];
    return a.cross(b).dot(c) / 6.0;
}

}  // namespace

Mesh build_mesh(int dim, std::vector<Eigen::Vector3d> vertices,
                std::vector<std::array<int, 4>> elements) {
    Mesh mesh;
    mesh.dim = dim;
    mesh.vertices = std::move(vertices);
    mesh.elements = std::move(elements);

    const int nv = dim + 1;
    const int ne = mesh.n_elements();
    mesh.elem_diameter.resize(ne);
    mesh.elem_volume.resize(ne);
    mesh.elem_barycenter.resize(ne);

    for (int k = 0; k < ne; ++k) {
        auto& el = mesh.elements[k];
        std::array<Eigen::Vector3d, 4> v;
        for (int i = 0; i < nv; ++i) v[i] = mesh.vertices[el[i]];

        double vol = simplex_volume(dim, v.data());
        if (vol < 0.0) {  // normalize orientation
            std::swap(el[nv - 2], el[nv - 1]);
            std::swap(v[nv - 2], v[nv - 1]);
            vol = -vol;
        }
        mesh.elem_volume[k] = vol;

        Eigen::Vector3d bc = Eigen::Vector3d::Zero();
        for (int i = 0; i < nv; ++i) bc += v[i];
        mesh.elem_barycenter[k] = bc / nv;

        double diam = 0.0;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                diam = std::max(diam, (v[i] - v[j]).norm());
        mesh.elem_diameter[k] = diam;
    }

    // Vertex -> element incidence (drives patch growth).
    mesh.vertex_elements.assign(mesh.n_vertices(), {});
    for (int k = 0; k < ne; ++k)
        for (int i = 0; i < nv; ++i)
            mesh.vertex_elements[mesh.elements[k][i]].push_back(k);

    // Face connectivity keyed on the sorted vertex tuple; vertex indices are
    // matched exactly, never through coordinates. std::map gives the
    // deterministic face ordering.
    std::map<std::array<int, 3>, int> face_of;
    for (int k = 0; k < ne; ++k) {
        for (int opp = 0; opp < nv; ++opp) {
            std::array<int, 3> key{-1, -1, -1};
            int p = 0;
            for (int i = 0; i < nv; ++i)
                if (i != opp) key[p++] = mesh.elements[k][i];
            std::sort(key.begin(), key.begin() + dim);

            auto it = face_of.find(key);
            if (it == face_of.end()) {
                Face f;
                f.n_vertices = dim;
                for (int i = 0; i < dim; ++i) f.vertices[i] = key[i];
                f.elem_plus = k;
                mesh.faces.push_back(f);
                face_of.emplace(key, mesh.n_faces() - 1);
            } else {
                Face& f = mesh.faces[it->second];
                if (f.elem_minus >= 0)
                    throw NonManifold("face shared by more than two elements");
                f.elem_minus = k;
            }
        }
    }

    // Re-order faces by sorted vertex tuple and fill geometry.
    std::vector<Face> ordered;
    ordered.reserve(face_of.size());
    for (const auto& [key, idx] : face_of) ordered.push_back(mesh.faces[idx]);
    mesh.faces = std::move(ordered);

    for (auto& f : mesh.faces) {
        Eigen::Vector3d a = mesh.vertices[f.vertices[0]];
        Eigen::Vector3d b = mesh.vertices[f.vertices[1]];
        if (dim == 2) {
            Eigen::Vector3d t = b - a;
            f.measure = t.norm();
            f.diameter = f.measure;
            f.normal = Eigen::Vector3d(t.y(), -t.x(), 0.0) / f.measure;
            f.barycenter = 0.5 * (a + b);
        } else {
            Eigen::Vector3d c = mesh.vertices[f.vertices[2]];
            Eigen::Vector3d n = (b - a).cross(c - a);
            f.measure = 0.5 * n.norm();
            f.diameter = std::max({(b - a).norm(), (c - a).norm(), (c - b).norm()});
            f.normal = n.normalized();
            f.barycenter = (a + b + c) / 3.0;
        }
        // Orient outward from elem_plus.
        if (f.normal.dot(f.barycenter - mesh.elem_barycenter[f.elem_plus]) < 0.0)
            f.normal = -f.normal;
    }
    return mesh;
}

Mesh build_unit_square_mesh(int n) {
    std::vector<Eigen::Vector3d> verts;
    verts.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            verts.emplace_back(double(i) / n, double(j) / n, 0.0);

    auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    std::vector<std::array<int, 4>> elems;
    elems.reserve(static_cast<std::size_t>(2 * n * n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int v00 = vid(i, j), v10 = vid(i + 1, j);
            int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            elems.push_back({v00, v10, v11, -1});
            elems.push_back({v00, v11, v01, -1});
        }
    }
    return build_mesh(2, std::move(verts), std::move(elems));
}

Mesh build_unit_cube_mesh(int n) {
    std::vector<Eigen::Vector3d> verts;
    verts.reserve(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)));
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i)
                verts.emplace_back(double(i) / n, double(j) / n, double(k) / n);

    auto vid = [n](int i, int j, int k) {
        return (k * (n + 1) + j) * (n + 1) + i;
    };

    // The 6 tetrahedra of the Kuhn split: vertex chains from the cube's min
    // corner to its max corner, one per permutation of the axes.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

    std::vector<std::array<int, 4>> elems;
    elems.reserve(static_cast<std::size_t>(6 * n * n * n));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                for (const auto& p : perms) {
                    std::array<int, 3> c{i, j, k};
                    std::array<int, 4> tet{};
                    tet[0] = vid(c[0], c[1], c[2]);
                    for (int s = 0; s < 3; ++s) {
                        c[p[s]] += 1;
                        tet[s + 1] = vid(c[0], c[1], c[2]);
                    }
                    elems.push_back(tet);
                }
            }
        }
    }
    return build_mesh(3, std::move(verts), std::move(elems));
}

}  // namespace rda
