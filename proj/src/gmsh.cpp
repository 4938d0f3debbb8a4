#include "rda/gmsh.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "rda/errors.hpp"

namespace rda {

namespace {

constexpr int kTypePoint = 15;
constexpr int kTypeLine = 1;
constexpr int kTypeTriangle = 2;
constexpr int kTypeTet = 4;

int nodes_of_type(int type) {
    switch (type) {
        case kTypePoint: return 1;
        case kTypeLine: return 2;
        case kTypeTriangle: return 3;
        case kTypeTet: return 4;
        default: return -1;
    }
}

template <typename T>
T read_or_throw(std::istream& in, const char* what) {
    T value;
    if (!(in >> value)) throw ParseError(std::string("expected ") + what);
    return value;
}

void expect_section_end(std::istream& in, const std::string& name) {
    auto tok = read_or_throw<std::string>(in, "section terminator");
    if (tok != "$End" + name)
        throw ParseError("missing $End" + name + ", found '" + tok + "'");
}

void skip_section(std::istream& in, const std::string& name) {
    std::string line;
    const std::string end = "$End" + name;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line == end) return;
    }
    throw ParseError("unterminated section $" + name);
}

struct RawElement {
    int type;
    std::array<long, 4> nodes;
};

}  // namespace

Mesh load_gmsh(std::istream& in) {
    std::string tok;
    if (!(in >> tok) || tok != "$MeshFormat")
        throw ParseError("not an MSH file: missing $MeshFormat");
    double version = read_or_throw<double>(in, "format version");
    int file_type = read_or_throw<int>(in, "file type");
    read_or_throw<int>(in, "data size");
    const bool v2 = std::abs(version - 2.2) < 0.05;
    const bool v4 = std::abs(version - 4.1) < 0.05;
    if (!v2 && !v4) throw ParseError("unsupported MSH version");
    if (file_type != 0) throw ParseError("binary MSH not supported");
    expect_section_end(in, "MeshFormat");

    std::map<long, Eigen::Vector3d> nodes;
    std::vector<RawElement> raw;

    while (in >> tok) {
        if (tok.empty() || tok[0] != '$')
            throw ParseError("unexpected token '" + tok + "'");
        const std::string name = tok.substr(1);

        if (name == "Nodes") {
            if (v2) {
                long n = read_or_throw<long>(in, "node count");
                for (long i = 0; i < n; ++i) {
                    long id = read_or_throw<long>(in, "node id");
                    double x = read_or_throw<double>(in, "x");
                    double y = read_or_throw<double>(in, "y");
                    double z = read_or_throw<double>(in, "z");
                    nodes[id] = Eigen::Vector3d(x, y, z);
                }
            } else {
                long nblocks = read_or_throw<long>(in, "entity block count");
                read_or_throw<long>(in, "node count");
                read_or_throw<long>(in, "min node tag");
                read_or_throw<long>(in, "max node tag");
                for (long b = 0; b < nblocks; ++b) {
                    read_or_throw<int>(in, "entity dim");
                    read_or_throw<int>(in, "entity tag");
                    int parametric = read_or_throw<int>(in, "parametric flag");
                    if (parametric != 0)
                        throw ParseError("parametric nodes not supported");
                    long nb = read_or_throw<long>(in, "block node count");
                    std::vector<long> tags(static_cast<std::size_t>(nb));
                    for (auto& t : tags) t = read_or_throw<long>(in, "node tag");
                    for (long i = 0; i < nb; ++i) {
                        double x = read_or_throw<double>(in, "x");
                        double y = read_or_throw<double>(in, "y");
                        double z = read_or_throw<double>(in, "z");
                        nodes[tags[static_cast<std::size_t>(i)]] =
                            Eigen::Vector3d(x, y, z);
                    }
                }
            }
            expect_section_end(in, "Nodes");
        } else if (name == "Elements") {
            if (v2) {
                long n = read_or_throw<long>(in, "element count");
                for (long i = 0; i < n; ++i) {
                    read_or_throw<long>(in, "element id");
                    int type = read_or_throw<int>(in, "element type");
                    int nn = nodes_of_type(type);
                    if (nn < 0) throw ParseError("unsupported element type");
                    int ntags = read_or_throw<int>(in, "tag count");
                    for (int t = 0; t < ntags; ++t)
                        read_or_throw<long>(in, "tag");
                    RawElement e{type, {}};
                    for (int k = 0; k < nn; ++k)
                        e.nodes[k] = read_or_throw<long>(in, "node ref");
                    raw.push_back(e);
                }
            } else {
                long nblocks = read_or_throw<long>(in, "entity block count");
                read_or_throw<long>(in, "element count");
                read_or_throw<long>(in, "min tag");
                read_or_throw<long>(in, "max tag");
                for (long b = 0; b < nblocks; ++b) {
                    read_or_throw<int>(in, "entity dim");
                    read_or_throw<int>(in, "entity tag");
                    int type = read_or_throw<int>(in, "element type");
                    int nn = nodes_of_type(type);
                    if (nn < 0) throw ParseError("unsupported element type");
                    long nb = read_or_throw<long>(in, "block element count");
                    for (long i = 0; i < nb; ++i) {
                        read_or_throw<long>(in, "element tag");
                        RawElement e{type, {}};
                        for (int k = 0; k < nn; ++k)
                            e.nodes[k] = read_or_throw<long>(in, "node ref");
                        raw.push_back(e);
                    }
                }
            }
            expect_section_end(in, "Elements");
        } else {
            skip_section(in, name);
        }
    }

    bool has_tet = false, has_tri = false;
    for (const auto& e : raw) {
        has_tet |= e.type == kTypeTet;
        has_tri |= e.type == kTypeTriangle;
    }
    if (!has_tet && !has_tri) throw EmptyMesh("no volume elements in MSH file");
    const int dim = has_tet ? 3 : 2;
    const int vol_type = has_tet ? kTypeTet : kTypeTriangle;

    // Keep only referenced nodes, remapped to a dense index range.
    std::map<long, int> remap;
    std::vector<Eigen::Vector3d> verts;
    std::vector<std::array<int, 4>> elems;
    for (const auto& e : raw) {
        if (e.type != vol_type) continue;
        std::array<int, 4> el{-1, -1, -1, -1};
        for (int k = 0; k < dim + 1; ++k) {
            auto it = remap.find(e.nodes[k]);
            if (it == remap.end()) {
                auto nit = nodes.find(e.nodes[k]);
                if (nit == nodes.end())
                    throw ParseError("element references unknown node");
                it = remap.emplace(e.nodes[k], static_cast<int>(verts.size())).first;
                verts.push_back(nit->second);
            }
            el[k] = it->second;
        }
        elems.push_back(el);
    }
    return build_mesh(dim, std::move(verts), std::move(elems));
}

Mesh load_gmsh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_gmsh(in);
}

void write_gmsh(const Mesh& mesh, std::ostream& out) {
    out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
    out << "$Nodes\n" << mesh.n_vertices() << "\n";
    char buf[96];
    for (int i = 0; i < mesh.n_vertices(); ++i) {
        const auto& v = mesh.vertices[i];
        std::snprintf(buf, sizeof buf, "%d %.17g %.17g %.17g\n", i + 1, v.x(),
                      v.y(), v.z());
        out << buf;
    }
    out << "$EndNodes\n$Elements\n" << mesh.n_elements() << "\n";
    const int type = mesh.dim == 2 ? kTypeTriangle : kTypeTet;
    for (int k = 0; k < mesh.n_elements(); ++k) {
        out << k + 1 << ' ' << type << " 2 0 0";
        for (int i = 0; i < mesh.verts_per_elem(); ++i)
            out << ' ' << mesh.elements[k][i] + 1;
        out << '\n';
    }
    out << "$EndElements\n";
}

void write_gmsh(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_gmsh(mesh, out);
}

}  // namespace rda
