#include "porocrack/vtk_export.hpp"

#include <cstdio>
#include <fstream>

#include "porocrack/errors.hpp"

namespace porocrack {

namespace {

void write_scalar_field(std::ofstream& out, const char* name,
                        const std::vector<double>& vals) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    char buf[64];
    for (double v : vals) {
        std::snprintf(buf, sizeof buf, "%.9g\n", v);
        out << buf;
    }
}

void write_tensor_components(std::ofstream& out, const char* prefix,
                             const std::vector<SymTensor3>& field) {
    static const char* comp[6] = {"xx", "yy", "zz", "xy", "xz", "yz"};
    std::vector<double> vals(field.size());
    for (int c = 0; c < 6; ++c) {
        for (size_t n = 0; n < field.size(); ++n) vals[n] = field[n][c];
        write_scalar_field(out, (std::string(prefix) + "_" + comp[c]).c_str(), vals);
    }
}

}  // namespace

void export_vtk(const Mesh& mesh, const RecoveredFields& fields, const DisplacementField& u,
                const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "# vtk DataFile Version 3.0\n";
    out << "porocrack fields\n";
    out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << mesh.node_count() << " double\n";
    char buf[128];
    for (const auto& p : mesh.nodes) {
        std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g\n", p.x, p.y, p.z);
        out << buf;
    }
    const size_t ne = mesh.elements.size();
    out << "CELLS " << ne << " " << 9 * ne << "\n";
    for (const auto& e : mesh.elements) {
        out << "8";
        for (int n : e) out << " " << n;
        out << "\n";
    }
    out << "CELL_TYPES " << ne << "\n";
    for (size_t i = 0; i < ne; ++i) out << "12\n";

    out << "POINT_DATA " << mesh.node_count() << "\n";
    out << "VECTORS displacement double\n";
    for (int n = 0; n < mesh.node_count(); ++n) {
        std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g\n", u[static_cast<size_t>(3 * n)],
                      u[static_cast<size_t>(3 * n + 1)], u[static_cast<size_t>(3 * n + 2)]);
        out << buf;
    }
    write_tensor_components(out, "strain", fields.strain_node);
    write_tensor_components(out, "stress", fields.stress_node);
    write_scalar_field(out, "strain_energy_density", fields.energy_node);
    write_scalar_field(out, "volume_factor", fields.den_node);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace porocrack
