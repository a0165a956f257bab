#include "crossfield/smoother.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace crossfield {

namespace {

// Orthonormal frame whose third axis is n: complete with the coordinate
// axis least aligned with n.
Rotation frame_from_normal(const Vec3& n) {
    int least = 0;
    for (int k = 1; k < 3; ++k) {
        if (std::abs(n(k)) < std::abs(n(least))) least = k;
    }
    const Vec3 seed = Vec3::Unit(least);
    const Vec3 u = (seed - seed.dot(n) * n).normalized();
    const Vec3 v = n.cross(u);
    Rotation r;
    r.m.col(0) = u;
    r.m.col(1) = v;
    r.m.col(2) = n;
    return r;
}

CrossTensor9 neighbor_average(const TetMesh& mesh, const CrossField& field, int v) {
    Vec9 sum = Vec9::Zero();
    for (int u : mesh.adjacency[v]) sum += field.tensors[u].a;
    return CrossTensor9(sum / static_cast<double>(mesh.adjacency[v].size()));
}

// Projected neighbor average; falls back to `previous` when the projection
// cannot single out directions.
CrossTensor9 smoothed_tensor(const TetMesh& mesh, const CrossField& field, int v,
                             ProjectionMethod method, const CrossTensor9& previous) {
    if (mesh.adjacency[v].empty()) return previous;
    const CrossTensor9 avg = neighbor_average(mesh, field, v);
    try {
        return project(avg, method).tensor;
    } catch (const DegenerateSpectrum&) {
        return previous;
    } catch (const NoConvergence&) {
        return previous;
    }
}

}  // namespace

CrossField boundary_conditions(const TetMesh& mesh, BoundaryMode mode,
                               const std::string& path) {
    const int nv = mesh.vertex_count();
    CrossField field;
    field.tensors.assign(nv, CrossTensor9::reference());
    field.eta.assign(nv, 0.0);
    field.fixed.assign(nv, 0);

    if (mode == BoundaryMode::normal_aligned) {
        std::vector<Vec3> normal_sum(nv, Vec3::Zero());
        for (const auto& tri : mesh.boundary) {
            const Vec3& a = mesh.vertices[tri.v[0]];
            const Vec3& b = mesh.vertices[tri.v[1]];
            const Vec3& c = mesh.vertices[tri.v[2]];
            const double area = 0.5 * (b - a).cross(c - a).norm();
            for (int v : tri.v) normal_sum[v] += area * tri.normal;
        }
        for (int v = 0; v < nv; ++v) {
            if (!mesh.on_boundary[v]) continue;
            const double len = normal_sum[v].norm();
            if (len < 1e-6) {
                throw DegenerateNormal("averaged normal vanishes at vertex " + std::to_string(v));
            }
            field.tensors[v] = tensor_from_rotation(frame_from_normal(normal_sum[v] / len));
            field.fixed[v] = 1;
        }
        return field;
    }

    std::ifstream in(path);
    if (!in) throw FileError("cannot open boundary-condition file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int vertex = -1;
        Vec9 a;
        int flag = 0;
        if (!(ls >> vertex)) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected vertex index");
        }
        for (int i = 0; i < 9; ++i) {
            if (!(ls >> a(i))) {
                throw ParseError(path + ":" + std::to_string(line_no) +
                                 ": expected 9 coefficients");
            }
        }
        if (!(ls >> flag)) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected fixed flag");
        }
        if (vertex < 0 || vertex >= nv) {
            throw TopologyError(path + ":" + std::to_string(line_no) + ": vertex " +
                                std::to_string(vertex) + " of " + std::to_string(nv));
        }
        field.tensors[vertex] = project_approx(CrossTensor9(a)).tensor;
        field.fixed[vertex] = flag ? 1 : 0;
    }
    return field;
}

double energy(const TetMesh& mesh, const CrossField& field) {
    double total = 0.0;
    for (const auto& e : mesh.edges) {
        const double d = frobenius_distance(field.tensors[e[0]], field.tensors[e[1]]);
        total += d * d;
    }
    return 0.5 * total;
}

CrossField smooth_step(const TetMesh& mesh, const CrossField& field,
                       const SmootherConfig& config) {
    const int nv = mesh.vertex_count();
    CrossField next = field;
    if (config.parallel) {
#pragma omp parallel for schedule(static)
        for (int v = 0; v < nv; ++v) {
            if (field.fixed[v]) continue;
            next.tensors[v] = smoothed_tensor(mesh, field, v, config.projection,
                                              field.tensors[v]);
        }
    } else {
        for (int v = 0; v < nv; ++v) {
            if (field.fixed[v]) continue;
            next.tensors[v] = smoothed_tensor(mesh, field, v, config.projection,
                                              field.tensors[v]);
        }
    }
    return next;
}

SmoothResult smooth(const TetMesh& mesh, const CrossField& field,
                    const SmootherConfig& config) {
    SmoothResult result;
    result.field = field;

    bool any_fixed = false;
    for (char f : field.fixed) any_fixed |= (f != 0);
    if (!any_fixed) {
        // The energy has no data term; any uniform field minimizes it.
        result.field.tensors.assign(field.tensors.size(), CrossTensor9::reference());
        result.log.initial_energy = 0.0;
        result.log.entries.push_back({0, 0.0, 0.0});
        result.log.converged = true;
        return result;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    const double initial = energy(mesh, result.field);
    result.log.initial_energy = initial;

    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        result.field = smooth_step(mesh, result.field, config);
        const double e = energy(mesh, result.field);
        result.log.entries.push_back({iter, e, elapsed()});
        if (config.report_every > 0 && iter % config.report_every == 0) {
            std::cerr << "iteration " << iter << " energy " << e << "\n";
        }
        if (e == 0.0 || (initial > 0.0 && e / initial <= config.energy_reduction_target)) {
            result.log.converged = true;
            break;
        }
    }
    return result;
}

SingularityReport singularity_indicator(const TetMesh& mesh, const CrossField& field,
                                        double band_low, double band_high, bool parallel) {
    const int nv = mesh.vertex_count();
    SingularityReport report;
    report.band_low = band_low;
    report.band_high = band_high;
    report.eta.assign(nv, 0.0);

    auto vertex_eta = [&](int v) {
        if (field.fixed[v] || mesh.adjacency[v].empty()) return 0.0;
        const CrossTensor9 avg = neighbor_average(mesh, field, v);
        try {
            return projection_distance(avg);
        } catch (const DegenerateSpectrum&) {
            // Maximal ambiguity: report the distance to the nearest cross
            // found by the exact minimizer instead.
            return project_exact(avg).distance;
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int v = 0; v < nv; ++v) report.eta[v] = vertex_eta(v);
    } else {
        for (int v = 0; v < nv; ++v) report.eta[v] = vertex_eta(v);
    }

    report.min_eta = nv ? report.eta[0] : 0.0;
    for (int v = 0; v < nv; ++v) {
        report.min_eta = std::min(report.min_eta, report.eta[v]);
        report.max_eta = std::max(report.max_eta, report.eta[v]);
        if (report.eta[v] >= band_low && report.eta[v] <= band_high) {
            report.flagged.push_back(v);
        }
    }
    report.histogram.assign(10, 0);
    if (report.max_eta > 0.0) {
        for (int v = 0; v < nv; ++v) {
            int bin = static_cast<int>(report.eta[v] / report.max_eta * 10.0);
            report.histogram[std::min(bin, 9)]++;
        }
    }
    return report;
}

}  // namespace crossfield
