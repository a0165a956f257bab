#ifndef CROSSFIELD_SMOOTHER_HPP
#define CROSSFIELD_SMOOTHER_HPP

#include <string>
#include <vector>

#include "crossfield/mesh.hpp"
#include "crossfield/projection.hpp"
#include "crossfield/tensor.hpp"

namespace crossfield {

// Per-vertex cross tensors with the singularity indicator eta and the
// Dirichlet flags. Fixed vertices always carry on-manifold tensors.
struct CrossField {
    std::vector<CrossTensor9> tensors;
    std::vector<double> eta;
    std::vector<char> fixed;

    int size() const { return static_cast<int>(tensors.size()); }
};

struct SmootherConfig {
    double energy_reduction_target = 1e-4;  // stop when E_k / E_0 <= target
    int max_iterations = 5000;
    ProjectionMethod projection = ProjectionMethod::approx;
    int report_every = 100;      // console progress period, 0 = silent
    bool parallel = true;        // OpenMP vertex loop; serial reference otherwise
};

struct ConvergenceLog {
    struct Entry {
        int iteration;
        double energy;
        double elapsed_seconds;
    };
    std::vector<Entry> entries;
    double initial_energy = 0.0;
    bool converged = false;
};

struct SmoothResult {
    CrossField field;
    ConvergenceLog log;
};

struct SingularityReport {
    std::vector<double> eta;
    std::vector<int> flagged;     // vertices with eta inside the band
    double band_low = 0.3;
    double band_high = 0.5;
    double min_eta = 0.0;
    double max_eta = 0.0;
    std::vector<int> histogram;   // 10 uniform bins over [0, max_eta]
};

enum class BoundaryMode { normal_aligned, from_file };

// Initial field. In normal_aligned mode every boundary vertex is fixed to a
// cross with one axis along the area-weighted average of its incident
// boundary-face normals; interior vertices start at the reference tensor.
// Throws DegenerateNormal when the averaged normal nearly cancels.
//
// In from_file mode the file has lines "vertex_index a1 ... a9 fixed_flag";
// the tensors are projected onto the manifold, unlisted vertices default to
// the unfixed reference.
CrossField boundary_conditions(const TetMesh& mesh, BoundaryMode mode,
                               const std::string& path = "");

// E = 1/2 sum over mesh edges of the squared Mandel Frobenius distance.
double energy(const TetMesh& mesh, const CrossField& field);

// One Jacobi pass: every non-fixed vertex is replaced by the projection of
// the unweighted mean of its neighbors' previous tensors. Vertices whose
// projection degenerates keep their previous tensor. Fixed vertices are
// untouched.
CrossField smooth_step(const TetMesh& mesh, const CrossField& field,
                       const SmootherConfig& config);

// Iterates smooth_step until the energy ratio hits the target or the
// iteration cap. The field of the last iterate is always returned; the log
// says whether the stopping rule was met. With no fixed vertex the uniform
// reference field is returned immediately.
SmoothResult smooth(const TetMesh& mesh, const CrossField& field,
                    const SmootherConfig& config);

// Recomputes the neighbor average of every non-fixed vertex of the (usually
// converged) field and reports the projection distance of that average as
// eta. Flags vertices with eta inside [band_low, band_high].
SingularityReport singularity_indicator(const TetMesh& mesh, const CrossField& field,
                                        double band_low = 0.3, double band_high = 0.5,
                                        bool parallel = true);

}  // namespace crossfield

#endif  // CROSSFIELD_SMOOTHER_HPP
