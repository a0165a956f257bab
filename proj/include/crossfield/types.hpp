#ifndef CROSSFIELD_TYPES_HPP
#define CROSSFIELD_TYPES_HPP

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace crossfield {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec9 = Eigen::Matrix<double, 9, 1>;

// A Mandel matrix deviates from the 9-parameter pattern.
struct StructureViolation : std::runtime_error {
    explicit StructureViolation(const std::string& what) : std::runtime_error(what) {}
};

// The 3x3 eigentensor spectrum is too clustered to pick directions.
struct DegenerateSpectrum : std::runtime_error {
    explicit DegenerateSpectrum(const std::string& what) : std::runtime_error(what) {}
};

// The simplex minimizer failed to shrink below its diameter tolerance.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct TopologyError : std::runtime_error {
    explicit TopologyError(const std::string& what) : std::runtime_error(what) {}
};

// Averaged boundary normal with near-zero magnitude (sharp corner pathology).
struct DegenerateNormal : std::runtime_error {
    explicit DegenerateNormal(const std::string& what) : std::runtime_error(what) {}
};

struct FileError : std::runtime_error {
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crossfield

#endif  // CROSSFIELD_TYPES_HPP
