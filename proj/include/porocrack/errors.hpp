#ifndef POROCRACK_ERRORS_HPP
#define POROCRACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace porocrack {

// Bad user input: geometry, config keys, value domains.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mesh generation produced a degenerate element, or a query left the mesh.
class MeshError : public std::runtime_error {
public:
    explicit MeshError(const std::string& what, int element = -1)
        : std::runtime_error(what), element_id(element) {}
    int element_id;
};

// 1 + beta * tr(eps) <= 0 somewhere: the constitutive model left its
// validity regime. Carries the offending location when known.
class StrainLimitError : public std::runtime_error {
public:
    StrainLimitError(const std::string& what, int element = -1, int qpoint = -1,
                     double value = 0.0)
        : std::runtime_error(what), element_id(element), qp(qpoint), coeff(value) {}
    int element_id;
    int qp;
    double coeff;  // the nonpositive 1 + beta * div(u)
};

// Linear-solver breakdown (indefinite matrix, CG stagnation, ...).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace porocrack

#endif
