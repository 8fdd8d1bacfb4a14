#pragma once

#include <stdexcept>

namespace knotconc {

struct NonHermitianInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IrrationalJumpAngle : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExceptionalPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedNode : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ArfNonzero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonCyclicAbelianization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularPresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSeifertMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StageInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MarginViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace knotconc
