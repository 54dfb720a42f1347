#ifndef NANOBAN_ERRORS_HPP
#define NANOBAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nanoban {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series
struct VarMismatch : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct ConstantTermPresent : Error { using Error::Error; };
struct OutsideWindow : Error { using Error::Error; };
struct DenomOverflow : Error { using Error::Error; };

// qforms
struct FractionalLeadingExponent : Error { using Error::Error; };
struct InconsistentDiscriminant : Error { using Error::Error; };

// banana coefficient table
struct CalibrationFailure : Error { using Error::Error; };
struct TableBuildError : Error { using Error::Error; };
struct TableWindowExceeded : Error { using Error::Error; };

// gw/gv
struct NonTriangular : Error { using Error::Error; };
struct NotFiberIntegral : Error { using Error::Error; };

// siegel
struct IrrationalConjugate : Error { using Error::Error; };

// arithmetic
struct BadReduction : Error { using Error::Error; };
struct DegenerateSample : Error { using Error::Error; };
struct ReconstructionFailure : Error { using Error::Error; };
struct WrongFiberCount : Error { using Error::Error; };

} // namespace nanoban

#endif
