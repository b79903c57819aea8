#pragma once

#include <stdexcept>
#include <string>

namespace semicm {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lattice layer
struct NotInSpan : Error { using Error::Error; };
struct DependentBasis : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct NotSublattice : Error { using Error::Error; };
struct NotSuperlattice : Error { using Error::Error; };

// semigroup layer
struct RankZero : Error { using Error::Error; };
struct NotSimplicial : Error { using Error::Error; };

// decomposition / closure layer
struct InternalInconsistency : Error { using Error::Error; };
struct BoundTooSmall : Error { using Error::Error; };
struct PointOutsideSaturation : Error { using Error::Error; };

// oracle layer
struct BoxTooSmall : Error { using Error::Error; };

// input layer
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace semicm
