#pragma once

#include <stdexcept>
#include <string>

namespace tabforecast {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Configuration problems (bad keys, invalid values). CLI exit code 2.
struct ConfigError : Error { using Error::Error; };

// Data / file problems. CLI exit code 3.
struct MissingChannel : Error { using Error::Error; };
struct NonMonotonicTime : Error { using Error::Error; };
struct UnparseableRow : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct InvalidCutoff : Error { using Error::Error; };
struct SignalTooShort : Error { using Error::Error; };
struct NoBeatsFound : Error { using Error::Error; };
struct TooFewCycles : Error { using Error::Error; };
struct MissingAbp : Error { using Error::Error; };
struct DegenerateSignal : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct VersionMismatch : Error { using Error::Error; };
struct CorruptPayload : Error { using Error::Error; };
struct TooFewWindows : Error { using Error::Error; };
struct EmptyTestSet : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Numeric failures during optimization. CLI exit code 4.
struct DivergedLoss : Error { using Error::Error; };

} // namespace tabforecast
