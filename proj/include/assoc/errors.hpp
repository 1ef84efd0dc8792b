#pragma once

#include <stdexcept>
#include <string>

namespace assoc {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph_core
class NoPathError : public Error { public: using Error::Error; };
class UnknownComponentError : public Error { public: using Error::Error; };
class ParentDisconnectedError : public Error { public: using Error::Error; };
class TooLargeError : public Error { public: using Error::Error; };
class CannotAugmentError : public Error { public: using Error::Error; };
class NotTraceableError : public Error { public: using Error::Error; };

// tsp
class InfeasibleError : public Error { public: using Error::Error; };
class NotEnoughPathsError : public Error { public: using Error::Error; };
class TooLargeForExactError : public Error { public: using Error::Error; };

// knowledge sources
class ParseError : public Error { public: using Error::Error; };
class NegativeStrengthError : public Error { public: using Error::Error; };
class NonPositiveStrengthError : public Error { public: using Error::Error; };
class DimensionMismatchError : public Error { public: using Error::Error; };
class DuplicateTokenError : public Error { public: using Error::Error; };
class UnknownTokenError : public Error { public: using Error::Error; };
class NoComponentsFoundError : public Error { public: using Error::Error; };
class TooFewTokensError : public Error { public: using Error::Error; };
class DegenerateInputError : public Error { public: using Error::Error; };

}  // namespace assoc
