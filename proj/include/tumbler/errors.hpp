// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace tumbler {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generic precondition violation not covered by a more specific type.
class InvalidArgument final : public Error { public: using Error::Error; };

// combinadic
class NoRepresentation final : public Error { public: using Error::Error; };
class SeedTooLarge final : public Error { public: using Error::Error; };
class CountTooSmall final : public Error { public: using Error::Error; };
class InvalidDecomposition final : public Error { public: using Error::Error; };

// ring
class BadSize final : public Error { public: using Error::Error; };
class SizeMismatch final : public Error { public: using Error::Error; };
class InsufficientUniqueValues final : public Error { public: using Error::Error; };
class BadMagic final : public Error { public: using Error::Error; };
class BadLength final : public Error { public: using Error::Error; };
class TrailingBits final : public Error { public: using Error::Error; };

// engine
class DuplicateTumbler final : public Error { public: using Error::Error; };
class EmptyResult final : public Error { public: using Error::Error; };
class InvalidInitVector final : public Error { public: using Error::Error; };
class GenerationAborted final : public Error { public: using Error::Error; };

// cryptanalysis
class TooLarge final : public Error { public: using Error::Error; };
class NoSolution final : public Error { public: using Error::Error; };

// experiments
class NoCycleFound final : public Error { public: using Error::Error; };
class TooShort final : public Error { public: using Error::Error; };

} // namespace tumbler
