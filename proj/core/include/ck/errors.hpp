#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ck {

// Every failure the library can signal carries a stable machine-readable kind
// plus a human-oriented message. Kind strings are part of the public contract;
// examples: DuplicateSign, MissingSign, OddOccurrence, Rule1Violation,
// UnknownToken, NotIsolated, NotIndexBlocks, HasBandChord, OrderMismatch,
// NonGeneric, TooManyCrossings, RecursionBudgetExceeded, ParseError.
struct error : std::runtime_error {
    std::string kind;

    error(std::string k, const std::string& message)
        : std::runtime_error(message), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
    throw error{std::move(kind), message};
}

}  // namespace ck
