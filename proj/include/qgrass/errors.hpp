#pragma once

#include <stdexcept>
#include <string>

namespace qgrass {

// Base class for everything this library throws on purpose. The CLI maps
// any qgrass::Error to exit code 2 (bad usage / unmet hypothesis); failed
// *claims* are ordinary verdict values, never exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- field construction ---
struct NotPrimePower : Error {
    explicit NotPrimePower(int q)
        : Error("q = " + std::to_string(q) + " is not a prime power") {}
};
struct OrderOutOfRange : Error {
    explicit OrderOutOfRange(int q)
        : Error("field order " + std::to_string(q) + " outside supported range 2..16") {}
};
struct ElementOutOfRange : Error {
    ElementOutOfRange(int x, int q)
        : Error("element " + std::to_string(x) + " not in 0.." + std::to_string(q - 1)) {}
};
struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero requested") {}
};

// --- subspace / enumeration ---
struct DimensionMismatch : Error {
    using Error::Error;
};
struct EntryOutOfRange : Error {
    using Error::Error;
};
struct AmbientMismatch : Error {
    AmbientMismatch() : Error("operands live in different ambient spaces") {}
    using Error::Error;
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& estimate)
        : Error("enumeration would emit " + estimate + " subspaces, over budget") {}
};

// --- formula evaluation / lemma checking ---
struct MissingX : Error {
    MissingX() : Error("this formula needs the parameter x, which was not supplied") {}
};
struct UnknownLemma : Error {
    explicit UnknownLemma(const std::string& id) : Error("unknown lemma id: " + id) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& which)
        : Error("hypothesis violated: " + which) {}
};

// --- families ---
struct EmptyFamily : Error {
    EmptyFamily() : Error("operation requires a non-empty family") {}
};
struct NotContained : Error {
    using Error::Error;
};
struct DimensionOrder : Error {
    using Error::Error;
};
struct ChoiceOutOfRange : Error {
    using Error::Error;
};

// --- verifier / io ---
struct UnknownKind : Error {
    explicit UnknownKind(const std::string& k) : Error("unknown certificate kind: " + k) {}
};
struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& s) : Error("unknown suite: " + s) {}
};
struct IoError : Error {
    using Error::Error;
};

} // namespace qgrass
