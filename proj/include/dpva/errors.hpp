#pragma once

#include <stdexcept>
#include <string>

namespace dpva {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownArrow : Error {
    using Error::Error;
};

struct InversesNotJettable : Error {
    InversesNotJettable() : Error("jets of invertible generators are not supported") {}
};

struct CapExceeded : Error {
    using Error::Error;
};

struct JetVarInPoissonContext : Error {
    JetVarInPoissonContext() : Error("jet variable passed to a Poisson (non-vertex) bracket") {}
};

struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(int l, int c, const std::string& msg)
        : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

}  // namespace dpva
