#pragma once

#include <stdexcept>
#include <string>

namespace m3fill {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroSlopePair : Error {
    ZeroSlopePair() : Error("slope 0/0 is not a slope") {}
};

struct InfiniteSlope : Error {
    explicit InfiniteSlope(const std::string& op)
        : Error(op + ": slope 1/0 not allowed here") {}
};

struct UnrealizableSlope : Error {
    explicit UnrealizableSlope(const std::string& what) : Error(what) {}
};

struct ExceptionalPrimary : Error {
    explicit ExceptionalPrimary(const std::string& what) : Error(what) {}
};

struct NotAKnotFilling : Error {
    explicit NotAKnotFilling(const std::string& what) : Error(what) {}
};

struct InvalidTriangulation : Error {
    explicit InvalidTriangulation(const std::string& what) : Error(what) {}
};

struct OpenBoundary : Error {
    explicit OpenBoundary(const std::string& what) : Error(what) {}
};

struct EdgeNotDegreeThree : Error {
    explicit EdgeNotDegreeThree(const std::string& what) : Error(what) {}
};

struct SharedTetrahedron : Error {
    explicit SharedTetrahedron(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(int line_, int col_, const std::string& what)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + what),
          line(line_), column(col_) {}
};

struct DatasetCorrupt : Error {
    explicit DatasetCorrupt(const std::string& what) : Error(what) {}
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& what) : Error(what) {}
};

}  // namespace m3fill
