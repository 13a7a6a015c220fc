#pragma once

#include "toriq/numeric.hpp"

#include <stdexcept>
#include <string>

namespace toriq {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- linear algebra ---

class ZeroVectorError : public Error {
public:
    ZeroVectorError() : Error("zero vector has no primitive form") {}
};

class NotSquareError : public Error {
public:
    explicit NotSquareError(const std::string& what) : Error(what) {}
};

class NotUnimodularError : public Error {
public:
    NotUnimodularError(const std::string& what, Int det)
        : Error(what), determinant(std::move(det)) {}
    Int determinant;
};

class SingularError : public Error {
public:
    explicit SingularError(const std::string& what) : Error(what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// --- polytope construction and validation ---

class NonIntegralOffsetError : public Error {
public:
    NonIntegralOffsetError(const std::string& what, int facet)
        : Error(what), facet(facet) {}
    int facet;  // 0-based input index
};

class EmptyPolytopeError : public Error {
public:
    EmptyPolytopeError() : Error("polytope is empty") {}
};

class UnboundedError : public Error {
public:
    explicit UnboundedError(const std::string& what) : Error(what) {}
};

class NotFullDimensionalError : public Error {
public:
    explicit NotFullDimensionalError(const std::string& what) : Error(what) {}
};

class RedundantFacetError : public Error {
public:
    RedundantFacetError(const std::string& what, int facet)
        : Error(what), facet(facet) {}
    int facet;  // 0-based input index
};

class NotSimpleError : public Error {
public:
    explicit NotSimpleError(const std::string& what) : Error(what) {}
};

class BoxTooLargeError : public Error {
public:
    explicit BoxTooLargeError(const std::string& what) : Error(what) {}
};

// --- construction / quantization ---

class SurjectivityFailureError : public Error {
public:
    explicit SurjectivityFailureError(const std::string& what) : Error(what) {}
};

class AllSubsetsPresentError : public Error {
public:
    AllSubsetsPresentError() : Error("every facet subset is present in the family") {}
};

class OriginNotContainedError : public Error {
public:
    explicit OriginNotContainedError(const std::string& what) : Error(what) {}
};

// --- input parsing (CLI front end) ---

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what), line(line), column(column) {}
    int line;
    int column;
};

class SchemaError : public Error {
public:
    SchemaError(const std::string& what, std::string field)
        : Error(what), field(std::move(field)) {}
    std::string field;
};

}  // namespace toriq
