#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kreal {

// Base class for every error the workbench raises on invalid input or an
// unsupported computation. `kind()` is a stable machine-readable tag; the
// what() string is for humans.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class NotSymmetricError : public Error {
public:
    NotSymmetricError() : Error("NotSymmetric", "matrix is not symmetric") {}
};

class DegreeTooLargeError : public Error {
public:
    explicit DegreeTooLargeError(const std::string& msg)
        : Error("DegreeTooLarge", msg) {}
};

class NotAssociativeError : public Error {
public:
    NotAssociativeError(std::size_t i, std::size_t j, std::size_t k)
        : Error("NotAssociative",
                "multiplication table is not associative at basis triple (" +
                    std::to_string(i) + ", " + std::to_string(j) + ", " +
                    std::to_string(k) + ")"),
          i(i), j(j), k(k) {}

    std::size_t i, j, k;
};

class BadUnitError : public Error {
public:
    explicit BadUnitError(std::size_t witness)
        : Error("BadUnit", "unit law fails on basis element " + std::to_string(witness)),
          witness(witness) {}

    std::size_t witness;
};

class NonSemisimpleError : public Error {
public:
    explicit NonSemisimpleError(std::size_t radical_dim)
        : Error("NonSemisimple",
                "algebra has nonzero radical (dimension " + std::to_string(radical_dim) + ")"),
          radical_dim(radical_dim) {}

    std::size_t radical_dim;
};

class IrrationalSplittingError : public Error {
public:
    explicit IrrationalSplittingError(std::string poly)
        : Error("IrrationalSplitting",
                "splitting the center requires irrational numbers (minimal polynomial " + poly + ")"),
          minimal_polynomial(std::move(poly)) {}

    std::string minimal_polynomial;
};

class UnclassifiedTripleError : public Error {
public:
    UnclassifiedTripleError(std::size_t dim, std::size_t center_dim, long long signature)
        : Error("UnclassifiedTriple",
                "no simple real algebra has invariants (dim=" + std::to_string(dim) +
                    ", center=" + std::to_string(center_dim) +
                    ", signature=" + std::to_string(signature) + ")"),
          dim(dim), center_dim(center_dim), signature(signature) {}

    std::size_t dim, center_dim;
    long long signature;
};

class NotAModuleError : public Error {
public:
    explicit NotAModuleError(const std::string& msg) : Error("NotAModule", msg) {}
};

class NotARepresentationError : public Error {
public:
    NotARepresentationError(std::size_t g, std::size_t h, const std::string& msg)
        : Error("NotARepresentation", msg), g(g), h(h) {}

    std::size_t g, h;
};

class NotInnerViaXError : public Error {
public:
    NotInnerViaXError(std::size_t g, std::size_t basis_index)
        : Error("NotInnerViaX",
                "action of group element " + std::to_string(g) +
                    " is not conjugation by x on basis element " + std::to_string(basis_index)),
          g(g), basis_index(basis_index) {}

    std::size_t g, basis_index;
};

class NotEpsilonSymmetricError : public Error {
public:
    NotEpsilonSymmetricError(std::size_t i, std::size_t j)
        : Error("NotEpsilonSymmetric",
                "gram matrix violates epsilon-symmetry at entry (" + std::to_string(i) +
                    ", " + std::to_string(j) + ")"),
          i(i), j(j) {}

    std::size_t i, j;
};

class SingularFormError : public Error {
public:
    SingularFormError() : Error("Singular", "gram matrix is not invertible") {}
};

class UnsupportedCaseError : public Error {
public:
    explicit UnsupportedCaseError(const std::string& msg) : Error("UnsupportedCase", msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error("ValidationError", msg) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("ParseError",
                "parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + msg),
          line(line), column(column) {}

    std::size_t line, column;
};

} // namespace kreal
