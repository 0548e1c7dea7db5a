#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "clifford/vector_field.hpp"

namespace clifford {

class DocumentError : public std::runtime_error {
public:
    DocumentError(size_t line, const std::string& detail)
        : std::runtime_error("field document, line " + std::to_string(line) + ": " + detail),
          line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

/// Diff-able text description of a field: metadata plus either explicit
/// components P1..P4 or parameters A..F, as expression strings.
///
///   # comment
///   name: exceptional
///   seed: 42
///   notes: free text
///   D: 2*x3
///   E: -2*x4
///   F: x3*x4
///
/// Omitted entries of the active kind default to 0; mixing P-keys with
/// parameter keys is an error.
struct FieldDocument {
    std::string name;
    std::string notes;
    std::optional<uint64_t> seed;
    std::optional<std::array<std::string, 4>> components;  // P1..P4
    std::optional<std::array<std::string, 6>> params;      // A..F

    static FieldDocument from_field(std::string name, const VectorField& x);
    static FieldDocument from_params(std::string name, const CliffordParams& p);

    static FieldDocument load(std::istream& in);
    static FieldDocument load_file(const std::string& path);

    /// The described field; parameter documents are built through the
    /// torus-invariant parametrization. Throws ParseError on bad
    /// expressions, DocumentError if neither kind is present.
    VectorField to_field() const;

    /// Parsed parameters when this is a parameter document.
    std::optional<CliffordParams> parsed_params() const;

    void save(std::ostream& out) const;
    std::string str() const;
};

}  // namespace clifford
