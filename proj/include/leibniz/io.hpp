#pragma once

// JSON file formats for algebras and representations. Rationals are written
// as "p/q" strings.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leibniz/representation.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with the offending locus, either
/// "line L, column C" or a field path such as "brackets[2].result.h".
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json parse_json(std::string_view text);

Json algebra_to_json(const LeibnizAlgebra& alg, const std::string& name = "L");
LeibnizAlgebra algebra_from_json(const Json& j);

std::string serialize_algebra(const LeibnizAlgebra& alg, const std::string& name = "L");
LeibnizAlgebra parse_algebra(std::string_view text);

/// Unvalidated representation data.
struct RepData {
  LeibnizAlgebra algebra;
  BimoduleAction action;
};

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& locus);
/// {label: "p/q"} over the nonzero coordinates.
Json vector_to_json(const LeibnizAlgebra& alg, const Vector& v);

Json representation_to_json(const Representation& rep, const std::string& algebra_name = "L");
/// A string "algebra" field is read as a path relative to `base_dir`.
RepData rep_data_from_json(const Json& j, const std::filesystem::path& base_dir = {});

std::string serialize_representation(const Representation& rep, const std::string& algebra_name = "L");
/// Throws RepresentationError if the axioms fail.
Representation parse_representation(std::string_view text, const std::filesystem::path& base_dir = {});
RepData parse_rep_data(std::string_view text, const std::filesystem::path& base_dir = {});

}  // namespace leibniz
