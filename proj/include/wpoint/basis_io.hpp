#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wpoint/surface.hpp"
#include "wpoint/weierstrass.hpp"

namespace wpoint {

/// In-memory form of a QEXP text file.
///
///   QEXP 1
///   LEVEL <label>
///   WEIGHT <w>
///   PREC <P>
///   FORMS <k>
///   FORM <label>          (k times, each followed by)
///   <P space-separated rationals: coefficients of q^0 .. q^{P-1}>
///
/// Lines starting with '#' and blank lines are ignored.
struct BasisFile {
  struct Form {
    std::string label;
    std::vector<Rational> coeffs;
    friend bool operator==(const Form&, const Form&) = default;
  };

  std::string level_label;
  int weight = 2;
  std::size_t prec = 0;
  std::vector<Form> forms;

  friend bool operator==(const BasisFile&, const BasisFile&) = default;
};

/// Throws ParseError (with line number) on malformed text and ValidationError
/// when counts disagree with the header.
BasisFile parse_basis_file(std::string_view text);
std::string serialize_basis_file(const BasisFile& file);

/// Parses and converts to a CuspBasis of weight-2 forms; genus = form count.
CuspBasis parse_basis(std::string_view text);
CuspBasis to_cusp_basis(const BasisFile& file);
BasisFile to_basis_file(const CuspBasis& basis);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
CuspBasis load_basis(const std::filesystem::path& path);

/// Signature file:
///   GENUS <g>
///   CUSPS <t>
///   ELLIPTIC <e_1> <e_2> ...     (optional, may be empty)
SurfaceSignature parse_signature(std::string_view text);

}  // namespace wpoint
