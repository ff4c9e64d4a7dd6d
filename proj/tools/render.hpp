#pragma once

#include <string>
#include <vector>

#include "conic/arith.hpp"
#include "conic/group.hpp"
#include "conic/triple.hpp"

namespace conic::cli {

enum class Format { json, markdown, csv };

Format parse_format(const std::string& name);

struct OutputDocument {
  Format format = Format::markdown;
  std::string body;
};

struct RenderOptions {
  bool unicode = false;
};

/// Canonical element display "(a+b*sqrt(-D))/c"; unit coefficient b is
/// folded into the radical, c = 1 drops the denominator, unicode mode
/// swaps the radical for the real thing.
std::string element_string(const GroupElement& z, const RenderOptions& opt);

/// Same shape from raw numerator parts, for orbit entries.
std::string element_string(const Int& D, const Int& a, const Int& b, const Int& c,
                           const RenderOptions& opt);

/// "zeta_11*zeta_13^-1", with an optional leading minus.
std::string factorization_string(const FactorizationResult& f, const RenderOptions& opt);

/// "11^2*13^3" style rendering of a factored integer.
std::string factored_string(const PrimeFactorization& pf, const RenderOptions& opt);

std::string triple_string(const Triple& t);

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

/// One CSV line; cells must not contain commas or newlines.
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace conic::cli
