#ifndef NLIE_REPORT_HPP
#define NLIE_REPORT_HPP

#include <stdexcept>
#include <string>

#include "nlie/algebra.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

/// Malformed input file or unknown builtin / query name.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NLieAlgebra algebra_from_json(const std::string& json_text);
std::string algebra_to_json(const NLieAlgebra& g);
NLieAlgebra load_algebra_file(const std::string& path);

Subspace subspace_from_json(const std::string& json_text);
Subspace load_subspace_file(const std::string& path);

/// Rendered report plus the process exit status: 0 when every requested
/// check passes, 1 when a mathematical check fails.
struct Report {
  int exit_code = 0;
  std::string text;
};

Report report_check(const NLieAlgebra& g, bool json);
Report report_lie(const NLieAlgebra& g, bool json);
Report report_cohomology(const NLieAlgebra& g, std::size_t max_degree,
                         bool json);
Report report_subspace(const NLieAlgebra& g, const Subspace& s,
                       const std::string& query, bool json);

}  // namespace nlie

#endif
