#pragma once

#include "xover/constructions.hpp"
#include "xover/optimizer.hpp"
#include "xover/types.hpp"

#include <iosfwd>
#include <string>

namespace xover {

/// CSV with one row per subject and one column per period (optional header
/// p1,...,pk). With transposed=true the layout is rows = periods and
/// columns = subjects instead.
ExactDesign read_design_csv(std::istream& in, int t, bool transposed = false);
ExactDesign read_design_csv_file(const std::string& path, int t,
                                 bool transposed = false);
void write_design_csv(std::ostream& out, const ExactDesign& d,
                      bool transposed = false, bool header = true);

/// JSON object {"k": ..., "t": ..., "proportions": {"112": 0.5, ...}}.
ApproximateDesign read_approximate_json(std::istream& in);
ApproximateDesign read_approximate_json_file(const std::string& path);
void write_approximate_json(std::ostream& out, const ApproximateDesign& d);

/// Solution JSON: gamma_star, h_star, active classes with proportions (exact
/// forms when verified), certificate and settings echo.
std::string solution_to_json(const MaximinSolution& sol);

/// Sidecar for `construct`: method, seed, modulus polynomial, label map.
std::string construction_sidecar_json(const StartingDesign& sd,
                                      const EquivalenceClass& pattern);

}  // namespace xover
