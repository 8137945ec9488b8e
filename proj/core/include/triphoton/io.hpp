#pragma once

#include <string>
#include <vector>

#include "triphoton/fock.hpp"
#include "triphoton/interference.hpp"
#include "triphoton/matrix.hpp"
#include "triphoton/states.hpp"

namespace triphoton {

/// Shortest decimal representation that round-trips the value, capped at 15
/// significant digits. Locale-independent; negative zero prints as "0".
std::string format_double(double x);

/// "a+bi" / "a-bi" with format_double digits.
std::string format_complex(cdouble z);

/// Three lines of three "a+bi" entries separated by two spaces.
std::string matrix_grid(const Matrix3c& m);

/// 3x3 array of {"re":..., "im":...}.
std::string matrix_json(const Matrix3c& m);

/// {"input":[k,l,m], "amplitudes":[{"occ":[k,l,m],"re":...,"im":...}, ...]}
/// in canonical basis order.
std::string output_state_json(const OutputState& s);

/// Header "G,theta,c111_abs,branch"; one row per point, sorted by (G, theta).
std::string contour_csv(std::vector<ContourPoint> points);

/// Header row of theta values (corner cell "G"), first column G values,
/// body |c111|^2.
std::string landscape_csv(const Landscape& l);

/// [{"table":...,"column":...,"params":{...},"pass":...,"max_dev":...}, ...]
std::string report_json(const VerificationReport& r);

/// Aligned human-readable table, one row per record, with a summary line.
std::string report_text(const VerificationReport& r);

}  // namespace triphoton
