#include "triphoton/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace triphoton {

namespace {

int significant_digits(std::string_view s) {
  int count = 0;
  bool seen_nonzero = false;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (c != '0') seen_nonzero = true;
    if (seen_nonzero) ++count;
  }
  return count;
}

void append_json_double(std::string& out, double x) { out += format_double(x); }

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";
  std::array<char, 48> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  std::string s(buf.data(), res.ptr);
  if (significant_digits(s) > 15) {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 15);
    s.assign(buf.data(), res.ptr);
  }
  return s;
}

std::string format_complex(cdouble z) {
  const double re = (z.real() == 0.0) ? 0.0 : z.real();
  const double im = (z.imag() == 0.0) ? 0.0 : z.imag();
  std::string s = format_double(re);
  s += (im < 0.0) ? '-' : '+';
  s += format_double(std::fabs(im));
  s += 'i';
  return s;
}

std::string matrix_grid(const Matrix3c& m) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (c) out += "  ";
      out += format_complex(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_json(const Matrix3c& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    out += (r ? ",\n [" : "\n [");
    for (int c = 0; c < 3; ++c) {
      if (c) out += ", ";
      out += "{\"re\":";
      append_json_double(out, m(r, c).real() == 0.0 ? 0.0 : m(r, c).real());
      out += ",\"im\":";
      append_json_double(out, m(r, c).imag() == 0.0 ? 0.0 : m(r, c).imag());
      out += '}';
    }
    out += ']';
  }
  out += "\n]\n";
  return out;
}

std::string output_state_json(const OutputState& s) {
  std::string out = "{\"input\":[";
  for (int mode = 0; mode < 3; ++mode) {
    if (mode) out += ',';
    out += std::to_string(s.input()[mode]);
  }
  out += "],\"amplitudes\":[";
  for (std::size_t i = 0; i < s.basis().size(); ++i) {
    out += (i ? ",\n " : "\n ");
    out += "{\"occ\":[";
    for (int mode = 0; mode < 3; ++mode) {
      if (mode) out += ',';
      out += std::to_string(s.basis()[i][mode]);
    }
    const cdouble a = s.amplitudes()[i];
    out += "],\"re\":";
    append_json_double(out, a.real() == 0.0 ? 0.0 : a.real());
    out += ",\"im\":";
    append_json_double(out, a.imag() == 0.0 ? 0.0 : a.imag());
    out += '}';
  }
  out += "\n]}\n";
  return out;
}

std::string contour_csv(std::vector<ContourPoint> points) {
  std::sort(points.begin(), points.end(), [](const ContourPoint& a, const ContourPoint& b) {
    if (a.G != b.G) return a.G < b.G;
    return a.theta < b.theta;
  });
  std::string out = "G,theta,c111_abs,branch\n";
  for (const ContourPoint& p : points) {
    out += format_double(p.G);
    out += ',';
    out += format_double(p.theta);
    out += ',';
    out += format_double(p.c111_abs);
    out += ',';
    out += p.branch.label();
    out += '\n';
  }
  return out;
}

std::string landscape_csv(const Landscape& l) {
  std::string out = "G";
  for (double theta : l.theta_values) {
    out += ',';
    out += format_double(theta);
  }
  out += '\n';
  for (std::size_t i = 0; i < l.g_values.size(); ++i) {
    out += format_double(l.g_values[i]);
    for (std::size_t j = 0; j < l.theta_values.size(); ++j) {
      out += ',';
      out += format_double(l.prob[i * l.theta_values.size() + j]);
    }
    out += '\n';
  }
  return out;
}

std::string report_json(const VerificationReport& r) {
  std::string out = "[";
  bool first = true;
  for (const VerificationRecord& rec : r.records) {
    out += (first ? "\n" : ",\n");
    first = false;
    out += " {\"table\":" + std::to_string(rec.table);
    out += ",\"column\":" + std::to_string(rec.column);
    out += ",\"params\":{\"m\":" + std::to_string(rec.params.m);
    out += ",\"n\":" + std::to_string(rec.params.n);
    out += ",\"psi\":";
    append_json_double(out, rec.params.psi);
    out += ",\"phi\":";
    append_json_double(out, rec.params.phi);
    out += "},\"pass\":";
    out += rec.pass ? "true" : "false";
    out += ",\"max_dev\":";
    append_json_double(out, rec.max_dev);
    out += '}';
  }
  out += "\n]\n";
  return out;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "table column  m  n  psi      phi      status  max_dev\n";
  for (const VerificationRecord& rec : r.records) {
    char line[160];
    std::snprintf(line, sizeof(line), "%5d %6d %2d %2d %-8s %-8s %-7s %s\n", rec.table,
                  rec.column, rec.params.m, rec.params.n, format_double(rec.params.psi).c_str(),
                  format_double(rec.params.phi).c_str(), rec.pass ? "pass" : "FAIL",
                  format_double(rec.max_dev).c_str());
    out << line;
  }
  const std::size_t failures =
      static_cast<std::size_t>(std::count_if(r.records.begin(), r.records.end(),
                                             [](const VerificationRecord& x) { return !x.pass; }));
  out << r.records.size() << " checks, " << failures << " failures, worst deviation "
      << format_double(r.max_dev()) << " (tolerance " << format_double(r.tol) << ")\n";
  return out.str();
}

}  // namespace triphoton
