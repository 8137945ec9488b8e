#include "triphoton/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "triphoton/interference.hpp"

namespace triphoton {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kImag{0.0, 1.0};

Occupation occ_for(const std::array<int, 3>& jkl, int nj, int nk, int nl) {
  std::array<int, 3> c{0, 0, 0};
  c[static_cast<std::size_t>(jkl[0] - 1)] = nj;
  c[static_cast<std::size_t>(jkl[1] - 1)] = nk;
  c[static_cast<std::size_t>(jkl[2] - 1)] = nl;
  return Occupation(c[0], c[1], c[2]);
}

// Support set and magnitudes of each family for a given (j,k,l) assignment.
std::map<Occupation, double> family_template(StateFamily family, const std::array<int, 3>& jkl) {
  const double rt2 = std::sqrt(2.0), rt3 = std::sqrt(3.0), rt6 = std::sqrt(6.0);
  std::map<Occupation, double> t;
  switch (family) {
    case StateFamily::bipartite:
      t[occ_for(jkl, 2, 0, 1)] = 1.0 / rt2;
      t[occ_for(jkl, 0, 2, 1)] = 1.0 / rt2;
      break;
    case StateFamily::tripartite_six_term:
      t[occ_for(jkl, 3, 0, 0)] = rt3 / 4.0;
      t[occ_for(jkl, 0, 3, 0)] = rt3 / 4.0;
      t[occ_for(jkl, 2, 1, 0)] = 0.25;
      t[occ_for(jkl, 1, 2, 0)] = 0.25;
      t[occ_for(jkl, 1, 0, 2)] = 0.5;
      t[occ_for(jkl, 0, 1, 2)] = 0.5;
      break;
    case StateFamily::tripartite_seven_term:
      t[occ_for(jkl, 3, 0, 0)] = rt2 / 3.0;
      t[occ_for(jkl, 0, 3, 0)] = 1.0 / (3.0 * rt2);
      t[occ_for(jkl, 0, 0, 3)] = 1.0 / (3.0 * rt2);
      t[occ_for(jkl, 1, 2, 0)] = 1.0 / rt6;
      t[occ_for(jkl, 0, 2, 1)] = 1.0 / rt6;
      t[occ_for(jkl, 1, 0, 2)] = 1.0 / rt6;
      t[occ_for(jkl, 0, 1, 2)] = 1.0 / rt6;
      break;
    case StateFamily::unclassified:
      break;
  }
  return t;
}

FixtureCoefficient fc(const Occupation& occ, cdouble unit, int pn, int pm, int num, int den,
                      int a, int b) {
  FixtureCoefficient c;
  c.occ = occ;
  c.unit = unit;
  c.parity_n = pn;
  c.parity_m = pm;
  c.mag_sq_num = num;
  c.mag_sq_den = den;
  c.psi_factor = a;
  c.phi_factor = b;
  return c;
}

void add_table1(std::vector<TableFixture>& out) {
  // column 1: G = pi(2m+1), theta = pi/8 (2n+1)
  {
    TableFixture f;
    f.table = 1;
    f.column = 1;
    f.family = StateFamily::bipartite;
    f.modes = {1, 3, 2};
    f.coords = [](const FixtureParams& p) {
      return DeviceParams{kPi * (2 * p.m + 1), kPi / 8.0 * (2 * p.n + 1), p.psi, p.phi};
    };
    f.coefficients = {fc(Occupation(2, 1, 0), -1.0, 1, 0, 1, 2, -1, -1),
                      fc(Occupation(0, 1, 2), +1.0, 1, 0, 1, 2, +1, +1)};
    out.push_back(std::move(f));
  }
  // column 2: G = pi/4 (2m+1), theta = pi n
  {
    TableFixture f;
    f.table = 1;
    f.column = 2;
    f.family = StateFamily::bipartite;
    f.modes = {1, 2, 3};
    f.coords = [](const FixtureParams& p) {
      return DeviceParams{kPi / 4.0 * (2 * p.m + 1), kPi * p.n, p.psi, p.phi};
    };
    f.coefficients = {fc(Occupation(2, 0, 1), -kImag, 1, 1, 1, 2, -1, 0),
                      fc(Occupation(0, 2, 1), -kImag, 1, 1, 1, 2, +1, 0)};
    out.push_back(std::move(f));
  }
  // column 3: G = pi/4 (2m+1), theta = pi/2 (2n+1)
  {
    TableFixture f;
    f.table = 1;
    f.column = 3;
    f.family = StateFamily::bipartite;
    f.modes = {2, 3, 1};
    f.coords = [](const FixtureParams& p) {
      return DeviceParams{kPi / 4.0 * (2 * p.m + 1), kPi / 2.0 * (2 * p.n + 1), p.psi, p.phi};
    };
    f.coefficients = {fc(Occupation(1, 2, 0), -kImag, 1, 1, 1, 2, 0, -1),
                      fc(Occupation(1, 0, 2), -kImag, 1, 1, 1, 2, 0, +1)};
    out.push_back(std::move(f));
  }
}

void add_table2(std::vector<TableFixture>& out) {
  const double acot_rt2 = std::atan(1.0 / std::sqrt(2.0));
  const double atan_rt2 = std::atan(std::sqrt(2.0));

  // columns 1-4: G = pi(2m+1 -+ 1/3), theta = pi n +- arccot(sqrt 2)
  {
    const int gshift[4] = {-1, +1, -1, +1};
    const int tsign[4] = {+1, +1, -1, -1};
    const int s1[4] = {+1, +1, -1, -1};
    const int s2[4] = {+1, -1, +1, -1};
    for (int col = 0; col < 4; ++col) {
      TableFixture f;
      f.table = 2;
      f.column = col + 1;
      f.family = StateFamily::tripartite_six_term;
      f.modes = {2, 3, 1};
      const double gs = gshift[col] / 3.0;
      const double ts = tsign[col];
      f.coords = [gs, ts, acot_rt2](const FixtureParams& p) {
        return DeviceParams{kPi * (2 * p.m + 1 + gs), kPi * p.n + ts * acot_rt2, p.psi, p.phi};
      };
      const double a = s1[col], b = s2[col];
      f.coefficients = {fc(Occupation(0, 3, 0), a, 0, 0, 3, 16, +1, -1),
                        fc(Occupation(0, 0, 3), b * kImag, 1, 0, 3, 16, +1, +2),
                        fc(Occupation(2, 1, 0), a, 0, 0, 1, 4, -1, -1),
                        fc(Occupation(2, 0, 1), -b * kImag, 1, 0, 1, 4, -1, 0),
                        fc(Occupation(0, 2, 1), b * kImag, 1, 0, 1, 16, +1, 0),
                        fc(Occupation(0, 1, 2), a, 0, 0, 1, 16, +1, +1)};
      out.push_back(std::move(f));
    }
  }
  // columns 5-8: G = pi/2 (2m+1), theta = pi/4 (2(4n+r)+1), r = 0..3
  {
    const int s1[4] = {+1, +1, -1, -1};
    const int s2[4] = {+1, -1, -1, +1};
    const int s3[4] = {-1, +1, +1, -1};
    const int s4[4] = {-1, -1, +1, +1};
    for (int r = 0; r < 4; ++r) {
      TableFixture f;
      f.table = 2;
      f.column = 5 + r;
      f.theta_uses_ntilde = true;
      f.family = StateFamily::tripartite_six_term;
      f.modes = {1, 3, 2};
      f.coords = [r](const FixtureParams& p) {
        return DeviceParams{kPi / 2.0 * (2 * p.m + 1), kPi / 4.0 * (2 * (4 * p.n + r) + 1),
                            p.psi, p.phi};
      };
      f.coefficients = {fc(Occupation(3, 0, 0), static_cast<double>(s1[r]) * kImag, 0, 1, 3, 16, -2, -1),
                        fc(Occupation(0, 0, 3), static_cast<double>(s2[r]) * kImag, 0, 1, 3, 16, +1, +2),
                        fc(Occupation(2, 0, 1), static_cast<double>(s3[r]) * kImag, 0, 1, 1, 16, -1, 0),
                        fc(Occupation(1, 2, 0), static_cast<double>(s1[r]) * kImag, 0, 1, 1, 4, 0, -1),
                        fc(Occupation(0, 2, 1), static_cast<double>(s2[r]) * kImag, 0, 1, 1, 4, +1, 0),
                        fc(Occupation(1, 0, 2), static_cast<double>(s4[r]) * kImag, 0, 1, 1, 16, 0, +1)};
      out.push_back(std::move(f));
    }
  }
  // columns 9-12: G = pi(2m+1 -+ 1/3), theta = pi n +- arctan(sqrt 2)
  {
    const int gshift[4] = {-1, +1, -1, +1};
    const int tsign[4] = {+1, +1, -1, -1};
    const int s1[4] = {+1, +1, -1, -1};
    const int s2[4] = {+1, -1, -1, +1};
    for (int col = 0; col < 4; ++col) {
      TableFixture f;
      f.table = 2;
      f.column = 9 + col;
      f.family = StateFamily::tripartite_six_term;
      f.modes = {1, 2, 3};
      const double gs = gshift[col] / 3.0;
      const double ts = tsign[col];
      f.coords = [gs, ts, atan_rt2](const FixtureParams& p) {
        return DeviceParams{kPi * (2 * p.m + 1 + gs), kPi * p.n + ts * atan_rt2, p.psi, p.phi};
      };
      const double a = s1[col], b = s2[col];
      f.coefficients = {fc(Occupation(3, 0, 0), b * kImag, 1, 0, 3, 16, -2, -1),
                        fc(Occupation(0, 3, 0), a, 0, 0, 3, 16, +1, -1),
                        fc(Occupation(2, 1, 0), a, 0, 0, 1, 16, -1, -1),
                        fc(Occupation(1, 2, 0), b * kImag, 1, 0, 1, 16, 0, -1),
                        fc(Occupation(1, 0, 2), -b * kImag, 1, 0, 1, 4, 0, +1),
                        fc(Occupation(0, 1, 2), a, 0, 0, 1, 4, +1, +1)};
      out.push_back(std::move(f));
    }
  }
}

void add_table3(std::vector<TableFixture>& out) {
  const double g_wide = 2.0 * std::atan(std::sqrt(5.0 + 2.0 * std::sqrt(3.0)));
  const double g_narrow = 2.0 * std::atan(std::sqrt(5.0 - 2.0 * std::sqrt(3.0)));
  const double th_minus = std::atan(0.5 * (1.0 - std::sqrt(3.0)));
  const double th_plus = std::atan(0.5 * (1.0 + std::sqrt(3.0)));

  struct Col {
    int gsign;
    double gmag, th0;
    int tsign;
    int s[7];  // signs of c300, c030, c003, c120, c021, c102, c012
  };
  const Col cols[8] = {
      {+1, g_wide, th_minus, +1, {+1, -1, +1, +1, +1, -1, -1}},
      {+1, g_wide, th_minus, -1, {-1, +1, +1, -1, +1, +1, +1}},
      {-1, g_wide, th_minus, +1, {-1, -1, -1, -1, -1, +1, -1}},
      {-1, g_wide, th_minus, -1, {+1, +1, -1, +1, -1, -1, +1}},
      {+1, g_narrow, th_plus, +1, {+1, +1, +1, +1, +1, -1, +1}},
      {+1, g_narrow, th_plus, -1, {-1, -1, +1, -1, +1, +1, -1}},
      {-1, g_narrow, th_plus, +1, {-1, +1, -1, -1, -1, +1, +1}},
      {-1, g_narrow, th_plus, -1, {+1, -1, -1, +1, -1, -1, -1}},
  };
  for (int i = 0; i < 8; ++i) {
    const Col& c = cols[i];
    TableFixture f;
    f.table = 3;
    f.column = i + 1;
    f.family = StateFamily::tripartite_seven_term;
    f.modes = {1, 2, 3};
    const double g0 = c.gsign * c.gmag;
    const double t0 = c.tsign * c.th0;
    f.coords = [g0, t0](const FixtureParams& p) {
      return DeviceParams{2.0 * kPi * p.m + g0, kPi * p.n + t0, p.psi, p.phi};
    };
    f.coefficients = {fc(Occupation(3, 0, 0), static_cast<double>(c.s[0]) * kImag, 1, 0, 2, 9, -2, -1),
                      fc(Occupation(0, 3, 0), cdouble(c.s[1]), 0, 0, 1, 18, +1, -1),
                      fc(Occupation(0, 0, 3), static_cast<double>(c.s[2]) * kImag, 1, 0, 1, 18, +1, +2),
                      fc(Occupation(1, 2, 0), static_cast<double>(c.s[3]) * kImag, 1, 0, 1, 6, 0, -1),
                      fc(Occupation(0, 2, 1), static_cast<double>(c.s[4]) * kImag, 1, 0, 1, 6, +1, 0),
                      fc(Occupation(1, 0, 2), static_cast<double>(c.s[5]) * kImag, 1, 0, 1, 6, 0, +1),
                      fc(Occupation(0, 1, 2), cdouble(c.s[6]), 0, 0, 1, 6, +1, +1)};
    out.push_back(std::move(f));
  }
}

void add_table4(std::vector<TableFixture>& out) {
  const double g_wide = 2.0 * std::atan(std::sqrt(2.0 + std::sqrt(3.0)));
  const double g_narrow = 2.0 * std::atan(std::sqrt(2.0 - std::sqrt(3.0)));

  // signs of c300, c030, c003, c210, c201, c102, c012 per (block, r)
  const int signs[4][4][7] = {
      {{+1, +1, +1, +1, -1, -1, +1},
       {+1, -1, -1, -1, +1, -1, -1},
       {-1, +1, -1, +1, +1, +1, +1},
       {-1, -1, +1, -1, -1, +1, -1}},
      {{-1, +1, -1, +1, +1, +1, +1},
       {-1, -1, +1, -1, -1, +1, -1},
       {+1, +1, +1, +1, -1, -1, +1},
       {+1, -1, -1, -1, +1, -1, -1}},
      {{+1, -1, +1, -1, -1, -1, -1},
       {+1, +1, -1, +1, +1, -1, +1},
       {-1, -1, -1, -1, +1, +1, -1},
       {-1, +1, +1, +1, -1, +1, +1}},
      {{-1, -1, -1, -1, +1, +1, -1},
       {-1, +1, +1, +1, -1, +1, +1},
       {+1, -1, +1, -1, -1, -1, -1},
       {+1, +1, -1, +1, +1, -1, +1}},
  };
  const int gsign[4] = {+1, -1, +1, -1};
  const double gmag[4] = {g_wide, g_wide, g_narrow, g_narrow};

  for (int block = 0; block < 4; ++block) {
    for (int r = 0; r < 4; ++r) {
      TableFixture f;
      f.table = 4;
      f.column = 4 * block + r + 1;
      f.theta_uses_ntilde = true;
      f.family = StateFamily::tripartite_seven_term;
      f.modes = {2, 1, 3};
      const double g0 = gsign[block] * gmag[block];
      f.coords = [g0, r](const FixtureParams& p) {
        return DeviceParams{2.0 * kPi * p.m + g0, kPi / 4.0 * (2 * (4 * p.n + r) + 1),
                            p.psi, p.phi};
      };
      const int* s = signs[block][r];
      f.coefficients = {fc(Occupation(3, 0, 0), static_cast<double>(s[0]) * kImag, 0, 0, 1, 18, -2, -1),
                        fc(Occupation(0, 3, 0), cdouble(s[1]), 0, 0, 2, 9, +1, -1),
                        fc(Occupation(0, 0, 3), static_cast<double>(s[2]) * kImag, 0, 0, 1, 18, +1, +2),
                        fc(Occupation(2, 1, 0), cdouble(s[3]), 0, 0, 1, 6, -1, -1),
                        fc(Occupation(2, 0, 1), static_cast<double>(s[4]) * kImag, 0, 0, 1, 6, -1, 0),
                        fc(Occupation(1, 0, 2), static_cast<double>(s[5]) * kImag, 0, 0, 1, 6, 0, +1),
                        fc(Occupation(0, 1, 2), cdouble(s[6]), 0, 0, 1, 6, +1, +1)};
      out.push_back(std::move(f));
    }
  }
}

void add_table5(std::vector<TableFixture>& out) {
  const double g_wide = 2.0 * std::atan(std::sqrt(5.0 + 2.0 * std::sqrt(3.0)));
  const double g_narrow = 2.0 * std::atan(std::sqrt(5.0 - 2.0 * std::sqrt(3.0)));
  const double th_plus = std::atan(1.0 + std::sqrt(3.0));
  const double th_minus = std::atan(1.0 - std::sqrt(3.0));

  struct Col {
    int gsign;
    double gmag, th0;
    int tsign;
    int s[7];  // signs of c300, c030, c003, c210, c201, c120, c021
  };
  const Col cols[8] = {
      {+1, g_wide, th_plus, +1, {+1, +1, -1, +1, +1, +1, -1}},
      {+1, g_wide, th_plus, -1, {-1, -1, -1, -1, +1, -1, -1}},
      {-1, g_wide, th_plus, +1, {-1, +1, +1, +1, -1, -1, +1}},
      {-1, g_wide, th_plus, -1, {+1, -1, +1, -1, -1, +1, +1}},
      {+1, g_narrow, th_minus, +1, {-1, -1, +1, -1, -1, -1, +1}},
      {+1, g_narrow, th_minus, -1, {+1, +1, +1, +1, -1, +1, +1}},
      {-1, g_narrow, th_minus, +1, {+1, -1, -1, -1, +1, +1, -1}},
      {-1, g_narrow, th_minus, -1, {-1, +1, -1, +1, +1, -1, -1}},
  };
  for (int i = 0; i < 8; ++i) {
    const Col& c = cols[i];
    TableFixture f;
    f.table = 5;
    f.column = i + 1;
    f.family = StateFamily::tripartite_seven_term;
    f.modes = {3, 1, 2};
    const double g0 = c.gsign * c.gmag;
    const double t0 = c.tsign * c.th0;
    f.coords = [g0, t0](const FixtureParams& p) {
      return DeviceParams{2.0 * kPi * p.m + g0, kPi * p.n + t0, p.psi, p.phi};
    };
    f.coefficients = {fc(Occupation(3, 0, 0), static_cast<double>(c.s[0]) * kImag, 1, 0, 1, 18, -2, -1),
                      fc(Occupation(0, 3, 0), cdouble(c.s[1]), 0, 0, 1, 18, +1, -1),
                      fc(Occupation(0, 0, 3), static_cast<double>(c.s[2]) * kImag, 1, 0, 2, 9, +1, +2),
                      fc(Occupation(2, 1, 0), cdouble(c.s[3]), 0, 0, 1, 6, -1, -1),
                      fc(Occupation(2, 0, 1), static_cast<double>(c.s[4]) * kImag, 1, 0, 1, 6, -1, 0),
                      fc(Occupation(1, 2, 0), static_cast<double>(c.s[5]) * kImag, 1, 0, 1, 6, 0, -1),
                      fc(Occupation(0, 2, 1), static_cast<double>(c.s[6]) * kImag, 1, 0, 1, 6, +1, 0)};
    out.push_back(std::move(f));
  }
}

std::vector<TableFixture> make_fixtures() {
  std::vector<TableFixture> out;
  out.reserve(47);
  add_table1(out);
  add_table2(out);
  add_table3(out);
  add_table4(out);
  add_table5(out);
  return out;
}

}  // namespace

const char* to_string(StateFamily family) {
  switch (family) {
    case StateFamily::bipartite: return "bipartite";
    case StateFamily::tripartite_six_term: return "tripartite_six_term";
    case StateFamily::tripartite_seven_term: return "tripartite_seven_term";
    case StateFamily::unclassified: return "unclassified";
  }
  return "unclassified";
}

cdouble FixtureCoefficient::value(const FixtureParams& p) const {
  const double parity = ((parity_n * p.n + parity_m * p.m) % 2 == 0) ? 1.0 : -1.0;
  return unit * parity * magnitude() *
         std::polar(1.0, psi_factor * p.psi + phi_factor * p.phi);
}

double FixtureCoefficient::magnitude() const {
  return std::sqrt(static_cast<double>(mag_sq_num) / static_cast<double>(mag_sq_den));
}

StateClass classify(const OutputState& state, double tol) {
  if (state.input().total() != 3) {
    throw std::invalid_argument("classify: templates are defined for 3-photon states");
  }
  if (!(tol > 0)) throw std::invalid_argument("classify: tolerance must be positive");

  std::map<Occupation, double> supp;
  for (std::size_t i = 0; i < state.basis().size(); ++i) {
    const double mag = std::abs(state.amplitudes()[i]);
    if (mag > tol) supp[state.basis()[i]] = mag;
  }

  const StateFamily families[] = {StateFamily::bipartite, StateFamily::tripartite_six_term,
                                  StateFamily::tripartite_seven_term};
  for (StateFamily family : families) {
    std::array<int, 3> jkl{1, 2, 3};
    do {
      const auto tmpl = family_template(family, jkl);
      if (tmpl.size() != supp.size()) continue;
      bool match = true;
      for (const auto& [occ, mag] : tmpl) {
        const auto it = supp.find(occ);
        if (it == supp.end() || std::fabs(it->second - mag) > tol) {
          match = false;
          break;
        }
      }
      if (match) return {family, jkl};
    } while (std::next_permutation(jkl.begin(), jkl.end()));
  }
  return {StateFamily::unclassified, {0, 0, 0}};
}

const std::vector<TableFixture>& special_state_fixtures() {
  static const std::vector<TableFixture> fixtures = make_fixtures();
  return fixtures;
}

bool VerificationReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.pass; });
}

double VerificationReport::max_dev() const {
  double worst = 0;
  for (const VerificationRecord& r : records) worst = std::max(worst, r.max_dev);
  return worst;
}

VerificationRecord verify_fixture(const TableFixture& fixture, const FixtureParams& params,
                                  double tol) {
  const OutputState state = evolve(fixture.coords(params), Occupation(1, 1, 1));

  double worst = 0;
  for (std::size_t i = 0; i < state.basis().size(); ++i) {
    cdouble expected = 0.0;
    for (const FixtureCoefficient& c : fixture.coefficients) {
      if (c.occ == state.basis()[i]) {
        expected = c.value(params);
        break;
      }
    }
    worst = std::max(worst, std::abs(state.amplitudes()[i] - expected));
  }
  return {fixture.table, fixture.column, params, worst <= tol, worst};
}

VerificationReport verify_fixtures(const std::vector<FixtureParams>& samples, double tol) {
  VerificationReport report;
  report.tol = tol;
  report.records.reserve(special_state_fixtures().size() * samples.size());
  for (const TableFixture& fixture : special_state_fixtures()) {
    for (const FixtureParams& params : samples) {
      report.records.push_back(verify_fixture(fixture, params, tol));
    }
  }
  return report;
}

std::vector<FixtureParams> default_fixture_samples() {
  std::vector<FixtureParams> samples;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      samples.push_back({m, n, 0.0, 0.0});
      samples.push_back({m, n, 0.7, -1.3});
    }
  }
  return samples;
}

}  // namespace triphoton
