#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwll::sweep {

// One line of a sweep file: "<check> key=v1,v2 key=v ...". Each line
// expands to the cartesian product of its value lists.
//
//   bvp          kind=same|opposite density=const|trapezoid rho length tau
//                m alpha delta
//   exploration  rho r_s beta tau
//   bounds       r_s beta delta alpha rho rho_o tau m   (rho = Same rho_max)
//   moat         length s delta rho tau m
//
// Unset keys take the defaults listed in kColumns order below.
struct Line {
  std::size_t number = 0;
  std::string check;
  std::vector<std::pair<std::string, std::vector<std::string>>> keys;
};

// Throws pwll::ConfigError with the offending line.
std::vector<Line> parse(std::istream& in);

// CSV header plus one row per expanded parameter tuple.
void run(const std::vector<Line>& lines, std::ostream& out);

extern const char* const kHeader;

}  // namespace pwll::sweep
