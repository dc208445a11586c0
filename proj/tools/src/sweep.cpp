#include "pwll_tools/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "pwll/continuum.hpp"
#include "pwll/errors.hpp"

namespace pwll::sweep {

const char* const kHeader =
    "line,check,kind,density,rho,length,tau,m,alpha,delta,r_s,beta,rho_o,s,"
    "measured,reference,upper,lower,holds";

namespace {

const std::map<std::string, std::vector<std::string>>& Allowed() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"bvp", {"kind", "density", "rho", "length", "tau", "m", "alpha", "delta"}},
      {"exploration", {"rho", "r_s", "beta", "tau"}},
      {"bounds", {"r_s", "beta", "delta", "alpha", "rho", "rho_o", "tau", "m"}},
      {"moat", {"length", "s", "delta", "rho", "tau", "m"}},
  };
  return keys;
}

const std::map<std::string, std::string>& Defaults() {
  static const std::map<std::string, std::string> d{
      {"kind", "same"}, {"density", "const"}, {"rho", "1"},   {"length", "1"},
      {"tau", "1"},     {"m", "1024"},        {"alpha", "0.75"}, {"delta", "0.03125"},
      {"r_s", "2"},     {"beta", "0.2"},      {"rho_o", "1"}, {"s", "1"},
  };
  return d;
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double Number(const std::string& v, const Line& line, const std::string& key) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(x)) {
    throw ConfigError(line.number, "bad number '" + v + "' for " + key);
  }
  return x;
}

std::string Fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

struct Row {
  std::map<std::string, std::string> params;
  double measured = NAN, reference = NAN, upper = NAN, lower = NAN;
  std::string holds;
};

Row Evaluate(const Line& line, const std::map<std::string, std::string>& p) {
  auto num = [&](const std::string& k) { return Number(p.at(k), line, k); };
  auto grid = [&](const std::string& k) {
    const double m = num(k);
    if (m < 64 || m != std::floor(m)) {
      throw ConfigError(line.number, "m must be an integer >= 64");
    }
    return static_cast<Index>(m);
  };
  Row row;
  row.params = p;
  if (line.check == "bvp") {
    BoundaryKind kind;
    if (p.at("kind") == "same") {
      kind = BoundaryKind::kSame;
    } else if (p.at("kind") == "opposite") {
      kind = BoundaryKind::kOpposite;
    } else {
      throw ConfigError(line.number, "kind must be same or opposite");
    }
    const double rho = num("rho"), length = num("length"), tau = num("tau");
    std::function<double(double)> density;
    const bool constant = p.at("density") == "const";
    if (constant) {
      density = [rho](double) { return rho; };
    } else if (p.at("density") == "trapezoid") {
      density = TrapezoidDensity{length, num("delta"), num("alpha"), rho};
    } else {
      throw ConfigError(line.number, "density must be const or trapezoid");
    }
    IntervalProblem prob = make_problem(length, density, tau, kind, grid("m"));
    if (!constant) {
      check_symmetric(prob.rho);
      check_monotone_ends(prob.rho);
    }
    const IntervalSolution s = solve_bvp(prob);
    row.measured = s.min_value;
    if (constant) {
      row.reference = midpoint_acquisition_constant(rho, tau, length, kind);
      row.holds = std::abs(row.measured - row.reference) <= 1e-4 ? "true" : "false";
    }
  } else if (line.check == "exploration") {
    const ExplorationCheck c =
        check_exploration_condition(num("rho"), num("r_s"), num("beta"), num("tau"));
    row.measured = c.t_star;
    row.reference = std::pow(2.0 * std::sqrt(num("rho")) * c.t_star / num("r_s"), 2);
    row.upper = 2.0 * num("rho") / (num("r_s") * num("r_s"));
    row.holds = c.explorative ? "true" : "false";
  } else if (line.check == "bounds") {
    GeneralBoundsInput in;
    in.r_s = num("r_s");
    in.beta = num("beta");
    in.delta = num("delta");
    in.alpha = num("alpha");
    in.rho_s_max = num("rho");
    in.rho_o = num("rho_o");
    in.tau = num("tau");
    in.m = grid("m");
    const GeneralBoundsReport r = check_general_1d_bounds(in);
    row.measured = r.as_mid;
    row.reference = r.ao_min;
    row.upper = r.as_upper;
    row.lower = r.ao_lower;
    row.holds = !r.hypotheses ? "na"
                : (r.explorative && r.as_bound_holds && r.ao_bound_holds) ? "true"
                                                                          : "false";
  } else {
    const MoatReport r = check_moat_bound(num("length"), num("s"), num("delta"),
                                          num("rho"), num("tau"), grid("m"));
    row.measured = r.midpoint;
    row.upper = r.bound;
    row.holds = !r.condition ? "na" : r.holds ? "true" : "false";
  }
  return row;
}

}  // namespace

std::vector<Line> parse(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw.substr(0, raw.find('#')));
    Line line;
    line.number = number;
    if (!(words >> line.check)) continue;
    const auto allowed = Allowed().find(line.check);
    if (allowed == Allowed().end()) {
      throw ConfigError(number, "unknown check '" + line.check + "'");
    }
    std::string word;
    while (words >> word) {
      const auto eq = word.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == word.size()) {
        throw ConfigError(number, "expected key=values, got '" + word + "'");
      }
      const std::string key = word.substr(0, eq);
      const auto& names = allowed->second;
      if (std::find(names.begin(), names.end(), key) == names.end()) {
        throw ConfigError(number, "key '" + key + "' does not apply to " + line.check);
      }
      for (const auto& [k, v] : line.keys) {
        if (k == key) throw ConfigError(number, "duplicate key '" + key + "'");
      }
      std::vector<std::string> values = Split(word.substr(eq + 1), ',');
      for (const auto& v : values) {
        if (v.empty()) throw ConfigError(number, "empty value for " + key);
      }
      line.keys.emplace_back(key, std::move(values));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

void run(const std::vector<Line>& lines, std::ostream& out) {
  static const std::vector<std::string> param_columns{
      "kind", "density", "rho", "length", "tau", "m", "alpha", "delta", "r_s", "beta", "rho_o", "s"};
  out << kHeader << '\n';
  for (const Line& line : lines) {
    const auto& names = Allowed().at(line.check);
    std::size_t total = 1;
    for (const auto& kv : line.keys) total *= kv.second.size();
    for (std::size_t t = 0; t < total; ++t) {
      std::map<std::string, std::string> p;
      for (const auto& name : names) p[name] = Defaults().at(name);
      // Mixed-radix decode of t, last key fastest.
      std::size_t rest = t;
      for (std::size_t k = line.keys.size(); k-- > 0;) {
        const auto& values = line.keys[k].second;
        p[line.keys[k].first] = values[rest % values.size()];
        rest /= values.size();
      }
      const Row row = Evaluate(line, p);
      out << line.number << ',' << line.check;
      for (const auto& c : param_columns) {
        out << ',';
        auto it = row.params.find(c);
        if (it != row.params.end()) out << it->second;
      }
      out << ',' << Fmt(row.measured) << ',' << Fmt(row.reference) << ','
          << Fmt(row.upper) << ',' << Fmt(row.lower) << ',' << row.holds << '\n';
    }
  }
}

}  // namespace pwll::sweep
