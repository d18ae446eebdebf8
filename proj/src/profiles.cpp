#include "minsurf/profiles.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "minsurf/io.hpp"

namespace minsurf {
namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::map<std::string, std::string> parse_args(const std::string& body,
                                              const std::string& ctx) {
  std::map<std::string, std::string> out;
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::usage, "profile '" + ctx + "': expected key=value, got '" + item + "'");
    out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return out;
}

double get_num(const std::map<std::string, std::string>& args,
               const std::string& key, double dflt) {
  auto it = args.find(key);
  return it == args.end() ? dflt : std::stod(it->second);
}

}  // namespace

ProfileSpec ProfileSpec::parse(const std::string& text) {
  std::string s = trim(text);
  std::string name = s;
  std::string body;
  size_t open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')')
      fail(ErrorKind::usage, "profile descriptor missing ')': " + text);
    name = trim(s.substr(0, open));
    body = s.substr(open + 1, s.size() - open - 2);
  }
  auto args = parse_args(body, name);
  ProfileSpec p;
  if (name == "zero") {
    p.kind = Kind::zero;
  } else if (name == "constant") {
    p.kind = Kind::constant;
    p.value = get_num(args, "value", 0.0);
  } else if (name == "gaussian") {
    p.kind = Kind::gaussian;
    p.a = get_num(args, "a", 1.0);
    p.sigma = get_num(args, "sigma", 1.0);
    p.center = get_num(args, "center", 0.0);
  } else if (name == "compact-bump" || name == "bump") {
    p.kind = Kind::compact_bump;
    p.a = get_num(args, "a", 1.0);
    p.sigma = get_num(args, "sigma", 1.0);
    p.lo = get_num(args, "lo", -1.0);
    p.hi = get_num(args, "hi", 1.0);
    if (!(p.lo < p.hi))
      fail(ErrorKind::usage, "compact-bump: need lo < hi in " + text);
    p.center = get_num(args, "center", 0.5 * (p.lo + p.hi));
  } else if (name == "file") {
    p.kind = Kind::file;
    auto it = args.find("path");
    if (it == args.end()) fail(ErrorKind::usage, "file profile needs path=...: " + text);
    p.path = it->second;
  } else {
    fail(ErrorKind::usage, "unknown profile descriptor: " + text);
  }
  return p;
}

std::string ProfileSpec::str() const {
  std::ostringstream ss;
  switch (kind) {
    case Kind::zero: return "zero";
    case Kind::constant:
      ss << "constant(value=" << value << ")"; break;
    case Kind::gaussian:
      ss << "gaussian(a=" << a << ",sigma=" << sigma << ",center=" << center << ")"; break;
    case Kind::compact_bump:
      ss << "compact-bump(a=" << a << ",sigma=" << sigma << ",lo=" << lo << ",hi=" << hi << ")"; break;
    case Kind::file:
      ss << "file(path=" << path << ")"; break;
  }
  return ss.str();
}

double ProfileSpec::operator()(double x) const {
  switch (kind) {
    case Kind::zero: return 0.0;
    case Kind::constant: return value;
    case Kind::gaussian: {
      const double z = (x - center) / sigma;
      return a * std::exp(-0.5 * z * z);
    }
    case Kind::compact_bump: {
      const double y = (2.0 * x - lo - hi) / (hi - lo);
      if (std::abs(y) >= 1.0) return 0.0;
      const double z = (x - center) / sigma;
      return a * std::exp(-0.5 * z * z) * std::exp(1.0 - 1.0 / (1.0 - y * y));
    }
    case Kind::file:
      fail(ErrorKind::usage, "file profile has no pointwise evaluation");
  }
  return 0.0;
}

SampledFunction1D sample(const ProfileSpec& spec, const GridSpec1D& grid) {
  std::vector<double> v(grid.count);
  if (spec.kind == ProfileSpec::Kind::file) {
    SampledFunction1D f = read_profile_csv(spec.path);
    for (int i = 0; i < grid.count; ++i) v[i] = eval(f, grid.x(i));
  } else {
    for (int i = 0; i < grid.count; ++i) v[i] = spec(grid.x(i));
  }
  return SampledFunction1D(grid, std::move(v));
}

}  // namespace minsurf
