#include "chebpol/experiment.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "chebpol/errors.hpp"

namespace chebpol {

namespace {

struct KvTable {
  std::map<std::string, std::map<std::string, std::string>> sections;

  const std::string* find(const std::string& section, const std::string& key) const {
    auto s = sections.find(section);
    if (s == sections.end()) return nullptr;
    auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    return &k->second;
  }

  std::string field(const std::string& section, const std::string& key) const {
    return section.empty() ? key : section + "." + key;
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
  }

  double get_double(const std::string& section, const std::string& key,
                    double fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      double x = std::stod(*v, &used);
      if (used != v->size()) throw std::invalid_argument("trailing");
      return x;
    } catch (const std::exception&) {
      throw InvalidArgumentError("config: bad number in field " + field(section, key));
    }
  }

  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const {
    double d = get_double(section, key, double(fallback));
    if (std::fabs(d - std::llround(d)) > 1e-9)
      throw InvalidArgumentError("config: expected integer in field " +
                                 field(section, key));
    return std::llround(d);
  }

  std::vector<double> get_list(const std::string& section,
                               const std::string& key) const {
    const std::string* v = find(section, key);
    std::vector<double> out;
    if (!v) return out;
    std::string cleaned = *v;
    for (char& c : cleaned)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) {
      try {
        out.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw InvalidArgumentError("config: bad list entry in field " +
                                   field(section, key));
      }
    }
    return out;
  }
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

KvTable parse_kv(const std::string& text) {
  KvTable t;
  std::string section;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw InvalidArgumentError("config: malformed section header at line " +
                                   std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgumentError("config: expected key = value at line " +
                                 std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw InvalidArgumentError("config: empty key or value at line " +
                                 std::to_string(lineno));
    t.sections[section][key] = value;
  }
  return t;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  KvTable t = parse_kv(text);
  ExperimentConfig c;

  c.version = int(t.get_int("", "version", 0));
  if (c.version != 1)
    throw InvalidArgumentError("config: unsupported or missing field version");
  c.task = t.get_string("", "task", "");
  if (c.task != "solve" && c.task != "energy" && c.task != "sigma" &&
      c.task != "distribution" && c.task != "limits")
    throw InvalidArgumentError("config: unknown task in field task");

  c.set_kind = t.get_string("set", "kind", "");
  if (c.set_kind.empty())
    throw InvalidArgumentError("config: missing field set.kind");
  c.interval_a = t.get_double("set", "a", c.interval_a);
  c.interval_b = t.get_double("set", "b", c.interval_b);
  c.radius = t.get_double("set", "radius", c.radius);
  c.dim = int(t.get_int("set", "dim", c.dim));

  c.kernel_kind = t.get_string("kernel", "kind", c.kernel_kind);
  c.s = t.get_double("kernel", "s", c.s);
  c.eps = t.get_double("kernel", "eps", c.eps);

  if (t.find("weight", "name")) {
    c.weight_name = t.get_string("weight", "name", "");
    c.weight_value = t.get_double("weight", "value", c.weight_value);
    c.weight_base = t.get_double("weight", "base", c.weight_base);
    c.weight_amp = t.get_double("weight", "amp", c.weight_amp);
  }

  for (double v : t.get_list("schedule", "N")) {
    if (v < 1 || std::fabs(v - std::llround(v)) > 1e-9)
      throw InvalidArgumentError("config: bad count in field schedule.N");
    c.schedule.push_back(std::size_t(std::llround(v)));
  }
  for (std::size_t i = 1; i < c.schedule.size(); ++i)
    if (c.schedule[i] <= c.schedule[i - 1])
      throw InvalidArgumentError(
          "config: field schedule.N must be strictly increasing");

  c.method = t.get_string("solver", "method", c.method);
  if (c.method != "anneal" && c.method != "exchange" && c.method != "multistart")
    throw InvalidArgumentError("config: unknown method in field solver.method");
  c.restarts = int(t.get_int("solver", "restarts", c.restarts));
  c.seed = std::uint64_t(t.get_int("solver", "seed", std::int64_t(c.seed)));
  c.budget = long(t.get_int("solver", "budget", c.budget));
  c.target_gap_rel = t.get_double("solver", "target_gap_rel", c.target_gap_rel);
  c.target_gap_abs = t.get_double("solver", "target_gap_abs", c.target_gap_abs);
  c.configs_mode = t.get_string("solver", "configs", c.configs_mode);
  if (c.configs_mode != "auto" && c.configs_mode != "optimal" &&
      c.configs_mode != "solver")
    throw InvalidArgumentError("config: unknown mode in field solver.configs");

  c.bins = int(t.get_int("distribution", "bins", c.bins));
  c.tolerance = t.get_double("distribution", "tolerance", c.tolerance);

  c.s_list = t.get_list("limits", "s");

  c.out_json = t.get_string("output", "json", c.out_json);
  c.out_csv = t.get_string("output", "csv", c.out_csv);

  // cross-checks
  if (c.kernel_kind == "weighted-riesz" && !c.weight_name)
    throw InvalidArgumentError(
        "config: weighted-riesz kernel needs a [weight] section (field weight.name)");
  if (c.task == "limits" && c.s_list.empty())
    throw InvalidArgumentError("config: task limits needs field limits.s");
  if (c.task != "limits" && c.schedule.empty())
    throw InvalidArgumentError("config: missing field schedule.N");

  (void)c.make_set();
  (void)c.make_kernel();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Set ExperimentConfig::make_set() const {
  if (set_kind == "interval") return Set::interval(interval_a, interval_b);
  if (set_kind == "circle") return Set::circle(radius);
  if (set_kind == "sphere") return Set::sphere(dim);
  if (set_kind == "ball") return Set::ball(dim);
  if (set_kind == "cube") return Set::cube(dim);
  throw InvalidArgumentError("config: unknown set kind in field set.kind");
}

std::optional<WeightSpec> ExperimentConfig::make_weight() const {
  if (!weight_name) return std::nullopt;
  if (*weight_name == "constant") return WeightSpec::constant(weight_value);
  if (*weight_name == "cosine")
    return WeightSpec::circle_cosine(weight_base, weight_amp, radius);
  if (*weight_name == "zcosine")
    return WeightSpec::sphere_zcosine(weight_base, weight_amp);
  throw InvalidArgumentError("config: unknown weight in field weight.name");
}

Kernel ExperimentConfig::make_kernel() const {
  if (kernel_kind == "riesz") return Kernel::riesz(s, eps);
  if (kernel_kind == "log") return Kernel::log_kernel(eps);
  if (kernel_kind == "weighted-riesz") {
    auto w = make_weight();
    if (!w)
      throw InvalidArgumentError(
          "config: weighted-riesz kernel needs a [weight] section (field weight.name)");
    return Kernel::weighted_riesz(s, *w, eps);
  }
  throw InvalidArgumentError("config: unknown kernel kind in field kernel.kind");
}

SolveOptions ExperimentConfig::make_solve_options() const {
  SolveOptions o;
  o.method = method == "anneal"     ? SolveMethod::anneal
             : method == "exchange" ? SolveMethod::exchange
                                    : SolveMethod::multistart;
  o.restarts = restarts;
  o.seed = seed;
  o.budget = budget;
  o.certify.target_gap_rel = target_gap_rel;
  o.certify.target_gap_abs = target_gap_abs;
  return o;
}

}  // namespace chebpol
