#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "airycoef/bleistein.hpp"
#include "airycoef/errors.hpp"
#include "airycoef/format.hpp"
#include "airycoef/numeric.hpp"
#include "airycoef/pcf.hpp"
#include "airycoef/residue.hpp"

namespace airycoef::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> names(const std::vector<Var>& vs) {
  std::vector<std::string> out;
  for (Var v : vs) out.push_back(v.name());
  return out;
}

Json table_json(const std::string& command, const bleistein::CoeffTable& table) {
  Json j;
  j["command"] = command;
  j["variables"] = names(table.variables);
  j["alpha"] = Json::array();
  j["beta"] = Json::array();
  for (const auto& a : table.alphas) j["alpha"].push_back(to_string(a));
  for (const auto& b : table.betas) j["beta"].push_back(to_string(b));
  j["meta"] = {{"order", table.order()}, {"source", table.source}};
  return j;
}

std::string big_string(const numeric::BigFloat& x, unsigned digits) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << std::scientific << x;
  return os.str();
}

// Parses a coefficient name such as "alpha2" or "beta10".
std::pair<bool, unsigned> parse_coeff_name(const std::string& name) {
  std::string digits;
  bool alpha;
  if (name.rfind("alpha", 0) == 0) {
    alpha = true;
    digits = name.substr(5);
  } else if (name.rfind("beta", 0) == 0) {
    alpha = false;
    digits = name.substr(4);
  } else {
    throw UsageError("--coeff must look like alphaN or betaN");
  }
  if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("--coeff must look like alphaN or betaN");
  }
  const unsigned n = static_cast<unsigned>(std::stoul(digits));
  if (n > kMaxOrder) throw UsageError("--coeff index exceeds the maximum order " + std::to_string(kMaxOrder));
  return {alpha, n};
}

void check_config(const RunConfig& c) {
  if (c.order > kMaxOrder) throw UsageError("--order must be at most " + std::to_string(kMaxOrder));
  if (c.terms < 1 || c.terms > kMaxTerms) throw UsageError("--terms must be in 1.." + std::to_string(kMaxTerms));
  if (c.precision < kMinPrecision) throw UsageError("--precision must be at least " + std::to_string(kMinPrecision));
  if (c.command == Command::PcfMaclaurin) parse_coeff_name(c.coeff);
  if (c.command == Command::OracleCheck && c.f0.empty()) throw UsageError("oracle-check needs --f0");
}

RatFunc parse_input(const std::string& text, const char* flag) {
  try {
    return parse_ratfunc(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  } catch (const DivisionByZeroError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// Canonical description of the inputs that determine the result.
std::string cache_key(const RunConfig& c) {
  Json k;
  k["command"] = command_name(c.command);
  switch (c.command) {
    case Command::RationalExample:
      k["order"] = c.order;
      k["shift"] = to_string(parse_input(c.shift, "--c"));
      break;
    case Command::PcfCoeffs:
      k["order"] = c.order;
      break;
    case Command::PcfMaclaurin:
      k["coeff"] = c.coeff;
      k["terms"] = c.terms;
      break;
    case Command::Validate:
      k["order"] = c.order;
      k["mu"] = c.mu;
      k["t"] = c.t;
      k["precision"] = c.precision;
      break;
    case Command::OracleCheck:
      k["order"] = c.order;
      k["f0"] = to_string(parse_input(c.f0, "--f0"));
      break;
  }
  return k.dump();
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::optional<Json> load(const std::string& command, const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path(command, key));
    if (!in) return std::nullopt;
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.contains("key") || doc["key"] != key || !doc.contains("result")) {
      return std::nullopt;
    }
    return doc["result"];
  }

  void store(const std::string& command, const std::string& key, const Json& result) const {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) throw MathError("cache directory is not usable: " + dir_);
    const fs::path target = path(command, key);
    const fs::path tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw MathError("cannot write to cache directory: " + dir_);
      out << Json{{"key", key}, {"result", result}}.dump(2) << "\n";
      if (!out) throw MathError("cannot write to cache directory: " + dir_);
    }
    fs::rename(tmp, target, ec);
    if (ec) throw MathError("cannot write to cache directory: " + dir_);
  }

 private:
  fs::path path(const std::string& command, const std::string& key) const {
    return fs::path(dir_) / (command + "-" + fnv1a_hex(key) + ".json");
  }

  std::string dir_;
};

Json compute(const RunConfig& c) {
  switch (c.command) {
    case Command::RationalExample: {
      const RatFunc shift = parse_input(c.shift, "--c");
      if (!shift.is_constant()) throw UsageError("--c must be a number");
      const RatFunc f0 = RatFunc(1) / (RatFunc::variable(vars::t) + shift);
      bleistein::RationalTaylorProvider provider(f0);
      auto table = bleistein::table_in_eta(bleistein::alpha_beta(provider, c.order));
      table.source = "f0 = " + to_string(f0);
      return table_json("rational-example", table);
    }
    case Command::PcfCoeffs:
      return table_json("pcf-coeffs", pcf::pcf_coeff_table(c.order));
    case Command::PcfMaclaurin: {
      const auto [is_alpha, n] = parse_coeff_name(c.coeff);
      const auto table = pcf::pcf_coeff_table(n);
      const RatFunc& form = is_alpha ? table.alphas[n] : table.betas[n];
      const auto series = pcf::maclaurin_of_coeff(form, c.terms - 1);
      Json j;
      j["command"] = "pcf-maclaurin";
      j["variables"] = {"eta"};
      j["coeff"] = c.coeff;
      j["form"] = to_string(form);
      j["series"] = Json::array();
      for (const auto& q : series.coeffs()) j["series"].push_back(to_string(q));
      if (c.terms >= 12) {
        const auto r = pcf::radius_estimate(series);
        std::ostringstream ratio, fit, extra;
        ratio << std::setprecision(8) << r.ratio;
        fit << std::setprecision(8) << r.fit;
        extra << std::setprecision(8) << r.extrapolated;
        j["radius"] = {{"ratio", ratio.str()}, {"fit", fit.str()}, {"extrapolated", extra.str()}};
      }
      j["meta"] = {{"terms", c.terms}, {"source", table.source}};
      return j;
    }
    case Command::Validate: {
      numeric::PrecisionScope scope(c.precision);
      numeric::BigFloat mu, t;
      try {
        mu = numeric::from_string(c.mu);
        t = numeric::from_string(c.t);
      } catch (const std::exception&) {
        throw UsageError("--mu and --t must be decimal numbers");
      }
      const numeric::CoefficientEvaluator coeffs(pcf::pcf_coeff_table(c.order));
      const auto ev = numeric::compare(mu, t, c.order, coeffs, c.precision);
      const unsigned digits = std::min(30u, numeric::bits_to_digits(c.precision) - 2);
      Json j;
      j["command"] = "validate";
      j["variables"] = {"eta", "xi"};
      j["alpha"] = Json::array();
      j["beta"] = Json::array();
      for (const auto& a : coeffs.table().alphas) j["alpha"].push_back(to_string(a));
      for (const auto& b : coeffs.table().betas) j["beta"].push_back(to_string(b));
      j["evaluation"] = {{"mu", c.mu}, {"t", c.t}, {"reference", big_string(ev.reference, digits)}};
      j["evaluation"]["partial_sums"] = Json::array();
      j["evaluation"]["rel_errors"] = Json::array();
      for (const auto& p : ev.partial_sums) j["evaluation"]["partial_sums"].push_back(big_string(p, digits));
      for (const auto& e : ev.rel_errors) j["evaluation"]["rel_errors"].push_back(big_string(e, 6));
      j["meta"] = {{"order", c.order}, {"precision", c.precision}, {"source", coeffs.table().source}};
      return j;
    }
    case Command::OracleCheck: {
      const RatFunc f0 = parse_input(c.f0, "--f0");
      const auto oracle = residue::oracle_alpha_beta(f0, c.order);
      bleistein::RationalTaylorProvider provider(f0);
      const auto algo = bleistein::table_in_eta(bleistein::alpha_beta(provider, c.order));
      bool agree = true;
      for (unsigned n = 0; n <= c.order; ++n) {
        agree = agree && oracle.alphas[n] == algo.alphas[n] && oracle.betas[n] == algo.betas[n];
      }
      auto table = algo;
      table.source = "f0 = " + to_string(f0);
      Json j = table_json("oracle-check", table);
      j["meta"]["agree"] = agree;
      return j;
    }
  }
  throw std::logic_error("unknown command");
}

std::string latex_name(const std::string& key) { return key == "alpha" ? "\\alpha" : "\\beta"; }

std::string render_table(const Json& j, Format f) {
  std::ostringstream os;
  const std::size_t n = j["alpha"].size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const char* key : {"alpha", "beta"}) {
      const std::string value = j[key][i].get<std::string>();
      if (f == Format::Latex) {
        os << latex_name(key) << "_{" << i << "} = " << to_latex(parse_ratfunc(value)) << " \\\\\n";
      } else {
        os << key << "_" << i << " = " << value << "\n";
      }
    }
  }
  return os.str();
}

std::string render_series(const Json& j, Format f) {
  // Ascending powers of eta.
  std::string line;
  unsigned k = 0;
  for (const auto& c : j["series"]) {
    const Rational q = parse_rational(c.get<std::string>());
    const MultiPoly term = MultiPoly::monomial(q, Monomial::of(vars::eta, k++));
    if (term.is_zero()) continue;
    const std::string s = f == Format::Latex ? to_latex(term) : to_string(term);
    if (!line.empty() && s[0] != '-') line += "+";
    line += s;
  }
  std::ostringstream os;
  os << (line.empty() ? "0" : line) << "\n";
  if (j.contains("radius")) {
    os << "radius: ratio " << j["radius"]["ratio"].get<std::string>() << ", fit "
       << j["radius"]["fit"].get<std::string>() << ", extrapolated " << j["radius"]["extrapolated"].get<std::string>()
       << "\n";
  }
  return os.str();
}

std::string render_validation(const Json& j, Format f) {
  std::ostringstream os;
  const auto& ev = j["evaluation"];
  os << "mu = " << ev["mu"].get<std::string>() << ", t = " << ev["t"].get<std::string>()
     << ", precision = " << j["meta"]["precision"].get<unsigned>() << " bits\n";
  os << "reference U = " << ev["reference"].get<std::string>() << "\n";
  for (std::size_t n = 0; n < ev["partial_sums"].size(); ++n) {
    os << "N = " << n << ": " << ev["partial_sums"][n].get<std::string>()
       << "  rel. error " << ev["rel_errors"][n].get<std::string>() << "\n";
  }
  (void)f;
  return os.str();
}

std::string render(const Json& j, Format f) {
  if (f == Format::Json) return j.dump(2) + "\n";
  const std::string command = j["command"].get<std::string>();
  if (command == "pcf-maclaurin") return render_series(j, f);
  if (command == "validate") return render_validation(j, f);
  std::string out = render_table(j, f);
  if (command == "oracle-check") out += j["meta"]["agree"].get<bool>() ? "oracle: agree\n" : "oracle: MISMATCH\n";
  return out;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::RationalExample:
      return "rational-example";
    case Command::PcfCoeffs:
      return "pcf-coeffs";
    case Command::PcfMaclaurin:
      return "pcf-maclaurin";
    case Command::Validate:
      return "validate";
    case Command::OracleCheck:
      return "oracle-check";
  }
  return "unknown";
}

RunResult run(const RunConfig& config) {
  RunResult r;
  try {
    check_config(config);
    const Cache cache(config.cache_dir);
    const std::string name = command_name(config.command);
    const std::string key = cache_key(config);
    std::optional<Json> doc = cache.load(name, key);
    if (doc) {
      r.from_cache = true;
    } else {
      doc = compute(config);
      cache.store(name, key, *doc);
    }
    r.output = render(*doc, config.format);
    if (config.command == Command::OracleCheck && !(*doc)["meta"]["agree"].get<bool>()) {
      r.exit_code = kDomainError;
      r.error = "oracle and algorithm disagree\n";
    }
  } catch (const UsageError& e) {
    r.exit_code = kUsageError;
    r.error = std::string("error: ") + e.what() + "\n";
  } catch (const MathError& e) {
    r.exit_code = kDomainError;
    r.error = std::string("error: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    r.exit_code = kDomainError;
    r.error = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients of Airy-type uniform asymptotic expansions"};
  app.require_subcommand(1);
  RunConfig config;
  if (const char* env = std::getenv(kCacheEnv)) config.cache_dir = env;

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--precision", config.precision, "Working precision in bits (validate)");
  app.add_option("--cache-dir", config.cache_dir, std::string("Result cache directory (default: $") + kCacheEnv + ")");

  auto* rational = app.add_subcommand("rational-example", "Coefficient table for f0 = 1/(t + c)");
  rational->add_option("--order", config.order, "Highest n")->capture_default_str();
  rational->add_option("--c", config.shift, "Pole shift c (rational)")->capture_default_str();

  auto* coeffs = app.add_subcommand("pcf-coeffs", "alpha_n, beta_n of U(a,x) in (eta, xi)");
  coeffs->add_option("--order", config.order, "Highest n")->required();

  auto* maclaurin = app.add_subcommand("pcf-maclaurin", "Maclaurin series in eta of one coefficient");
  maclaurin->add_option("--coeff", config.coeff, "alphaN or betaN")->required();
  maclaurin->add_option("--terms", config.terms, "Number of series coefficients")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Compare the expansion of U(a,x) with quadrature");
  validate->add_option("--mu", config.mu, "Large parameter mu (decimal)")->required();
  validate->add_option("--t", config.t, "Scaled argument t > 1 (decimal)")->required();
  validate->add_option("--order", config.order, "Highest n")->required();

  auto* oracle = app.add_subcommand("oracle-check", "Cross-check the algorithm against residues");
  oracle->add_option("--f0", config.f0, "Rational f0(t), e.g. 1/(t+2)")->required();
  oracle->add_option("--order", config.order, "Highest n")->capture_default_str();

  for (auto* sub : {rational, coeffs, maclaurin, validate, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsageError;
  }

  config.format = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  if (*rational) config.command = Command::RationalExample;
  if (*coeffs) config.command = Command::PcfCoeffs;
  if (*maclaurin) config.command = Command::PcfMaclaurin;
  if (*validate) config.command = Command::Validate;
  if (*oracle) config.command = Command::OracleCheck;

  const RunResult r = run(config);
  out << r.output;
  err << r.error;
  return r.exit_code;
}

}  // namespace airycoef::cli
