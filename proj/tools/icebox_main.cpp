// Command-line front end: state enumeration, exact partition functions, the
// verification suites and pattern/monoid utilities, with JSON export.
// Suite checks run on a bounded worker pool (ICEBOX_THREADS overrides the
// size); results are emitted in construction order regardless of scheduling.

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icebox/coxeter_flags.hpp"
#include "icebox/duality.hpp"
#include "icebox/gt_patterns.hpp"
#include "icebox/lattice.hpp"
#include "icebox/laurent.hpp"
#include "icebox/report.hpp"
#include "icebox/symbols.hpp"
#include "icebox/tableaux.hpp"
#include "icebox/weights.hpp"
#include "icebox/yang_baxter.hpp"

using namespace icebox;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260825;

[[noreturn]] void usage_error(const std::string& msg) { throw CLI::ValidationError(msg); }

std::vector<int> parse_int_list(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) usage_error("expected a comma-separated integer list, got '" + s + "'");
  return out;
}

std::vector<RowType> parse_theta(const std::string& s, int r) {
  std::vector<RowType> out;
  for (char c : s) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'R':
      case 'G': out.push_back(RowType::R); break;
      case 'L':
      case 'D': out.push_back(RowType::L); break;
      default: usage_error(std::string("unknown row letter '") + c + "' in --theta");
    }
  }
  if (static_cast<int>(out.size()) != r)
    usage_error("--theta needs exactly " + std::to_string(r) + " letters");
  return out;
}

RegimeTag tag_from_name(const std::string& name) {
  if (name == "generic") return RegimeTag::Generic;
  if (name == "metaplectic") return RegimeTag::Metaplectic;
  if (name == "iwahori") return RegimeTag::Iwahori;
  if (name == "crystal") return RegimeTag::Crystal;
  usage_error("unknown regime '" + name + "'");
}

int pool_size(int jobs) {
  int n = 0;
  if (const char* env = std::getenv("ICEBOX_THREADS")) {
    try {
      n = std::stoi(env);
    } catch (const std::exception&) {
      usage_error("ICEBOX_THREADS must be a positive integer");
    }
    if (n <= 0) usage_error("ICEBOX_THREADS must be a positive integer");
  } else {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
  }
  return std::min(n, std::max(jobs, 1));
}

// Runs the jobs on a bounded pool and returns their results in input order.
std::vector<json> run_jobs(const std::vector<std::function<json()>>& jobs) {
  const int n = static_cast<int>(jobs.size());
  std::vector<json> results(n);
  std::vector<std::exception_ptr> errors(n);
  const int threads = pool_size(n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) results[i] = jobs[i]();
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          results[i] = jobs[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (std::thread& th : pool) th.join();
  for (int i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return results;
}

// Prints one PASS/FAIL line per check (or the JSON array) and returns the
// process exit status.
int emit_checks(const std::vector<json>& checks, bool as_json) {
  bool all = true;
  for (const json& c : checks) all = all && c.at("pass").get<bool>();
  if (as_json) {
    std::cout << json(checks).dump(2) << "\n";
  } else {
    int passed = 0;
    for (const json& c : checks) {
      const bool ok = c.at("pass").get<bool>();
      passed += ok;
      std::cout << (ok ? "PASS " : "FAIL ") << c.at("id").get<std::string>() << "\n";
    }
    std::cout << "passed " << passed << "/" << checks.size() << "\n";
  }
  return all ? 0 : 1;
}

// Shared boundary-data flags for enumerate, partition and flags.
struct SystemOpts {
  int r = 0;
  int m = 0;
  int blocks = 0;
  std::string mu_s, lambda_s, sigma_s, theta_s, top_s;
  std::string regime_s = "generic";
};

void add_system_flags(CLI::App* cmd, SystemOpts& o) {
  cmd->add_option("--r", o.r, "number of rows")->required();
  cmd->add_option("--m", o.m, "palette size")->required();
  cmd->add_option("--mu", o.mu_s, "entry positions, strictly decreasing (e.g. 4,2,0)");
  cmd->add_option("--lambda", o.lambda_s,
                  "weakly decreasing shape; entry positions become lambda+rho");
  cmd->add_option("--sigma", o.sigma_s, "exit color per row; omitted sums over exits");
  cmd->add_option("--theta", o.theta_s, "row families, one letter per row (R/L, or G/D)");
  cmd->add_option("--N,--blocks", o.blocks, "number of blocks (default: smallest fit)");
  cmd->add_option("--regime", o.regime_s, "generic|metaplectic|iwahori|crystal")
      ->check(CLI::IsMember({"generic", "metaplectic", "iwahori", "crystal"}));
  cmd->add_option("--top-colors", o.top_s, "fused grids: colors of the top paths");
}

std::vector<int> mu_from_opts(const SystemOpts& o) {
  if (!o.mu_s.empty() && !o.lambda_s.empty()) usage_error("--mu and --lambda are exclusive");
  if (o.mu_s.empty() && o.lambda_s.empty()) usage_error("one of --mu or --lambda is required");
  if (!o.mu_s.empty()) return parse_int_list(o.mu_s);
  std::vector<int> mu = parse_int_list(o.lambda_s);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += static_cast<int>(mu.size() - 1 - i);
  return mu;
}

SystemSpec build_spec(const SystemOpts& o) {
  if (o.r <= 0 || o.m <= 0) usage_error("--r and --m must be positive");
  SystemSpec spec;
  spec.rows = o.r;
  spec.palette = o.m;
  spec.mu = mu_from_opts(o);
  spec.row_types = o.theta_s.empty() ? std::vector<RowType>(o.r, RowType::R)
                                     : parse_theta(o.theta_s, o.r);
  const RegimeTag tag = tag_from_name(o.regime_s);
  spec.regime = make_regime(tag, o.m);
  spec.fused = tag == RegimeTag::Crystal;
  if (!o.sigma_s.empty()) spec.sigma = parse_int_list(o.sigma_s);
  if (spec.mu.empty()) usage_error("--mu must not be empty");
  const int mu0 = spec.mu.front();
  spec.blocks = o.blocks > 0 ? o.blocks : (spec.fused ? mu0 + 1 : mu0 / o.m + 1);
  if (spec.fused) {
    if (!o.top_s.empty()) {
      spec.top_colors = parse_int_list(o.top_s);
    } else {
      if (o.m < o.r) usage_error("default top colors need m >= r; pass --top-colors");
      for (int c = o.r; c >= 1; --c) spec.top_colors.push_back(c);
    }
  } else if (!o.top_s.empty()) {
    usage_error("--top-colors applies to fused (crystal) grids only");
  }
  try {
    spec.validate();
  } catch (const std::domain_error& e) {
    usage_error(e.what());
  }
  return spec;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream f(path);
  if (!f) usage_error("cannot open '" + path + "'");
  return read_stream(f);
}

GTPattern pattern_from_input(const std::string& text) {
  const std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) usage_error("empty pattern input");
  if (text[pos] == '{' || text[pos] == '[') return GTPattern::from_json(json::parse(text));
  return GTPattern::from_text(text);
}

// ---------------------------------------------------------------------------
// verify ybe

struct YbeOpts {
  std::string regime_s = "generic";
  int m = 3;
  std::string profile = "ci";
  int twists = 0;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false;
};

int cmd_verify_ybe(const YbeOpts& o) {
  const RegimeTag tag = tag_from_name(o.regime_s);
  const int cap = o.profile == "full" ? 4 : 3;
  if (o.m < 1 || o.m > cap)
    usage_error("--m must lie in 1.." + std::to_string(cap) + " under profile " + o.profile);
  if (o.twists < 0) usage_error("--twists must be nonnegative");
  if (o.twists > 0 && tag != RegimeTag::Generic)
    usage_error("--twists applies to the generic regime only");

  std::vector<TwistData> twists;
  std::mt19937_64 rng(o.seed);
  for (int t = 0; t < o.twists; ++t) twists.push_back(random_twist(o.m, rng));

  const int m = o.m;
  std::vector<std::function<json()>> jobs;
  // Twist 0 is the plain regime; the suite composition mirrors run_ybe_suite.
  for (int t = 0; t <= o.twists; ++t) {
    const std::string suffix = t == 0 ? "" : "-twist" + std::to_string(t);
    auto regime_for = [tag, m, t, twists] {
      WeightRegime reg = make_regime(tag, m);
      return t == 0 ? reg : apply_twist(reg, twists[t - 1]);
    };
    auto tag_id = [suffix](YbeReport rep) {
      json j = rep.to_json();
      j["id"] = j["id"].get<std::string>() + suffix;
      return j;
    };
    const int kmax = tag == RegimeTag::Crystal ? 1 : m;
    const RowType types[2] = {RowType::R, RowType::L};
    for (int k = 1; k <= kmax; ++k) {
      for (RowType X : types)
        for (RowType Y : types)
          jobs.push_back([=] {
            Symbols sym = make_symbols(3, m);
            return tag_id(check_rtt(sym, X, Y, k, regime_for()));
          });
      for (RowType X : types)
        for (RowType Y : types)
          for (RowType Z : types)
            jobs.push_back([=] {
              Symbols sym = make_symbols(3, m);
              return tag_id(check_rrr(sym, X, Y, Z, k, regime_for()));
            });
    }
    if (tag != RegimeTag::Crystal)
      jobs.push_back([=] {
        Symbols sym = make_symbols(3, m);
        return tag_id(check_rl_inverse(sym, regime_for()));
      });
  }
  return emit_checks(run_jobs(jobs), o.as_json);
}

// ---------------------------------------------------------------------------
// verify duality

struct DualityOpts {
  int r = 0;
  int m = 0;
  int blocks = 0;
  std::string mu_s, sigma_s;
  std::string regime_s = "generic";
  std::string profile = "ci";
  bool as_json = false;
};

int cmd_verify_duality(const DualityOpts& o) {
  const int cap = o.profile == "full" ? 4 : 3;
  if (o.r < 1 || o.r > cap || o.m < 1 || o.m > cap)
    usage_error("--r and --m must lie in 1.." + std::to_string(cap) + " under profile " +
                o.profile);
  const RegimeTag tag = tag_from_name(o.regime_s);
  if (tag == RegimeTag::Crystal) usage_error("the reversal identity runs on expanded grids");
  if (o.mu_s.empty()) usage_error("--mu is required");
  const std::vector<int> mu = parse_int_list(o.mu_s);
  if (static_cast<int>(mu.size()) != o.r) usage_error("--mu needs exactly r entries");
  const int blocks = o.blocks > 0 ? o.blocks : mu.front() / o.m + 1;
  if (blocks * o.m <= mu.front()) usage_error("width N*m must exceed the largest entry position");

  std::vector<std::vector<int>> sigmas;
  if (!o.sigma_s.empty()) {
    std::vector<int> sigma = parse_int_list(o.sigma_s);
    if (static_cast<int>(sigma.size()) != o.r) usage_error("--sigma needs exactly r entries");
    for (int c : sigma)
      if (c < 1 || c > o.m) usage_error("--sigma colors must lie in 1..m");
    sigmas.push_back(std::move(sigma));
  } else {
    std::vector<int> sigma(o.r, 1);
    for (;;) {
      sigmas.push_back(sigma);
      int i = o.r - 1;
      while (i >= 0 && sigma[i] == o.m) sigma[i--] = 1;
      if (i < 0) break;
      ++sigma[i];
    }
  }

  const int r = o.r, m = o.m;
  std::vector<std::function<json()>> jobs;
  for (const std::vector<int>& sigma : sigmas) {
    jobs.push_back([=] {
      Symbols sym = make_symbols(r, m);
      return check_left_right_duality(sym, mu, sigma, blocks, m, r, make_regime(tag, m))
          .to_json();
    });
    jobs.push_back([=] {
      Symbols sym = make_symbols(r, m);
      return replay_left_right_duality(sym, mu, sigma, blocks, m, r, make_regime(tag, m))
          .to_json();
    });
  }
  return emit_checks(run_jobs(jobs), o.as_json);
}

// ---------------------------------------------------------------------------
// verify schutzenberger

struct SchuetzOpts {
  std::string lambda_s;
  std::string profile = "ci";
  bool as_json = false;
};

int cmd_verify_schutzenberger(const SchuetzOpts& o) {
  if (o.lambda_s.empty()) usage_error("--lambda is required");
  const std::vector<int> lambda = parse_int_list(o.lambda_s);
  const int r = static_cast<int>(lambda.size());
  const int cap = o.profile == "full" ? 4 : 3;
  if (r < 1 || r > cap)
    usage_error("--lambda needs 1.." + std::to_string(cap) + " parts under profile " + o.profile);
  for (int i = 0; i + 1 < r; ++i)
    if (lambda[i] < lambda[i + 1]) usage_error("--lambda must be weakly decreasing");
  if (lambda.back() < 0) usage_error("--lambda parts must be nonnegative");

  const std::vector<GTPattern> patterns = enumerate_weak(lambda);
  bool top_ok = true, invol_ok = true, oracle_ok = true;
  std::string witness;
  for (const GTPattern& p : patterns) {
    const GTPattern q = schutzenberger(p);
    if (q.rows.front() != p.rows.front()) top_ok = false;
    if (schutzenberger(q) != p) invol_ok = false;
    if (ssyt_from_gt(q) != evacuation(ssyt_from_gt(p), r)) {
      oracle_ok = false;
      if (witness.empty()) witness = p.to_text();
    }
  }

  RunReport rep;
  rep.suite = "schutzenberger";
  rep.params = {{"lambda", lambda}, {"patterns", patterns.size()}};
  rep.add("top-row-preserved", top_ok);
  rep.add("involution", invol_ok);
  rep.add("matches-evacuation", oracle_ok,
          witness.empty() ? json(nullptr) : json{{"first_mismatch", witness}});
  if (o.as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.pass ? 0 : 1;
  }
  return emit_checks(std::vector<json>(rep.checks.begin(), rep.checks.end()), false);
}

// ---------------------------------------------------------------------------
// enumerate / partition

int cmd_enumerate(const SystemOpts& o, bool as_json) {
  const SystemSpec spec = build_spec(o);
  Symbols sym = make_symbols(spec.rows, spec.palette);
  const std::vector<State> states = enumerate_states(sym, spec);
  if (as_json) {
    json out = json::array();
    for (const State& s : states) out.push_back(state_to_json(sym, spec, s));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "states: " << states.size() << "\n";
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::cout << k << ": exits=(";
    for (int i = 0; i < spec.rows; ++i)
      std::cout << (i ? "," : "") << exit_color(spec, states[k], i);
    std::cout << ") weight=" << state_weight(sym, spec, states[k]).to_string() << "\n";
  }
  return 0;
}

// One substitution step: "name=value" pins a symbol to a rational and
// "swap=a,b" exchanges two symbols, as in the row-swap identities.
LaurentPoly apply_set(const Symbols& sym, const LaurentPoly& p, const std::string& setting) {
  const std::size_t eq = setting.find('=');
  if (eq == std::string::npos) usage_error("--set expects name=value or swap=a,b");
  const std::string key = setting.substr(0, eq);
  const std::string val = setting.substr(eq + 1);
  std::map<int, LaurentPoly> bind;
  try {
    if (key == "swap") {
      const std::size_t comma = val.find(',');
      if (comma == std::string::npos) usage_error("--set swap expects two symbol names");
      const int a = sym.reg.require(val.substr(0, comma));
      const int b = sym.reg.require(val.substr(comma + 1));
      bind[a] = LaurentPoly::var(&sym.reg, b);
      bind[b] = LaurentPoly::var(&sym.reg, a);
    } else {
      bind[sym.reg.require(key)] = LaurentPoly::constant(&sym.reg, rat_from_string(val));
    }
    return p.substitute(bind);
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  } catch (const std::domain_error& e) {
    usage_error(e.what());
  }
}

int cmd_partition(const SystemOpts& o, const std::vector<std::string>& sets, bool as_json) {
  const SystemSpec spec = build_spec(o);
  Symbols sym = make_symbols(spec.rows, spec.palette);
  LaurentPoly z = partition_function(sym, spec);
  for (const std::string& s : sets) z = apply_set(sym, z, s);
  if (as_json)
    std::cout << json{{"partition", z.to_json()}}.dump(2) << "\n";
  else
    std::cout << z.to_string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// gt / monoid / flags

int cmd_gt(const std::string& action, const std::string& path, int row, bool as_json) {
  GTPattern p;
  try {
    p = pattern_from_input(read_input(path));
    if (action == "to-ssyt") {
      const SSYT t = ssyt_from_gt(p);
      std::cout << (as_json ? t.to_json().dump(2) : t.to_text()) << "\n";
      return 0;
    }
    const GTPattern q = action == "bk" ? bk_involution(p, row) : schutzenberger(p);
    std::cout << (as_json ? q.to_json().dump(2) : q.to_text()) << "\n";
  } catch (const std::domain_error& e) {
    usage_error(e.what());
  } catch (const std::out_of_range& e) {
    usage_error(e.what());
  } catch (const json::exception& e) {
    usage_error(e.what());
  }
  return 0;
}

// Reduced word for the folded element: straighten the one-line form by
// adjacent swaps, recording positions; the fold of the recorded word (applied
// rightmost first) reproduces the element.
std::vector<int> reduced_word_of(const MonoidElement& e) {
  std::vector<int> v = e.perm;
  std::vector<int> word;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < v.size() && v[k] < v[k + 1]) ++k;
    if (k + 1 >= v.size()) break;
    std::swap(v[k], v[k + 1]);
    word.push_back(static_cast<int>(k) + 1);
  }
  return word;
}

int cmd_monoid_reduce(const std::vector<std::string>& letters, int rank, bool as_json) {
  std::string joined;
  for (const std::string& s : letters) joined += s + " ";
  const std::vector<int> word = parse_int_list(joined);
  int needed = 2;
  for (int k : word) needed = std::max(needed, k + 1);
  const int r = rank > 0 ? rank : needed;
  for (int k : word)
    if (k < 1 || k > r - 1) usage_error("letters must lie in 1..rank-1");

  const MonoidElement e = demazure_product(r, word);
  const std::vector<int> reduced = reduced_word_of(e);
  if (demazure_product(r, reduced) != e)
    throw std::logic_error("reduced word does not refold to the element");

  if (as_json) {
    std::cout << json{{"word", word},
                      {"rank", r},
                      {"one_line", e.perm},
                      {"length", e.length()},
                      {"reduced_word", reduced}}
                     .dump(2)
              << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < e.perm.size(); ++i) std::cout << (i ? " " : "") << e.perm[i];
  std::cout << "\nlength: " << e.length() << "\n";
  return 0;
}

// The flag sweep reads exits off the state, so the state must actually obey
// the boundary conditions of the given system.
void check_state_boundary(const SystemSpec& spec, const State& s) {
  if (s.rows != spec.rows || s.cols != spec.width())
    usage_error("state dimensions do not match the system");
  for (int x = 0; x < s.cols; ++x) {
    if (s.vertical[0][x] != spec.top_color_at(x))
      usage_error("state top boundary does not match --mu");
    if (s.vertical[s.rows][x] != 0) usage_error("state bottom boundary must be unoccupied");
  }
  for (int i = 0; i < s.rows; ++i) {
    const bool right = spec.row_types[i] == RowType::R;
    const int entry = s.horizontal[i][right ? 0 : s.cols];
    const int exit = s.horizontal[i][right ? s.cols : 0];
    if (entry != 0 || exit == 0)
      usage_error("row " + std::to_string(i + 1) + " does not exit on its --theta side");
  }
}

int cmd_flags(const SystemOpts& o, const std::string& state_path, bool as_json) {
  const SystemSpec spec = build_spec(o);
  State s;
  try {
    s = state_from_json(json::parse(read_input(state_path)));
  } catch (const json::exception& e) {
    usage_error(e.what());
  } catch (const std::domain_error& e) {
    usage_error(e.what());
  }
  check_state_boundary(spec, s);
  FlagSweep sweep;
  try {
    sweep = state_flags(spec, s);
  } catch (const std::domain_error& e) {
    usage_error(e.what());
  }
  std::vector<int> sigma;
  for (int i = 0; i < spec.rows; ++i) sigma.push_back(exit_color(spec, s, i));

  if (as_json) {
    std::cout << json{{"flags", sweep.flags}, {"sigma", sigma}}.dump(2) << "\n";
    return 0;
  }
  for (int i = 0; i < spec.rows; ++i) {
    std::cout << "row " << i + 1 << " ("
              << (spec.row_types[i] == RowType::R ? 'R' : 'L') << "):";
    for (const Flag& f : sweep.flags[i]) {
      std::cout << " (";
      for (std::size_t k = 0; k < f.size(); ++k) std::cout << (k ? " " : "") << f[k];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  std::cout << "sigma:";
  for (int c : sigma) std::cout << " " << c;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvable-lattice toolkit: enumeration, partition functions and "
               "verification suites"};
  app.require_subcommand(1);
  int status = 0;

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  YbeOpts yo;
  CLI::App* ybe = verify->add_subcommand("ybe", "vertex-exchange identities");
  ybe->add_option("--regime", yo.regime_s, "generic|metaplectic|iwahori|crystal")
      ->check(CLI::IsMember({"generic", "metaplectic", "iwahori", "crystal"}));
  ybe->add_option("--m", yo.m, "palette size (default 3)");
  ybe->add_option("--profile", yo.profile, "ci|full")->check(CLI::IsMember({"ci", "full"}));
  ybe->add_option("--twists", yo.twists, "rerun the suite under seeded random twists");
  ybe->add_option("--seed", yo.seed, "twist sampling seed");
  ybe->add_flag("--json", yo.as_json, "emit the report array as JSON");
  ybe->callback([&] { status = cmd_verify_ybe(yo); });

  DualityOpts duo;
  CLI::App* dual = verify->add_subcommand("duality", "full-reversal identity, direct and replay");
  dual->add_option("--r", duo.r, "number of rows")->required();
  dual->add_option("--m", duo.m, "palette size")->required();
  dual->add_option("--mu", duo.mu_s, "entry positions, strictly decreasing");
  dual->add_option("--sigma", duo.sigma_s, "single exit-color list (default: all)");
  dual->add_option("--N,--blocks", duo.blocks, "number of blocks (default: smallest fit)");
  dual->add_option("--regime", duo.regime_s, "generic|metaplectic|iwahori")
      ->check(CLI::IsMember({"generic", "metaplectic", "iwahori"}));
  dual->add_option("--profile", duo.profile, "ci|full")->check(CLI::IsMember({"ci", "full"}));
  dual->add_flag("--json", duo.as_json, "emit the report array as JSON");
  dual->callback([&] { status = cmd_verify_duality(duo); });

  SchuetzOpts so;
  CLI::App* sch = verify->add_subcommand("schutzenberger",
                                         "long reflection composition against evacuation");
  sch->add_option("--lambda", so.lambda_s, "weakly decreasing top row")->required();
  sch->add_option("--profile", so.profile, "ci|full")->check(CLI::IsMember({"ci", "full"}));
  sch->add_flag("--json", so.as_json, "emit the report as JSON");
  sch->callback([&] { status = cmd_verify_schutzenberger(so); });

  // enumerate
  SystemOpts eo;
  bool ejson = false;
  CLI::App* enu = app.add_subcommand("enumerate", "list admissible states with weights");
  add_system_flags(enu, eo);
  enu->add_flag("--json", ejson, "emit the state list as JSON");
  enu->callback([&] { status = cmd_enumerate(eo, ejson); });

  // partition
  SystemOpts po;
  bool pjson = false;
  std::vector<std::string> sets;
  CLI::App* part = app.add_subcommand("partition", "exact partition function");
  add_system_flags(part, po);
  part->add_option("--set", sets, "substitution name=value or swap=a,b (repeatable)");
  part->add_flag("--json", pjson, "emit the polynomial as JSON");
  part->callback([&] { status = cmd_partition(po, sets, pjson); });

  // gt
  CLI::App* gt = app.add_subcommand("gt", "triangular-pattern utilities");
  gt->require_subcommand(1);
  std::string gt_file = "-";
  int gt_row = 1;
  bool gt_json = false;
  CLI::App* bk = gt->add_subcommand("bk", "row reflection");
  bk->add_option("--file", gt_file, "pattern file, '-' for stdin");
  bk->add_option("--row", gt_row, "reflected row index")->required();
  bk->add_flag("--json", gt_json, "emit the pattern as JSON");
  bk->callback([&] { status = cmd_gt("bk", gt_file, gt_row, gt_json); });
  CLI::App* sc = gt->add_subcommand("schutzenberger", "long reflection composition");
  sc->add_option("--file", gt_file, "pattern file, '-' for stdin");
  sc->add_flag("--json", gt_json, "emit the pattern as JSON");
  sc->callback([&] { status = cmd_gt("schutzenberger", gt_file, gt_row, gt_json); });
  CLI::App* ts = gt->add_subcommand("to-ssyt", "pattern to tableau");
  ts->add_option("--file", gt_file, "pattern file, '-' for stdin");
  ts->add_flag("--json", gt_json, "emit the tableau as JSON");
  ts->callback([&] { status = cmd_gt("to-ssyt", gt_file, gt_row, gt_json); });

  // monoid
  CLI::App* monoid = app.add_subcommand("monoid", "sorting-monoid utilities");
  monoid->require_subcommand(1);
  std::vector<std::string> letters;
  int rank = 0;
  bool mjson = false;
  CLI::App* red = monoid->add_subcommand("reduce", "fold a word to canonical form");
  red->add_option("word", letters, "generator letters (space or comma separated)")
      ->required()
      ->expected(-1);
  red->add_option("--rank", rank, "one-line length (default: largest letter + 1)");
  red->add_flag("--json", mjson, "emit the element as JSON");
  red->callback([&] { status = cmd_monoid_reduce(letters, rank, mjson); });

  // flags
  SystemOpts fo;
  std::string state_path;
  bool fjson = false;
  CLI::App* flags = app.add_subcommand("flags", "exit-color flag sweep of a state");
  add_system_flags(flags, fo);
  flags->add_option("--state", state_path, "state JSON file, '-' for stdin")->required();
  flags->add_flag("--json", fjson, "emit the sweep as JSON");
  flags->callback([&] { status = cmd_flags(fo, state_path, fjson); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
