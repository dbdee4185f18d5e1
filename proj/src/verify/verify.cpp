#include "octoplane/verify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trial.hpp"

namespace octo {

// Generated from data/curated_points_v1.txt at build time.
extern const char* const kCuratedFixtureText;

namespace {

using verify::Trial;

struct SuiteDef {
  SuiteInfo info;
  std::function<void(Trial<Rational>&)> rational;
  std::function<void(Trial<double>&)> floating;
  double float_tolerance;
};

#define OCTO_BOTH(fn) [](Trial<Rational>& t) { verify::fn(t); }, [](Trial<double>& t) { verify::fn(t); }

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {{"algebra", "N(xy)=N(x)N(y), alternative laws, weak associativity, conj/Im/inverse laws", true, true},
       OCTO_BOTH(suite_algebra), 1e-12},
      {{"two-generator", "all bracketings of words in {a, b, conj a, conj b, 1} agree", true, true},
       OCTO_BOTH(suite_two_generator), 1e-12},
      {{"cd-embed", "Cayley-Dickson embedding is multiplicative at every level", true, true},
       OCTO_BOTH(suite_cd_embed), 1e-12},
      {{"triality", "R(xy) = R'(x)R''(y) for words of length <= 6; isometries", true, true},
       OCTO_BOTH(suite_triality), 1e-10},
      {{"unital-words", "normalized words: R = R', inverse, Jordan and polynomial laws for R''", true, true},
       OCTO_BOTH(suite_unital_words), 1e-10},
      {{"geometry-incidence", "join/meet incidence and uniqueness over all point and line kinds", true, true},
       OCTO_BOTH(suite_geometry_incidence), 1e-9},
      {{"polarity", "Pi is a bijection and a in Pi(b) <=> b in Pi(a)", true, true},
       OCTO_BOTH(suite_polarity), 1e-9},
      {{"self-conjugate", "p in Pi(p) exactly on the unit sphere", true, true},
       OCTO_BOTH(suite_self_conjugate), 1e-10},
      {{"k-polarity", "k(x,y) = (R''x, Ry) commutes with Pi and preserves the norm", true, true},
       OCTO_BOTH(suite_k_polarity), 1e-9},
      {{"n-group-action", "n1(n2 p) = (n1 n2) p with the N composition law", true, true},
       OCTO_BOTH(suite_n_group_action), 1e-10},
      {{"n-group-laws", "N composition associative, inverses, A-conjugation a homomorphism", true, true},
       OCTO_BOTH(suite_n_group_laws), 1e-10},
      {{"mixed-an", "a(n p) = (a n a^{-1})(a p); A composition; orbit of the origin", true, true},
       OCTO_BOTH(suite_mixed_an), 1e-10},
      {{"ball-invariance", "A, N, Z(N) and M actions keep the open ball", true, true},
       OCTO_BOTH(suite_ball_invariance), 1e-10},
      {{"denominators", "denominators of the A and N actions never vanish on the ball", true, true},
       OCTO_BOTH(suite_denominators), 1e-10},
      {{"center", "center formulas agree with the N action; u(y,0) central", true, true},
       OCTO_BOTH(suite_center), 1e-10},
      {{"reconstruction", "a_{t0} u(y0,z0)(0,0) = p from AN-coordinates", true, true},
       OCTO_BOTH(suite_reconstruction), 1e-10},
      {{"oracle", "explicit N action = decomposition-route oracle", true, true},
       OCTO_BOTH(suite_oracle), 1e-10},
      {{"quaternion-reduction", "quaternionic formulas = n_act on embedded inputs", true, true},
       OCTO_BOTH(suite_quaternion_reduction), 1e-10},
      {{"m-action", "M fixes (1,0), commutes with A, preserves the norm", true, true},
       OCTO_BOTH(suite_m_action), 1e-10},
      {{"dynamics", "a_t p -> (1,0) within 1e-6 at t = 20 (float only)", false, true},
       nullptr, [](Trial<double>& t) { verify::suite_dynamics(t); }, 1e-12},
      {{"collineation", "A and N map collinear ball triples to collinear triples", true, true},
       OCTO_BOTH(suite_collineation), 1e-9},
      {{"polarity-equivariance", "q in Pi(p) <=> g q in Pi(g p) for g in A, N, AN", true, true},
       OCTO_BOTH(suite_polarity_equivariance), 1e-8},
  };
  return defs;
}

#undef OCTO_BOTH

template <ScalarBackend S>
std::vector<Failure> run_trials(const std::string& name, const std::function<void(Trial<S>&)>& body,
                                const SuiteOptions& options, double eps,
                                const std::vector<HPoint<Rational>>& fixture) {
  const std::uint64_t n = options.trials;
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));
  std::vector<std::vector<Failure>> per_worker(workers);

  auto work = [&](unsigned w) {
    for (std::uint64_t i = w; i < n; i += workers) {
      Trial<S> trial(i, Sampler<S>(options.seed, name, i), eps, &fixture);
      try {
        body(trial);
      } catch (const std::exception& e) {
        trial.fail("exception", std::string("  ") + e.what() + "\n");
      }
      auto& f = trial.failures();
      per_worker[w].insert(per_worker[w].end(), f.begin(), f.end());
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::vector<Failure> all;
  for (auto& f : per_worker) all.insert(all.end(), f.begin(), f.end());
  std::stable_sort(all.begin(), all.end(), [](const Failure& a, const Failure& b) { return a.trial < b.trial; });
  return all;
}

nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"trial", f.trial}, {"check", f.check}, {"transcript", f.transcript}});
  }
  nlohmann::json j = {{"suite", r.suite},
                      {"backend", std::string(to_string(r.backend))},
                      {"seed", r.seed},
                      {"trials", r.trials},
                      {"tolerance", r.tolerance},
                      {"skipped", r.skipped},
                      {"passed", r.passed()},
                      {"failure_count", r.failures.size()},
                      {"failures", failures}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string_view to_string(Backend b) { return b == Backend::Rational ? "rational" : "float"; }

Backend parse_backend(std::string_view text) {
  if (text == "rational") return Backend::Rational;
  if (text == "float") return Backend::Float;
  throw std::invalid_argument("unknown backend '" + std::string(text) + "' (expected rational or float)");
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& d : registry()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  const auto& defs = registry();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.name == name; });
  if (it == defs.end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");

  SuiteReport report;
  report.suite = std::string(name);
  report.trials = options.trials;
  report.backend = options.backend;
  report.seed = options.seed;

  std::vector<HPoint<Rational>> loaded;
  const std::vector<HPoint<Rational>>* fixture = &curated_fixture();
  if (options.fixture_path) {
    loaded = load_fixture(*options.fixture_path);
    fixture = &loaded;
  }

  if (options.backend == Backend::Rational) {
    if (!it->rational) {
      report.skipped = true;
      report.note = "suite requires the float backend";
      return report;
    }
    report.failures = run_trials<Rational>(report.suite, it->rational, options, 0.0, *fixture);
  } else {
    report.tolerance = options.tolerance.value_or(it->float_tolerance);
    report.failures = run_trials<double>(report.suite, it->floating, options, report.tolerance, *fixture);
  }
  return report;
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  for (const auto& s : suites()) out.push_back(run_suite(s.name, options));
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << (skipped ? "SKIP" : (passed() ? "PASS" : "FAIL")) << "  " << suite << "  backend=" << to_string(backend)
     << " seed=" << seed << " trials=" << trials;
  if (backend == Backend::Float) os << " tolerance=" << tolerance;
  os << " failures=" << failures.size();
  if (!note.empty()) os << "  (" << note << ")";
  os << "\n";
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < failures.size() && i < kShown; ++i) {
    os << "  trial " << failures[i].trial << ": " << failures[i].check << "\n" << failures[i].transcript;
  }
  if (failures.size() > kShown) os << "  ... " << failures.size() - kShown << " more failures\n";
  return os.str();
}

std::string SuiteReport::to_json() const { return report_json(*this).dump(2); }

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    ok = ok && r.passed();
  }
  return nlohmann::json{{"passed", ok}, {"suites", arr}}.dump(2);
}

std::vector<HPoint<Rational>> parse_fixture(std::string_view text) {
  std::vector<HPoint<Rational>> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      points.emplace_back(parse_finite_point<Rational>(line));
    } catch (const std::exception& e) {
      throw ParseError("fixture line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return points;
}

std::vector<HPoint<Rational>> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

const std::vector<HPoint<Rational>>& curated_fixture() {
  static const std::vector<HPoint<Rational>> points = parse_fixture(kCuratedFixtureText);
  return points;
}

}  // namespace octo
