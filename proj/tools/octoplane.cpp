// octoplane: command-line front end for the octonion / Cayley-plane kernel.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "octoplane/group.hpp"
#include "octoplane/iwasawa.hpp"
#include "octoplane/triality.hpp"
#include "octoplane/verify.hpp"

namespace {

using namespace octo;

constexpr const char* kGrammar = R"grammar(Literal grammar
  octonion   sum of terms  c, c eN, eN, -eN  (N = 0..7, e0 = 1), c a rational
             p/q, an integer or a decimal such as 0.25 or 1e-3.  A '*' between
             coefficient and unit is optional.
               "3/5 + 1/5 e1"   "-e2 + 0.5*e7"   "0"
  point      (x1, x2)   finite point       "(1/2, 0)"  "(1/3, 2/3 e2)"
             (u)        point at infinity  "(e1)"
             (inf)      the point (∞)
  line       [m, c]     y = m x + c        "[e1, 1/2]"
             [c]        x = c              "[3/5]"
             [inf]      the line at infinity
  word       unit octonions separated by ';', outermost factor first
               "e1; 3/5 + 4/5 e2"
  element    factors separated by '*', applied right to left
             a(λ)       A, λ = e^t > 0           "a(2)"
             u(y; z)    N, y imaginary           "u(e1; 1/2 e3)"
             z(y)       centre of N, y imaginary "z(e1)"
             m(word)    M, word normalized so R''(1) = 1
               "a(2) * u(0; e2)"

Exit status: 0 success, 1 domain error, 2 usage or parse error.
)grammar";

template <ScalarBackend S>
int cmd_table() {
  const auto& t = multiplication_table();
  auto cell = [](int i, int sign) {
    std::string s = (sign < 0 ? "-" : "") + (i == 0 ? std::string("1") : "e" + std::to_string(i));
    return std::string(4 - s.size(), ' ') + s;
  };
  std::cout << "   *";
  for (int j = 0; j < 8; ++j) std::cout << cell(j, 1);
  std::cout << "\n";
  for (int i = 0; i < 8; ++i) {
    std::cout << cell(i, 1);
    for (int j = 0; j < 8; ++j) std::cout << cell(t[i][j].index, t[i][j].sign);
    std::cout << "\n";
  }
  return 0;
}

template <ScalarBackend S>
int cmd_act(const std::string& element, const std::string& point) {
  const GroupElement<S> g = parse_group_element<S>(element);
  const HPoint<S> p(parse_finite_point<S>(point));
  std::cout << format_point(act(g, p).point()) << "\n";
  return 0;
}

template <ScalarBackend S>
void print_coords(const HPoint<S>& p) {
  const ANCoordinates<S> c = an_coords(p);
  std::cout << "e^t0 = " << ScalarTraits<S>::str(c.lambda0) << "\n"
            << "t0   = " << ScalarTraits<double>::str(std::log(ScalarTraits<S>::to_double(c.lambda0))) << "\n"
            << "y0   = " << format_octonion(c.y0) << "\n"
            << "z0   = " << format_octonion(c.z0) << "\n";
}

template <ScalarBackend S>
int cmd_coords(const std::string& point) {
  const HPoint<S> p(parse_finite_point<S>(point));
  if constexpr (ScalarTraits<S>::exact) {
    try {
      print_coords(p);
    } catch (const InexactError& e) {
      std::cerr << "note: " << e.what() << "; falling back to the float backend\n";
      print_coords(HPoint<double>(cast<double>(p.x1()), cast<double>(p.x2())));
    }
  } else {
    print_coords(p);
  }
  return 0;
}

template <ScalarBackend S>
int cmd_triality(const std::string& word_text, const std::string& x_text, const std::string& y_text,
                 bool normalize) {
  SpinWord<S> word = parse_word<S>(word_text);
  if (normalize) word = normalize_unital(word);
  const TrialityTriple<S> triple{word};
  const Octonion<S> x = parse_octonion<S>(x_text);
  const Octonion<S> y = parse_octonion<S>(y_text);
  std::cout << "word      = " << format_word(word) << "\n"
            << "R(x)      = " << format_octonion(triple.R(x)) << "\n"
            << "R'(x)     = " << format_octonion(triple.Rp(x)) << "\n"
            << "R''(x)    = " << format_octonion(triple.Rpp(x)) << "\n"
            << "R(y)      = " << format_octonion(triple.R(y)) << "\n"
            << "R'(y)     = " << format_octonion(triple.Rp(y)) << "\n"
            << "R''(y)    = " << format_octonion(triple.Rpp(y)) << "\n"
            << "R(xy)     = " << format_octonion(triple.R(x * y)) << "\n"
            << "R'x R''y  = " << format_octonion(Octonion<S>(triple.Rp(x) * triple.Rpp(y))) << "\n"
            << "relation  " << (triple.relation_holds(x, y) ? "holds" : "FAILS") << "\n";
  return triple.relation_holds(x, y) ? 0 : 1;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, const std::string& json_path) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all_suites(options);
  } else {
    reports.push_back(run_suite(suite, options));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  const bool json_stdout = json_path == "-";
  if (!json_stdout) {
    for (const auto& r : reports) std::cout << r.to_text();
    std::cout << (ok ? "all suites passed" : "FAILED") << "\n";
  }
  if (!json_path.empty()) {
    const std::string json = reports_to_json(reports);
    if (json_stdout) {
      std::cout << json << "\n";
    } else {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot write '" + json_path + "'");
      out << json << "\n";
    }
  }
  return ok ? 0 : 1;
}

template <class F>
int with_backend(Backend b, F&& f) {
  if (b == Backend::Float) return f(double{});
  return f(Rational{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact octonion arithmetic and the Iwasawa actions on the hyperbolic Cayley plane"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string backend_text = "rational";
  auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", backend_text, "rational (exact, default) or float (17 significant digits)")
        ->check(CLI::IsMember({"rational", "float"}));
  };

  auto* table = app.add_subcommand("table", "print the 8x8 multiplication table of the units");
  add_backend(table);

  std::string element, point;
  auto* act = app.add_subcommand("act", "apply a group element to a point of the open ball");
  act->add_option("--element", element, "group element, e.g. \"a(2) * u(0; e2)\"")->required();
  act->add_option("--point", point, "finite point (x1, x2) with N(x1) + N(x2) < 1")->required();
  add_backend(act);

  auto* coords = app.add_subcommand("coords", "AN-coordinates (e^t0, y0, z0) of a ball point");
  coords->add_option("--point", point, "finite point (x1, x2)")->required();
  add_backend(coords);

  std::string word, x_text = "1", y_text = "1";
  bool normalize = false;
  auto* tri = app.add_subcommand("triality", "evaluate R, R', R'' of a word and check R(xy) = R'(x) R''(y)");
  tri->add_option("--word", word, "unit octonions separated by ';'")->required();
  tri->add_option("--x", x_text, "octonion x (default 1)");
  tri->add_option("--y", y_text, "octonion y (default 1)");
  tri->add_flag("--normalize", normalize, "prepend a factor so that R''(1) = 1");
  add_backend(tri);

  std::string suite = "all", json_path;
  SuiteOptions options;
  auto* ver = app.add_subcommand("verify", "run randomized invariant suites");
  ver->add_option("--suite", suite, "suite name or 'all'");
  ver->add_option("--seed", options.seed, "base seed");
  ver->add_option("--trials", options.trials, "trials per suite");
  ver->add_option("--workers", options.workers, "worker threads (0: one per core)");
  ver->add_option("--tolerance", options.tolerance, "float backend absolute tolerance override");
  ver->add_option("--fixture", options.fixture_path, "curated point file replacing the built-in one");
  ver->add_option("--json", json_path, "also write a JSON report to FILE ('-' for stdout only)");
  add_backend(ver);
  std::string suite_list = "suites:";
  for (const auto& s : suites()) suite_list += "\n  " + std::string(s.name) + "  " + std::string(s.description);
  ver->footer(suite_list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Backend backend = parse_backend(backend_text);
    if (*table) return with_backend(backend, [&](auto s) { return cmd_table<decltype(s)>(); });
    if (*act) return with_backend(backend, [&](auto s) { return cmd_act<decltype(s)>(element, point); });
    if (*coords) return with_backend(backend, [&](auto s) { return cmd_coords<decltype(s)>(point); });
    if (*tri) {
      return with_backend(backend, [&](auto s) { return cmd_triality<decltype(s)>(word, x_text, y_text, normalize); });
    }
    options.backend = backend;
    return cmd_verify(suite, options, json_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
