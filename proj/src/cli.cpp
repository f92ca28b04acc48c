#include "tmcg/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tmcg/dcat.hpp"
#include "tmcg/suites.hpp"
#include "tmcg/syntax.hpp"

namespace tmcg {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<int> n;
  std::string fibers;
  std::string suite = "all";
  bool json = false;
  long max_iterations = 10000;
  std::vector<std::string> args;
};

int need_n(const Options& o) {
  if (!o.n) throw UsageError("--n is required");
  return *o.n;
}

std::string format_degree(const MultiDegree& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string curve_word(const TorusModel& m, const Curve& c) {
  const Alphabet abc = m.alphabet();
  if (!c.closed()) {
    return "arc p" + std::to_string(c.start_puncture) + " -> p" + std::to_string(c.end_puncture) + ": " +
           abc.format(arc_class_word(m, c));
  }
  const CyclicWord w = word_of_loop(m, c), v = w.inverse();
  return "loop: " + abc.format((v < w ? v : w).as_word());
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const TorusModel m(need_n(o));
  const Curve a = parse_curve(o.args.at(0), m), b = parse_curve(o.args.at(1), m);
  out << intersection_or_zero(m, a, b, {o.max_iterations}) << '\n';
  return 0;
}

int cmd_act(const Options& o, std::ostream& out) {
  const int n = need_n(o);
  const TorusModel m(n);
  const MappingClass w = parse_word(o.args.at(0), n);
  const Curve x = act(m, w, parse_curve(o.args.at(1), m));
  out << curve_word(m, x) << '\n';
  out << "profile:";
  const IntersectionOptions g{o.max_iterations};
  out << " A=" << intersection_or_zero(m, x, m.A(), g);
  for (int k = 1; k <= n; ++k) out << " B" << k << '=' << intersection_or_zero(m, x, m.B(k), g);
  for (int k = 1; k <= n; ++k) out << " G" << k << "[-1]=" << intersection_or_zero(m, x, m.base_arc(k), g);
  out << '\n';
  return 0;
}

int cmd_equal(const Options& o, std::ostream& out) {
  const int n = need_n(o);
  out << (equal(parse_word(o.args.at(0), n), parse_word(o.args.at(1), n)) ? "true" : "false") << '\n';
  return 0;
}

int cmd_hom(const Options& o, std::ostream& out) {
  const int n = need_n(o);
  out << hom_total(n, parse_tag(o.args.at(0), n), parse_tag(o.args.at(1), n)) << '\n';
  return 0;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  if (o.args.empty()) {
    for (const auto& v : form_kernel(need_n(o))) {
      out << "kernel: (";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
      out << ")\n";
    }
    return 0;
  }
  const std::string& text = o.args.front();
  MultiDegree d;
  if (text.find_first_of("xG") != std::string::npos) {
    d = multidegree(need_n(o), parse_divisor(text, need_n(o)));
  } else {
    d = parse_multidegree(text);
    if (o.n && static_cast<int>(d.size()) != *o.n)
      throw UsageError("multidegree has " + std::to_string(d.size()) + " entries, expected " + std::to_string(*o.n));
    if (d.size() < 2) throw UsageError("multidegree needs at least 2 entries");
  }
  out << "multidegree: " << format_degree(d) << '\n';
  out << "in lattice: " << (in_restriction_lattice(d) ? "true" : "false") << '\n';
  return 0;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const FiberConfig cfg = !o.fibers.empty() ? parse_fibers(o.fibers) : FiberConfig({need_n(o)});
  out << (is_in_kernel(parse_bword(o.args.at(0), cfg), cfg) ? "true" : "false") << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.n = o.n;
  if (!o.fibers.empty()) so.fibers = parse_fibers(o.fibers);
  so.geometry.max_iterations = o.max_iterations;
  if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
    throw UsageError("unknown suite '" + o.suite + "'");
  const Report r = run_suite(o.suite, so);
  out << (o.json ? r.to_json() : r.to_text());
  return r.any_fail() ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mapping classes of the punctured torus and their sheaf-side counterparts", "tmcg"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, std::size_t positionals, const std::string& names) {
    sub->add_option("--n", o.n, "number of punctures / fiber components")->check(CLI::Range(2, 64));
    sub->add_option("--max-iterations", o.max_iterations, "cap on bigon cancellations")->check(CLI::PositiveNumber);
    if (positionals > 0) sub->add_option("args", o.args, names)->expected(static_cast<int>(positionals));
    return sub;
  };
  common(app.add_subcommand("intersect", "geometric intersection number of two curves"), 2, "two curves");
  common(app.add_subcommand("act", "image of a curve under a mapping-class word"), 2, "word and curve");
  common(app.add_subcommand("equal", "equality of two mapping-class words"), 2, "two words");
  common(app.add_subcommand("hom", "tabulated Hom total of two objects"), 2, "two objects");
  auto* lattice = common(app.add_subcommand("lattice", "fiber-form kernel or lattice membership"), 0, "");
  lattice->add_option("args", o.args, "multidegree a,b,... or divisor like G1+2x3")->expected(0, 1);
  auto* kernel = common(app.add_subcommand("kernel", "is a B-word in the kernel"), 1, "B-word");
  kernel->add_option("--fibers", o.fibers, "component counts n1,n2,...");
  auto* verify = common(app.add_subcommand("verify", "run verification suites"), 0, "");
  verify->add_option("--suite", o.suite, "relations, dictionary, lattice, kernel, properties or all");
  verify->add_option("--fibers", o.fibers, "component counts n1,n2,...");
  verify->add_flag("--json", o.json, "emit a JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "intersect") return cmd_intersect(o, out);
    if (cmd == "act") return cmd_act(o, out);
    if (cmd == "equal") return cmd_equal(o, out);
    if (cmd == "hom") return cmd_hom(o, out);
    if (cmd == "lattice") return cmd_lattice(o, out);
    if (cmd == "kernel") return cmd_kernel(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tmcg
