#include "ruled/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ruled/errors.hpp"
#include "ruled/formulas.hpp"
#include "ruled/graph_json.hpp"

namespace ruled::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

BlowupVector parse_vector_literal(std::string_view text, BundleType bundle, int genus) {
  auto semi = split(text, ';');
  if (semi.size() > 2) throw std::invalid_argument("vector literal has more than one ';'");
  auto head = split(semi[0], ',');
  if (head.size() != 2)
    throw std::invalid_argument("vector literal must start with 'lambda_F,lambda_B': '" + std::string(text) + "'");
  std::vector<Rational> deltas;
  if (semi.size() == 2 && !blank(semi[1]))
    for (auto part : split(semi[1], ',')) deltas.push_back(Rational::parse(part));
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  return BlowupVector(Rational::parse(head[0]), Rational::parse(head[1]), std::move(deltas), bundle, genus);
}

BundleType parse_bundle(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "trivial") return BundleType::Trivial;
  if (s == "nontrivial" || s == "non-trivial") return BundleType::NonTrivial;
  throw std::invalid_argument("bundle must be 'trivial' or 'nontrivial'");
}

namespace {

ordered_json strings(const std::vector<BlowupVector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(v.str());
  return a;
}

std::string describe(const BlowupVector& v) {
  return v.str() + " (" + std::string(to_string(v.bundle)) + ", genus " + std::to_string(v.genus) + ")";
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string class_list(const std::vector<ExceptionalClass>& cs) {
  std::vector<std::string> names;
  for (const auto& c : cs) names.push_back(c.str());
  return "{" + join(names, ", ") + "}";
}

struct Common {
  std::string vector;
  std::string bundle = "trivial";
  int genus = 1;
  bool json = false;

  void attach(CLI::App* sub) {
    sub->add_option("-v,--vector", vector, "encoding vector \"lambda_F,lambda_B;delta_1,...,delta_k\"")->required();
    sub->add_option("-b,--bundle", bundle, "trivial | nontrivial")->capture_default_str();
    sub->add_option("-g,--genus", genus, "genus of the base surface (>= 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--json", json, "emit JSON");
  }

  [[nodiscard]] BlowupVector parsed() const { return parse_vector_literal(vector, parse_bundle(bundle), genus); }
};

// Usage errors surface as this so they map to exit code 2 without being
// confused with PreconditionError (which also derives from invalid_argument).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BlowupVector parse_or_usage(const Common& c) {
  try {
    return c.parsed();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_check(const Common& c, std::ostream& out) {
  const BlowupVector v = parse_or_usage(c);
  const ConeReport cone = check_cone(v);
  const bool reduced = is_g_reduced(v);
  if (c.json) {
    ordered_json j;
    j["vector"] = v.str();
    j["bundle"] = to_string(v.bundle);
    j["genus"] = v.genus;
    j["in_cone"] = cone.in_cone;
    ordered_json viol = ordered_json::array();
    for (const auto& x : cone.violations)
      viol.push_back({{"condition", to_string(x.condition)}, {"index", x.index}, {"message", x.message}});
    j["violations"] = viol;
    j["g_reduced"] = reduced;
    j["defect"] = v.k() >= 2 ? ordered_json(defect(v).str()) : ordered_json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "vector: " << describe(v) << '\n';
    out << "in cone: " << (cone ? "yes" : "no");
    if (!cone) {
      std::vector<std::string> names;
      for (const auto& x : cone.violations) names.push_back(x.message);
      out << " (" << join(names, "; ") << ")";
    }
    out << '\n';
    out << "g-reduced: " << (reduced ? "yes" : "no");
    if (!reduced) out << " (defect " << defect(v) << ")";
    out << '\n';
  }
  return cone ? Ok : DomainRejection;
}

int cmd_reduce(const Common& c, std::ostream& out) {
  const BlowupVector v = parse_or_usage(c);
  ReduceResult r;
  if (v.k() >= 2) {
    r = cremona_reduce(v);
  } else {
    if (auto cone = check_cone(v); !cone) throw NotBlowupForm("not a blowup form: " + v.str());
    r.reduced = v;
    r.trace = {v};
  }
  if (c.json) {
    ordered_json j;
    j["input"] = v.str();
    j["reduced"] = r.reduced.str();
    j["steps"] = strings(r.trace);
    j["iterations"] = r.iterations;
    out << j.dump(2) << '\n';
  } else {
    out << "input: " << describe(v) << '\n';
    out << "reduced: " << r.reduced.str() << '\n';
    out << "iterations: " << r.iterations << '\n';
    for (std::size_t i = 0; i < r.trace.size(); ++i) out << "step " << i << ": " << r.trace[i].str() << '\n';
  }
  return Ok;
}

struct CountFlags {
  bool no_reduce = false;
  bool crosscheck = false;
  unsigned jobs = 1;
};

bool all_equal(const std::vector<Rational>& ds) {
  return !ds.empty() && std::all_of(ds.begin(), ds.end(), [&](const Rational& d) { return d == ds.front(); });
}

}  // namespace

ordered_json report_to_json(const CountReport& r) {
  ordered_json j;
  j["input"] = r.input.str();
  j["bundle"] = to_string(r.input.bundle);
  j["genus"] = r.input.genus;
  j["reduced"] = r.reduced.str();
  j["auto_reduced"] = r.auto_reduced;
  j["initial_twists"] = r.initial_twists;
  j["stage_counts"] = r.stage_counts;
  j["count"] = r.count;
  return j;
}

namespace {

// Returns false when a closed form disagrees with the enumeration.
bool crosscheck(const CountReport& r, ordered_json& j, std::ostream& text) {
  bool ok = true;
  const BlowupVector& v = r.reduced;
  const mpz_class count(static_cast<unsigned long>(r.count));
  if (v.k() == 0) {
    const mpz_class f = count_ruled(v.lambda_f, v.lambda_b, v.bundle);
    ok &= f == count;
    j["ruled_formula"] = f.get_str();
    text << "formula (ruled): " << f << (f == count ? " (agrees)" : " (MISMATCH)") << '\n';
  }
  if (all_equal(v.deltas) && Rational(2) * v.deltas.front() <= v.lambda_f) {
    const mpz_class f = count_equal_sizes(v.lambda_f, v.lambda_b, v.deltas.front(),
                                          static_cast<unsigned>(v.k()), v.bundle);
    ok &= f == count;
    j["equal_sizes_formula"] = f.get_str();
    text << "formula (equal sizes): " << f << (f == count ? " (agrees)" : " (MISMATCH)") << '\n';
  }
  if (v.bundle == BundleType::Trivial && v.k() >= 1) {
    const mpz_class bound = max_count(v.lambda_f, v.lambda_b, static_cast<unsigned>(v.k()));
    const bool sharp = max_count_conditions(v);
    const bool fine = sharp ? count == bound : count <= bound;
    ok &= fine;
    j["max_count"] = bound.get_str();
    j["max_count_attained_by_conditions"] = sharp;
    text << "max count: " << bound << (sharp ? " (conditions hold, must be attained)" : " (upper bound)")
         << (fine ? "" : " (VIOLATED)") << '\n';
  }
  return ok;
}

int cmd_count(const Common& c, const CountFlags& f, std::ostream& out) {
  const BlowupVector v = parse_or_usage(c);
  const CountReport r = count_actions(v, CountOptions{!f.no_reduce, f.jobs});
  ordered_json j = report_to_json(r);
  std::ostringstream text;
  bool ok = true;
  if (f.crosscheck) ok = crosscheck(r, j, text);
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "input: " << describe(r.input) << '\n';
    out << "reduced: " << r.reduced.str() << '\n';
    out << "auto-reduced: " << (r.auto_reduced ? "yes" : "no") << '\n';
    out << "initial twists: " << join(r.initial_twists) << '\n';
    out << "stage counts: " << join(r.stage_counts) << '\n';
    out << "count: " << r.count << '\n';
    out << text.str();
  }
  return ok ? Ok : InternalInconsistency;
}

int cmd_enumerate(const Common& c, const CountFlags& f, const std::string& format, const std::string& path,
                  std::ostream& out) {
  const BlowupVector v = parse_or_usage(c);
  const Enumeration e = enumerate_actions(v, CountOptions{!f.no_reduce, f.jobs});
  std::string body;
  if (format == "dot") {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.graphs.size(); ++i) os << graph_to_dot(e.graphs[i], "action_" + std::to_string(i));
    body = os.str();
  } else {
    ordered_json j;
    j["report"] = report_to_json(e.report);
    ordered_json gs = ordered_json::array();
    for (const auto& g : e.graphs) gs.push_back(graph_to_json(g));
    j["graphs"] = std::move(gs);
    body = j.dump(2) + "\n";
  }
  if (path.empty()) {
    out << body;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    file << body;
    if (!file.flush()) throw std::ios_base::failure("cannot write '" + path + "'");
    out << e.graphs.size() << " graph(s) written to " << path << '\n';
  }
  return Ok;
}

int cmd_invariants(const Common& c, std::ostream& out, std::ostream& err) {
  const BlowupVector v = parse_or_usage(c);
  const Rational vol = volume(v);
  const GromovWidth w = gromov_width(v);
  const mpz_class packing = packing_number(v);

  ordered_json j;
  j["vector"] = v.str();
  j["volume"] = vol.str();
  j["gromov_width"] = {{"squared", w.squared.str()},
                       {"capped_by_fiber", w.capped_by_fiber},
                       {"approx", w.approx}};
  j["packing_number"] = packing.get_str();

  std::ostringstream text;
  text << "vector: " << describe(v) << '\n';
  text << "volume: " << vol << '\n';
  text << "gromov width^2: " << w.squared << (w.capped_by_fiber ? " (capped by fiber)" : " (volume bound)")
       << ", approx " << std::setprecision(10) << w.approx << '\n';
  text << "packing number: " << packing << '\n';

  if (v.k() == 0) {
    j["emin"] = nullptr;
    text << "E_min: none (no blowups)\n";
  } else {
    BlowupVector target = v;
    if (v.k() >= 2 && !is_g_reduced(v)) {
      target = cremona_reduce(v).reduced;
      err << "notice: E_min computed on the g-reduced vector " << target.str() << '\n';
    }
    const EminResult m = emin(target);
    ordered_json classes = ordered_json::array();
    for (const auto& cl : m.classes) classes.push_back(cl.str());
    j["emin"] = {{"vector", target.str()}, {"classes", classes}, {"case", to_string(m.case_label)}, {"j_v", m.j_v}};
    text << "E_min: " << class_list(m.classes) << " case " << to_string(m.case_label) << ", j_v " << m.j_v << '\n';
  }
  out << (c.json ? j.dump(2) + "\n" : text.str());
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and enumerate Hamiltonian circle actions on blowups of irrational ruled surfaces",
               args.empty() ? "ruled" : args.front()};
  app.require_subcommand(1);

  Common check_opts, reduce_opts, count_opts, enum_opts, inv_opts;
  CountFlags count_flags, enum_flags;
  std::string format = "json";
  std::string out_path;

  auto* check = app.add_subcommand("check", "cone membership and g-reduced status");
  check_opts.attach(check);
  auto* reduce = app.add_subcommand("reduce", "bring a vector to g-reduced form by Cremona moves");
  reduce_opts.attach(reduce);
  auto* count = app.add_subcommand("count", "count inequivalent Hamiltonian circle actions");
  count_opts.attach(count);
  count->add_flag("--no-reduce", count_flags.no_reduce, "reject non-reduced input instead of reducing it");
  count->add_flag("--formula-crosscheck", count_flags.crosscheck, "compare against the closed-form counts");
  count->add_option("-j,--jobs", count_flags.jobs, "worker threads per blowup stage")->check(CLI::PositiveNumber);
  auto* enumerate = app.add_subcommand("enumerate", "emit every inequivalent decorated graph");
  enum_opts.attach(enumerate);
  enumerate->add_flag("--no-reduce", enum_flags.no_reduce, "reject non-reduced input instead of reducing it");
  enumerate->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  enumerate->add_option("-o,--out", out_path, "write to this file instead of stdout");
  enumerate->add_option("-j,--jobs", enum_flags.jobs, "worker threads per blowup stage")->check(CLI::PositiveNumber);
  auto* invariants = app.add_subcommand("invariants", "volume, Gromov width, packing number, minimal exceptional classes");
  inv_opts.attach(invariants);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ruled");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageOrIo;
  }

  try {
    if (check->parsed()) return cmd_check(check_opts, out);
    if (reduce->parsed()) return cmd_reduce(reduce_opts, out);
    if (count->parsed()) return cmd_count(count_opts, count_flags, out);
    if (enumerate->parsed()) return cmd_enumerate(enum_opts, enum_flags, format, out_path, out);
    if (invariants->parsed()) return cmd_invariants(inv_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return UsageOrIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return UsageOrIo;
  } catch (const NotBlowupForm& e) {
    err << "error: " << e.what() << '\n';
    return DomainRejection;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return DomainRejection;
  }
  return UsageOrIo;
}

}  // namespace ruled::cli
