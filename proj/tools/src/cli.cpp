#include "ordcurves_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordcurves/combinatorics.hpp"
#include "ordcurves/constructions.hpp"
#include "ordcurves/determined.hpp"
#include "ordcurves/errors.hpp"
#include "ordcurves/nd_families.hpp"
#include "ordcurves/oracle.hpp"
#include "ordcurves/projection.hpp"
#include "ordcurves/veronese.hpp"

namespace ordcurves::cli {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rational coordinate(const json& v, const std::string& text, std::size_t& cursor) {
  std::string token;
  if (v.is_string()) {
    token = v.get<std::string>();
  } else if (v.is_number_integer()) {
    token = v.dump();
  } else {
    auto [line, col] = line_col(text, cursor);
    throw ParseError("coordinate must be a string \"p/q\" or an integer", line, col);
  }
  std::size_t at = text.find(v.is_string() ? "\"" + token + "\"" : token, cursor);
  if (at == std::string::npos) at = cursor;
  try {
    Rational r = parse_rational(token);
    cursor = at + token.size();
    return r;
  } catch (const ParseError& e) {
    auto [line, col] = line_col(text, at + (v.is_string() ? 1 : 0));
    throw ParseError(e.what(), line, col + (e.column() > 0 ? e.column() - 1 : 0));
  }
}

std::vector<PlanePoint> point_list(const json& arr, const char* key, const std::string& text, std::size_t& cursor) {
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array", 1, 1);
  std::vector<PlanePoint> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) {
      auto [line, col] = line_col(text, cursor);
      throw ParseError(std::string("each entry of \"") + key + "\" must be a pair", line, col);
    }
    Rational x = coordinate(p[0], text, cursor);
    Rational y = coordinate(p[1], text, cursor);
    out.push_back({x, y});
  }
  return out;
}

json rational_json(const Rational& r) { return to_string(r); }

json point_json(const PlanePoint& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json points_json(const std::vector<PlanePoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

json curve_set_json(const DeterminedCurveSet& set) {
  json curves = json::array();
  for (const auto& c : set.curves) {
    curves.push_back({{"polynomial", c.curve.representative().to_string()},
                      {"radical", c.curve.radical().to_string()},
                      {"incidence", c.incidence},
                      {"hyperplanes", c.hyperplanes.size()}});
  }
  json out = {{"d", set.d}, {"count", set.curves.size()}, {"curves", curves}};
  if (set.n) out["n"] = *set.n;
  return out;
}

json failure_json(const std::optional<NdFailure>& f) {
  if (!f) return nullptr;
  return {{"condition", f->condition},
          {"e", f->e},
          {"section", f->section},
          {"measured", f->measured},
          {"threshold", f->threshold}};
}

struct Options {
  std::string input = "-";
  std::string output;
  int d = 0;
  long n = -1;
  int e = -1;
  std::uint64_t seed = 0;
  std::string threshold;
  std::string format = "json";
  unsigned workers = 1;
  std::string basis;
  std::string kind;
  std::size_t m = 0;
  std::size_t count = 0;
  std::size_t side = 0;
  int genericity = -1;
  std::size_t min_size = 8;
  std::size_t max_size = 14;
  bool omit_runtime = false;
  bool strict_guard = false;
};

unsigned default_workers() {
  if (const char* env = std::getenv("ORDCURVES_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open input file '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

int degree(const Options& o, const InputFile& in) {
  int d = o.d > 0 ? o.d : in.d;
  if (d < 1) throw PreconditionError("degree d must be given (--d or \"d\" in the input) and positive");
  return d;
}

std::vector<PlanePoint> basis_of(const Options& o, const InputFile& in) {
  if (o.basis.empty()) return in.basis;
  std::vector<PlanePoint> out;
  std::stringstream ss(o.basis);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    unsigned long i = std::strtoul(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0') throw ParseError("--basis expects comma-separated indices", 1, 1);
    if (i >= in.points.size()) throw PreconditionError("--basis index out of range");
    out.push_back(in.points[i]);
  }
  return out;
}

using Command = std::function<json(const Options&, const InputFile&)>;

json cmd_lift(const Options& o, const InputFile& in) {
  const int d = degree(o, in);
  json lifts = json::array();
  for (const auto& p : in.points) {
    json v = json::array();
    for (const auto& c : lift(p, d)) v.push_back(to_string(c));
    lifts.push_back(v);
  }
  return {{"d", d}, {"dimension", veronese_dim(d)}, {"lifts", lifts}};
}

json cmd_determined(const Options& o, const InputFile& in) {
  PointConfiguration a(in.points, degree(o, in));
  return curve_set_json(enumerate_determined(a, {o.workers}));
}

json cmd_ordinary(const Options& o, const InputFile& in) {
  if (o.n < 0) throw PreconditionError("ordinary requires --n");
  PointConfiguration a(in.points, degree(o, in));
  return curve_set_json(ordinary_curves(a, static_cast<std::size_t>(o.n), {o.workers}));
}

json cmd_richness(const Options& o, const InputFile& in) {
  const int d = degree(o, in);
  const int e = o.e > 0 ? o.e : d;
  std::optional<Rational> threshold;
  if (!o.threshold.empty()) threshold = parse_rational(o.threshold);
  Richness r = max_curve_richness(in.points, e, {o.workers});
  RegularityReport rep = regularity_report(in.points, d, threshold, {o.workers});
  return {{"e", e},
          {"richness", r.size},
          {"witness", r.witness},
          {"d", d},
          {"regular", rep.is_regular},
          {"ratio", rational_json(rep.ratio)},
          {"threshold", rational_json(rep.threshold)}};
}

json cmd_nd_verify(const Options& o, const InputFile& in) {
  const int d = degree(o, in);
  std::vector<PlanePoint> b = basis_of(o, in);
  NdVerdict v = nd_verify(in.points, b, d);
  return {{"d", d}, {"basis", points_json(b)}, {"member", v.member}, {"failure", failure_json(v.failure)}};
}

json chain_json(const ChainResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"size", s.size},
                     {"chosen", s.chosen ? point_json(*s.chosen) : json(nullptr)},
                     {"active_pairs", s.active_pairs},
                     {"max_guard", s.max_guard},
                     {"guard_ok", s.guard_ok},
                     {"rejected", s.rejected}});
  }
  return {{"success", r.success},
          {"basis", points_json(r.basis)},
          {"steps", steps},
          {"guard_failures", r.guard_failures},
          {"failure", r.failure}};
}

json cmd_nd_grow(const Options& o, const InputFile& in) {
  const int d = degree(o, in);
  ChainOptions co;
  co.order = seeded_order(in.points.size(), o.seed);
  co.strict_guard = o.strict_guard;
  json out = chain_json(grow_nd_chain(in.points, d, co));
  out["d"] = d;
  out["seed"] = o.seed;
  return out;
}

json cmd_project(const Options& o, const InputFile& in) {
  const int d = degree(o, in);
  std::vector<PlanePoint> b = basis_of(o, in);
  if (b.empty()) {
    ChainOptions co;
    co.order = seeded_order(in.points.size(), o.seed);
    ChainResult r = grow_nd_chain(in.points, d, co);
    if (!r.success) throw PreconditionError("no basis given and the chain grower failed: " + r.failure);
    b = r.basis;
  }
  PointConfiguration a(in.points, d);
  BasisCurves bc = curves_from_basis(a, b);
  const PipelineTrace& t = bc.trace;
  json trace = {{"D_A", t.d_a}, {"E_A", t.e_a}, {"S", t.s}, {"T", t.t}, {"delta", t.delta},
                {"n", t.n},     {"lines", t.lines}, {"emitted", t.emitted}};
  return {{"basis", points_json(b)}, {"trace", trace}, {"curves", curve_set_json(bc.curves)}, {"report", bc.report}};
}

json construction_json(const ConstructionResult& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  json partition = json::object();
  for (const auto& [name, idx] : r.partition) partition[name] = idx;
  json recipe = {{"kind", to_string(r.recipe.kind)}, {"d", r.recipe.d}, {"n", r.recipe.n}, {"m", r.recipe.m}};
  if (r.recipe.carrier) recipe["carrier"] = *r.recipe.carrier;
  json out = {{"points", points_json(r.points)},
              {"provenance", {{"recipe", recipe}, {"seed", r.recipe.seed}, {"certificates", certs}}},
              {"partition", partition}};
  if (r.recipe.d > 0) out["d"] = r.recipe.d;
  return out;
}

json cmd_construct(const Options& o, const InputFile&) {
  ConstructionKind kind = parse_construction_kind(o.kind);
  switch (kind) {
    case ConstructionKind::theorem6:
      return construction_json(construct_theorem6(o.d, o.m, o.seed));
    case ConstructionKind::theorem8:
      if (o.n < 0) throw PreconditionError("theorem8 requires --n");
      if (o.d < 1) throw PreconditionError("theorem8 requires --d");
      return construction_json(
          construct_theorem8(o.d, static_cast<std::size_t>(o.n), o.m, CarrierCurve::power_graph(o.d), o.seed));
    case ConstructionKind::grid: {
      SampleParams sp;
      sp.side = o.side;
      return construction_json(sample_configuration(kind, sp, o.seed));
    }
    case ConstructionKind::random_general: {
      SampleParams sp;
      sp.count = o.count;
      sp.genericity = o.genericity >= 0 ? o.genericity : 1;
      return construction_json(sample_configuration(kind, sp, o.seed));
    }
  }
  return nullptr;
}

json cmd_oracle_check(const Options& o, const InputFile& in) {
  const int d = degree(o, in);
  json reports = json::array();
  auto add = [&](const OracleReport& r) {
    reports.push_back({{"instance", r.instance},
                       {"quantity", r.quantity},
                       {"oracle", r.oracle_value},
                       {"main", r.main_value},
                       {"agree", r.agree}});
    if (!r.agree) throw LemmaViolation("oracle disagreement on " + r.quantity);
  };
  const std::string id = o.input == "-" ? "stdin" : o.input;
  add(check_determined(id, PointConfiguration(in.points, d), o.workers));
  std::vector<PlanePoint> b = basis_of(o, in);
  if (!b.empty()) add(check_nd(id, in.points, b, d));
  return reports;
}

std::string sweep_csv(const Options& o) {
  if (o.d < 1) throw PreconditionError("sweep requires --d");
  if (o.n < 0) throw PreconditionError("sweep requires --n");
  if (o.min_size > o.max_size) throw PreconditionError("sweep requires --min-size <= --max-size");
  std::ostringstream out;
  out << "size,d,n,determined,ordinary,max_richness,runtime_ms\n";
  for (std::size_t size = o.min_size; size <= o.max_size; ++size) {
    auto start = std::chrono::steady_clock::now();
    SampleParams sp;
    sp.count = size;
    sp.genericity = o.genericity >= 0 ? o.genericity : 1;
    std::vector<PlanePoint> pts;
    for (std::uint64_t k = 0;; ++k) {
      if (k > 64) throw PreconditionError("sweep could not sample a set off every curve of degree d");
      pts = sample_configuration(ConstructionKind::random_general, sp, o.seed + 1000 * size + k).points;
      if (!contained_in_curve(pts, o.d).contained) break;
    }
    PointConfiguration a(pts, o.d);
    DeterminedCurveSet all = enumerate_determined(a, {o.workers});
    DeterminedCurveSet ord = restrict_to_ordinary(all, static_cast<std::size_t>(o.n));
    Richness r = max_curve_richness(pts, o.d, {o.workers});
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out << size << ',' << o.d << ',' << o.n << ',' << all.curves.size() << ',' << ord.curves.size() << ',' << r.size
        << ',';
    if (o.omit_runtime) {
      out << "-";
    } else {
      out << ms;
    }
    out << '\n';
  }
  return out.str();
}

// Drops points while the command keeps raising LemmaViolation; basis points are kept.
InputFile minimize(const Command& cmd, const Options& o, InputFile in) {
  std::size_t budget = 200;
  bool shrunk = true;
  while (shrunk && budget > 0) {
    shrunk = false;
    for (std::size_t i = 0; i < in.points.size() && budget > 0; ++i) {
      if (std::find(in.basis.begin(), in.basis.end(), in.points[i]) != in.basis.end()) continue;
      InputFile trial = in;
      trial.points.erase(trial.points.begin() + static_cast<long>(i));
      --budget;
      try {
        cmd(o, trial);
      } catch (const LemmaViolation&) {
        in = std::move(trial);
        shrunk = true;
        break;
      } catch (const std::exception&) {
      }
    }
  }
  return in;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw PreconditionError("cannot write output file '" + o.output + "'");
  f << text;
}

}  // namespace

InputFile parse_input(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
  if (!root.is_object()) throw ParseError("input must be a JSON object", 1, 1);
  InputFile in;
  if (root.contains("d")) {
    if (!root["d"].is_number_integer()) throw ParseError("\"d\" must be an integer", 1, 1);
    in.d = root["d"].get<int>();
  }
  if (!root.contains("points")) throw ParseError("input needs a \"points\" array", 1, 1);
  std::size_t cursor = text.find("\"points\"");
  in.points = point_list(root["points"], "points", text, cursor);
  if (root.contains("basis")) {
    cursor = text.find("\"basis\"");
    in.basis = point_list(root["basis"], "basis", text, cursor);
  }
  return in;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinary curves of point configurations"};
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("-i,--input", o.input, "point-set JSON file, '-' for stdin");
    sub->add_option("-o,--output", o.output, "write the result here instead of stdout");
    sub->add_option("--d", o.d, "curve degree");
    sub->add_option("--workers", o.workers, "worker threads (default: ORDCURVES_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  std::map<std::string, Command> commands = {
      {"lift", cmd_lift},         {"determined", cmd_determined}, {"ordinary", cmd_ordinary},
      {"richness", cmd_richness}, {"nd-verify", cmd_nd_verify},   {"nd-grow", cmd_nd_grow},
      {"project", cmd_project},   {"construct", cmd_construct},   {"oracle-check", cmd_oracle_check},
  };
  const std::map<std::string, std::string> about = {
      {"lift", "Veronese lift of each point"},
      {"determined", "all curves spanned by C(d+2,2)-1 lifted points"},
      {"ordinary", "determined curves with at most n points of A"},
      {"richness", "largest subset on one curve of degree e, plus regularity"},
      {"nd-verify", "check that B is a nondegenerate basis for A"},
      {"nd-grow", "grow a nondegenerate basis greedily"},
      {"project", "run the projection pipeline for a basis"},
      {"construct", "build an extremal or sampled configuration"},
      {"oracle-check", "compare against the brute-force oracle"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    common(sub, name != "construct");
    subs[name] = sub;
  }
  subs["ordinary"]->add_option("--n", o.n, "incidence cap")->required();
  subs["richness"]->add_option("--e", o.e, "curve degree bound (default d)");
  subs["richness"]->add_option("--threshold", o.threshold, "regularity threshold as p/q");
  for (const char* name : {"nd-verify", "project", "oracle-check"})
    subs[name]->add_option("--basis", o.basis, "comma-separated point indices of B");
  for (const char* name : {"nd-grow", "project", "construct"}) subs[name]->add_option("--seed", o.seed, "seed");
  subs["nd-grow"]->add_flag("--strict-guard", o.strict_guard, "stop at the first guard failure");
  CLI::App* construct = subs["construct"];
  construct->add_option("--kind", o.kind, "theorem6, theorem8, random_general or grid")->required();
  construct->add_option("--n", o.n, "theorem8 subset size");
  construct->add_option("--m", o.m, "number of points");
  construct->add_option("--count", o.count, "random_general: number of points");
  construct->add_option("--side", o.side, "grid: side length");
  construct->add_option("--genericity", o.genericity, "random_general: genericity level");

  CLI::App* sweep = app.add_subcommand("sweep", "ordinary-curve counts over random sets of growing size");
  common(sweep, false);
  sweep->add_option("--n", o.n, "incidence cap")->required();
  sweep->add_option("--seed", o.seed, "seed");
  sweep->add_option("--min-size", o.min_size, "smallest |A|");
  sweep->add_option("--max-size", o.max_size, "largest |A|");
  sweep->add_option("--genericity", o.genericity, "genericity level of the samples (default 1)");
  sweep->add_flag("--omit-runtime", o.omit_runtime, "print '-' instead of runtime_ms");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  InputFile in;
  try {
    if (name == "sweep") {
      emit(o, out, sweep_csv(o));
      return kOk;
    }
    if (name != "construct") in = parse_input(read_all(o.input));
    json result = commands.at(name)(o, in);
    emit(o, out, result.dump(2) + "\n");
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const LemmaViolation& e) {
    json dump = {{"error", "lemma violation"}, {"message", e.what()}, {"command", args}};
    if (name != "sweep" && name != "construct") {
      InputFile small = minimize(commands.at(name), o, in);
      dump["reproduction"] = {{"d", degree(o, small)}, {"points", points_json(small.points)},
                              {"basis", points_json(small.basis)}};
    }
    err << dump.dump(2) << "\n";
    return kLemma;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace ordcurves::cli
