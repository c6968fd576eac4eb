#include "lrc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_text.hpp"
#include "lrc/bounds.hpp"
#include "lrc/codefile.hpp"
#include "lrc/construct.hpp"
#include "lrc/geometry.hpp"

namespace lrc::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kBad = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

/// Usage or input problem reported by the command itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(Io& io, const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << io.in.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void emit(Io& io, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw InputError("empty value list \"" + s + "\"");
  return out;
}

std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: \"" + s + "\"");
  }
  if (used != s.size()) throw InputError("not an integer: \"" + s + "\"");
  return v;
}

// Distance tokens may be relative to delta: 2d+1, 2d+2, 3d.
std::int64_t distance_token(const std::string& s, std::int64_t delta) {
  if (s == "2d+1") return 2 * delta + 1;
  if (s == "2d+2") return 2 * delta + 2;
  if (s == "3d") return 3 * delta;
  return to_int(s);
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string q, r, delta, d;
  bool grid = false;
  std::string format = "tsv";
};

int run_bounds(Io& io, const BoundsArgs& a) {
  std::vector<BoundReport> reports;
  if (!a.grid) {
    for (const auto* s : {&a.q, &a.r, &a.delta, &a.d})
      if (s->find(',') != std::string::npos) throw InputError("value lists need --grid");
    const std::int64_t delta = to_int(a.delta);
    try {
      reports.push_back(bounds_report(to_int(a.q), to_int(a.r), delta, distance_token(a.d, delta)));
    } catch (const std::domain_error& e) {
      io.err << "bounds: " << e.what() << "\n";
      return kNo;
    }
  } else {
    for (const auto& qs : split(a.q))
      for (const auto& rs : split(a.r))
        for (const auto& ds : split(a.delta))
          for (const auto& dist : split(a.d)) {
            const std::int64_t delta = to_int(ds);
            try {
              reports.push_back(bounds_report(to_int(qs), to_int(rs), delta,
                                              distance_token(dist, delta)));
            } catch (const std::domain_error&) {
              // No applicable bound at this grid point.
            }
          }
  }
  if (a.format == "tsv") {
    io.out << tsv_header() << "\n";
    for (const auto& r : reports) io.out << tsv_row(r) << "\n";
  } else {
    for (const auto& r : reports) io.out << table(r);
  }
  return kOk;
}

// ------------------------------------------------------------- construct

FieldPtr field_of(std::int64_t q) {
  if (q < 2 || q > static_cast<std::int64_t>(kMaxFieldOrder))
    throw InputError("field order " + std::to_string(q) + " out of range");
  try {
    return Field::of_order(static_cast<std::uint32_t>(q));
  } catch (const FieldError& e) {
    throw InputError(e.what());
  }
}

int run_sunflower_code(Io& io, std::int64_t q, std::int64_t delta, const std::string& out) {
  const FieldPtr f = field_of(q);
  if (delta < 2) throw InputError("delta must be at least 2");
  if (q < delta + 1) {
    io.err << "construct: sunflower code needs q >= delta + 1\n";
    return kNo;
  }
  const LinearCode code = sunflower_code(f, static_cast<std::size_t>(delta));
  emit(io, out,
       write_code_file(make_code_file(code, 2, delta,
                                      "sunflower q=" + std::to_string(q) +
                                          " delta=" + std::to_string(delta))));
  return kOk;
}

int run_from_lines(Io& io, const std::string& lines, std::int64_t delta, const std::string& out) {
  if (delta < 2) throw InputError("delta must be at least 2");
  const LineFamily family = read_line_family(slurp(io, lines));
  if (family.size() < 2) throw InputError("construction needs at least two lines");
  if (family.field().q() < static_cast<std::size_t>(delta) + 1 ||
      !satisfies_intersection_condition(family, delta)) {
    io.err << "construct: line family violates the intersection condition for delta=" << delta
           << "\n";
    return kNo;
  }
  const LinearCode code = lines_to_parity_check(family, delta);
  emit(io, out,
       write_code_file(make_code_file(
           code, 2, delta,
           "lines ell=" + std::to_string(family.size()) + " q=" +
               std::to_string(family.field().q()) + " delta=" + std::to_string(delta))));
  return kOk;
}

// ---------------------------------------------------------------- verify

int run_verify(Io& io, const std::string& in, std::uint64_t budget, bool timing) {
  const CodeFile file = read_code_file(slurp(io, in));
  if (file.r < 1 || file.delta < 2) throw InputError("code file needs r >= 1 and delta >= 2");
  const LinearCode code = file.code();
  Certificate cert;
  try {
    cert = verify_optimal_lrc(code, file.r, file.delta, budget);
  } catch (const BudgetExceeded& e) {
    io.err << "verify: " << e.what() << "; raise --budget\n";
    return kBad;
  }
  if (cert.optimal && cert.k != file.k_claimed) {
    cert.optimal = false;
    cert.failed_stage = "dimension";
    cert.reason = "rank gives k = " + std::to_string(cert.k) + ", file claims " +
                  std::to_string(file.k_claimed);
  }
  io.out << write_certificate(cert, timing);
  if (!cert.optimal) {
    io.err << "verify: not optimal at stage " << *cert.failed_stage << ": " << cert.reason << "\n";
    return kNo;
  }
  return kOk;
}

// -------------------------------------------------------------- geometry

ordered_json field_json(const Field& f) {
  return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

ordered_json lines_json(const LineFamily& fam) {
  ordered_json a = ordered_json::array();
  for (const auto& l : fam.lines()) a.push_back(l.dual);
  return a;
}

int run_enumerate(Io& io, std::int64_t q, bool incidence) {
  const FieldPtr f = field_of(q);
  const auto lines = enumerate_lines(*f);
  if (incidence) {
    io.out << incidence_matrix(LineFamily(f, lines)).to_text();
    return kOk;
  }
  ordered_json j;
  j["field"] = field_json(*f);
  ordered_json pts = ordered_json::array(), ls = ordered_json::array();
  for (const auto& p : enumerate_points(*f)) pts.push_back(p.coords);
  for (const auto& l : lines) ls.push_back(l.dual);
  j["points"] = pts;
  j["lines"] = ls;
  io.out << detail::json_text(j);
  return kOk;
}

int run_geometry_sunflower(Io& io, std::int64_t q, bool incidence) {
  const FieldPtr f = field_of(q);
  const LineFamily fam = sunflower_family(f, ProjPoint{{1, 0, 0}});
  if (incidence)
    io.out << incidence_matrix(fam).to_text();
  else
    io.out << write_line_family(fam);
  return kOk;
}

struct SearchArgs {
  std::int64_t q = 0, delta = 0;
  std::string mode = "exhaustive";
  std::uint64_t limit = 10'000'000;
  bool all = false;
  bool maximal = false;
  bool incidence = false;
};

int run_search(Io& io, const SearchArgs& a) {
  const FieldPtr f = field_of(a.q);
  if (a.delta < 2) throw InputError("delta must be at least 2");
  if (a.q < a.delta + 1) {
    io.err << "geometry search: needs q >= delta + 1\n";
    return kNo;
  }
  const SearchMode mode = a.mode == "greedy" ? SearchMode::greedy : SearchMode::exhaustive;
  const auto res = search_max_family(f, a.delta, mode, {a.limit, a.maximal});
  if (a.incidence) {
    io.out << incidence_matrix(res.best).to_text();
  } else {
    ordered_json j;
    j["field"] = field_json(*f);
    j["lines"] = lines_json(res.best);
    j["delta"] = a.delta;
    j["mode"] = a.mode;
    j["size"] = res.best.size();
    j["sunflower"] = res.best.size() >= 2 && is_sunflower(res.best);
    j["complete"] = res.complete;
    j["nodes"] = res.nodes;
    if (a.all) {
      ordered_json m = ordered_json::array();
      for (const auto& fam : res.maximum) m.push_back(lines_json(fam));
      j["maximum"] = m;
    }
    if (a.maximal) {
      ordered_json m = ordered_json::array();
      for (const auto& fam : res.maximal) m.push_back(lines_json(fam));
      j["maximal"] = m;
    }
    io.out << detail::json_text(j);
  }
  if (!res.complete) {
    io.err << "geometry search: node limit " << a.limit << " reached, result is a lower bound\n";
    return kNo;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  Io io{out, err, in};
  CLI::App app{"Optimal (r, delta) locally repairable codes over PG(2,q)", "lrc"};
  app.require_subcommand(1);

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate length bounds");
  bounds->add_option("--q", ba.q, "Field order (comma list with --grid)")->required();
  bounds->add_option("--r", ba.r, "Locality r")->required();
  bounds->add_option("--delta", ba.delta, "Local distance delta")->required();
  bounds->add_option("--d", ba.d, "Distance; also 2d+1, 2d+2, 3d")->required();
  bounds->add_flag("--grid", ba.grid, "Sweep every combination of the comma lists");
  bounds->add_option("--format", ba.format, "Output format")
      ->check(CLI::IsMember({"tsv", "table"}));

  auto* construct = app.add_subcommand("construct", "Build a code file");
  construct->require_subcommand(1);
  std::int64_t cq = 0, cdelta = 0;
  std::string cout_path, lines_path;
  auto* csun = construct->add_subcommand("sunflower", "Code of all lines through a point");
  csun->add_option("--q", cq, "Field order")->required();
  csun->add_option("--delta", cdelta, "Local distance delta")->required();
  csun->add_option("--out", cout_path, "Output file (default stdout)");
  auto* clines = construct->add_subcommand("from-lines", "Code of a line family");
  clines->add_option("--lines", lines_path, "Line-family JSON file or -")->required();
  clines->add_option("--delta", cdelta, "Local distance delta")->required();
  clines->add_option("--out", cout_path, "Output file (default stdout)");

  std::string vin = "-";
  std::uint64_t budget = kDefaultBudget;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Certify optimality of a code file");
  verify->add_option("--in", vin, "Code file or - (default)");
  verify->add_option("--budget", budget, "Work budget for the distance computation")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Omit stage times");

  auto* geometry = app.add_subcommand("geometry", "Points, lines and line families");
  geometry->require_subcommand(1);
  std::int64_t gq = 0;
  bool gincidence = false;
  auto* genum = geometry->add_subcommand("enumerate", "All points and lines");
  genum->add_option("--q", gq, "Field order")->required();
  genum->add_flag("--incidence", gincidence, "Print the incidence matrix");
  auto* gsun = geometry->add_subcommand("sunflower", "Lines through (1,0,0)");
  gsun->add_option("--q", gq, "Field order")->required();
  gsun->add_flag("--incidence", gincidence, "Print the incidence matrix");
  SearchArgs sa;
  auto* gsearch = geometry->add_subcommand("search", "Largest families meeting the condition");
  gsearch->add_option("--q", sa.q, "Field order")->required();
  gsearch->add_option("--delta", sa.delta, "Local distance delta")->required();
  gsearch->add_option("--mode", sa.mode, "Search mode")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  gsearch->add_option("--limit", sa.limit, "Node limit for exhaustive search")
      ->check(CLI::PositiveNumber);
  gsearch->add_flag("--all", sa.all, "List every maximum family through the first line");
  gsearch->add_flag("--maximal", sa.maximal, "List every inclusion-maximal family as well");
  gsearch->add_flag("--incidence", sa.incidence, "Print the best family's incidence matrix");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBad;
  }

  try {
    if (*bounds) return run_bounds(io, ba);
    if (*csun) return run_sunflower_code(io, cq, cdelta, cout_path);
    if (*clines) return run_from_lines(io, lines_path, cdelta, cout_path);
    if (*verify) return run_verify(io, vin, budget, !no_timing);
    if (*genum) return run_enumerate(io, gq, gincidence);
    if (*gsun) return run_geometry_sunflower(io, gq, gincidence);
    if (*gsearch) {
      sa.incidence = sa.incidence || gincidence;
      return run_search(io, sa);
    }
  } catch (const InputError& e) {
    err << "lrc: " << e.what() << "\n";
    return kBad;
  } catch (const FormatError& e) {
    err << "lrc: " << e.what() << "\n";
    return kBad;
  } catch (const std::exception& e) {
    err << "lrc: " << e.what() << "\n";
    return kBad;
  }
  err << "lrc: no command given\n";
  return kBad;
}

}  // namespace lrc::cli
