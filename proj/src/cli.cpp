#include "biquandle/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "biquandle/bridge.hpp"
#include "biquandle/coloring.hpp"
#include "biquandle/enhance.hpp"
#include "biquandle/knot_table.hpp"
#include "biquandle/quiver.hpp"
#include "biquandle/repro.hpp"

namespace biq {
namespace {

using json = nlohmann::json;

/// Malformed command line input that CLI11 itself cannot see (shorthands,
/// file paths, map syntax). Maps to exit_usage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostream& out;
  bool json;

  void emit(const std::string& command, const nlohmann::json& result) const {
    out << nlohmann::json{{"command", command}, {"result", result}}.dump(2) << '\n';
  }
};

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end) throw UsageError(what + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view s, const std::string& what) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    values.push_back(parse_int(s.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

int to_int(std::int64_t v, const std::string& what) {
  if (v < -1'000'000 || v > 1'000'000) throw UsageError(what + ": value out of range");
  return static_cast<int>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

/// knot:NAME, torus2:n, pretzel:t1,t2,..., chain:k, kink[:+|:-], or a file in
/// either the semiarc wire format or a planar diagram code.
SemiarcDiagram resolve_diagram(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "knot") {
    const auto found = find_knot(builtin_knots(), arg);
    if (!found) throw UsageError("unknown knot '" + arg + "' (see `biq knots list`)");
    return found->diagram;
  }
  if (head == "torus2") return torus_2n(to_int(parse_int(arg, spec), spec));
  if (head == "chain") return chain(to_int(parse_int(arg, spec), spec));
  if (head == "pretzel") {
    std::vector<int> twists;
    for (auto t : parse_int_list(arg, spec)) twists.push_back(to_int(t, spec));
    return pretzel(twists);
  }
  if (head == "kink") {
    if (arg.empty() || arg == "+") return kinked_unknot(Sign::positive);
    if (arg == "-") return kinked_unknot(Sign::negative);
    throw UsageError(spec + ": kink sign must be + or -");
  }
  const std::string text = read_file(spec);
  if (text.find_first_of("([") != std::string::npos) return parse_planar_code(text);
  return parse_pd(text);
}

/// dihedral:n (or Rn), linear:n,a,b,c,d, Z, T, example, or a table file.
FiniteBiquandle resolve_algebra(const std::string& spec) {
  if (spec == "Z") return biquandle_z();
  if (spec == "T") return biquandle_t();
  if (spec == "example") return example_biquandle_4();
  if (starts_with(spec, "dihedral:")) return make_dihedral(to_int(parse_int(spec.substr(9), spec), spec)).biquandle();
  if (spec.size() > 1 && spec[0] == 'R' && std::all_of(spec.begin() + 1, spec.end(), ::isdigit))
    return make_dihedral(to_int(parse_int(spec.substr(1), spec), spec)).biquandle();
  if (starts_with(spec, "linear:")) {
    const auto v = parse_int_list(spec.substr(7), spec);
    if (v.size() != 5) throw UsageError(spec + ": expected linear:n,a,b,c,d");
    return make_linear_biquandle(v[0], v[1], v[2], v[3], v[4]);
  }
  return parse_biquandle(read_file(spec));
}

/// mul:a, affine:a,b, or an image array "f(1),f(2),...".
Endomorphism parse_endo(const std::string& spec, int n) {
  if (starts_with(spec, "mul:")) return affine_map(n, parse_int(spec.substr(4), spec), 0);
  if (starts_with(spec, "affine:")) {
    const auto v = parse_int_list(spec.substr(7), spec);
    if (v.size() != 2) throw UsageError(spec + ": expected affine:a,b");
    return affine_map(n, v[0], v[1]);
  }
  Endomorphism f;
  for (auto x : parse_int_list(spec, spec)) {
    if (x < 1 || x > n) throw UsageError(spec + ": image " + std::to_string(x) + " outside 1.." + std::to_string(n));
    f.images.push_back(static_cast<Element>(x));
  }
  if (static_cast<int>(f.images.size()) != n)
    throw UsageError(spec + ": expected " + std::to_string(n) + " images, got " + std::to_string(f.images.size()));
  return f;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json diagram_json(const SemiarcDiagram& d) {
  json xs = json::array();
  for (const auto& x : d.crossings())
    xs.push_back({{"sign", x.sign == Sign::positive ? "+" : "-"},
                  {"under_in", x.under_in},
                  {"over_in", x.over_in},
                  {"under_out", x.under_out},
                  {"over_out", x.over_out}});
  return {{"semiarcs", d.semiarc_count()}, {"free_loops", d.free_loops()}, {"crossings", xs}};
}

json algebra_json(const FiniteBiquandle& b) {
  const auto t = b.tables();
  return {{"size", b.size()}, {"over", t.over}, {"under", t.under}, {"quandle", b.is_quandle()}};
}

json polynomial_json(const ExponentPolynomial& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms.push_back({it->first, it->second});
  return {{"polynomial", p.to_string()}, {"terms", terms}};
}

void emit_diagram(const Output& o, const std::string& command, const SemiarcDiagram& d) {
  if (o.json) o.emit(command, diagram_json(d));
  else o.out << serialize_pd(d);
}

void emit_algebra(const Output& o, const std::string& command, const FiniteBiquandle& b) {
  if (o.json) o.emit(command, algebra_json(b));
  else o.out << serialize_biquandle(b);
}

void emit_polynomial(const Output& o, const std::string& command, const ExponentPolynomial& p) {
  if (o.json) o.emit(command, polynomial_json(p));
  else o.out << p.to_string() << '\n';
}

struct QuiverArgs {
  std::vector<std::string> endos;
  bool all_endos = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--endo", endos, "Endomorphism: mul:a, affine:a,b or f(1),...,f(n)");
    cmd->add_flag("--all-endos", all_endos, "Use every endomorphism of the target");
  }

  std::vector<Endomorphism> resolve(const FiniteBiquandle& y) const {
    if (all_endos && !endos.empty()) throw UsageError("--endo and --all-endos are exclusive");
    if (all_endos) return enumerate_endos(y);
    if (endos.empty()) throw UsageError("quiver needs --endo <map> or --all-endos");
    std::vector<Endomorphism> s;
    for (const auto& e : endos) s.push_back(parse_endo(e, y.size()));
    return s;
  }
};

std::string format_repro_item(const ReproItem& item, bool timing) {
  std::ostringstream s;
  s << '[' << (item.pass ? "PASS" : "FAIL") << "] " << item.id << ' ' << item.claim;
  if (timing) s << " (" << item.seconds << "s)";
  if (item.unattainable) s << " [unattainable]";
  s << "\n       expected: " << item.expected << "\n       computed: " << item.computed << '\n';
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquandle colorings, bridge bounds, coloring quivers and enhancements", "biq"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));

  std::vector<std::pair<CLI::App*, std::function<int(const Output&)>>> actions;
  auto on = [&](CLI::App* cmd, std::function<int(const Output&)> fn) { actions.emplace_back(cmd, std::move(fn)); };

  // algebra ---------------------------------------------------------------
  auto* algebra = app.add_subcommand("algebra", "Finite biquandles")->require_subcommand(1);

  std::string validate_spec;
  bool division = false;
  auto* validate = algebra->add_subcommand("validate", "Check the biquandle axioms");
  validate->add_option("algebra", validate_spec, "Table file or shorthand")->required();
  validate->add_flag("--division", division, "Read the file as printed division tables");
  on(validate, [&](const Output& o) {
    BiquandleTables tables;
    const bool is_file = validate_spec.find(':') == std::string::npos && validate_spec != "Z" &&
                         validate_spec != "T" && validate_spec != "example" &&
                         !(validate_spec.size() > 1 && validate_spec[0] == 'R' &&
                           std::all_of(validate_spec.begin() + 1, validate_spec.end(), ::isdigit));
    if (is_file) {
      tables = parse_biquandle_tables(read_file(validate_spec));
      if (division) tables = operations_from_division(tables);
    } else {
      tables = resolve_algebra(validate_spec).tables();
    }
    const auto report = validate_axioms(tables);
    if (o.json) {
      json violations = json::array();
      for (const auto& v : report.violations)
        violations.push_back({{"axiom", to_string(v.axiom)}, {"witness", v.witness}, {"message", v.message}});
      o.emit("algebra validate", {{"valid", report.ok()}, {"size", tables.over.size()}, {"violations", violations}});
    } else if (report.ok()) {
      o.out << "valid biquandle of order " << tables.over.size() << '\n';
    } else {
      o.out << report.summary() << '\n';
    }
    return report.ok() ? exit_ok : exit_failure;
  });

  std::int64_t dihedral_n = 0;
  auto* dihedral = algebra->add_subcommand("dihedral", "Dihedral quandle R_n");
  dihedral->add_option("n", dihedral_n)->required();
  on(dihedral, [&](const Output& o) {
    emit_algebra(o, "algebra dihedral", make_dihedral(to_int(dihedral_n, "n")).biquandle());
    return exit_ok;
  });

  std::vector<std::int64_t> linear_args;
  auto* linear = algebra->add_subcommand("linear", "Linear biquandle x⊼y = ax+by, x⊻y = cx+dy mod n");
  linear->add_option("form", linear_args, "n a b c d")->required()->expected(5);
  on(linear, [&](const Output& o) {
    const auto& v = linear_args;
    emit_algebra(o, "algebra linear", make_linear_biquandle(v[0], v[1], v[2], v[3], v[4]));
    return exit_ok;
  });

  std::string endos_spec;
  auto* endos = algebra->add_subcommand("endos", "List all endomorphisms as image arrays");
  endos->add_option("algebra", endos_spec)->required();
  on(endos, [&](const Output& o) {
    const auto maps = enumerate_endos(resolve_algebra(endos_spec));
    if (o.json) {
      json list = json::array();
      for (const auto& f : maps) list.push_back(f.images);
      o.emit("algebra endos", list);
    } else {
      for (const auto& f : maps) o.out << join(f.images) << '\n';
    }
    return exit_ok;
  });

  // diagram ---------------------------------------------------------------
  auto* diagram = app.add_subcommand("diagram", "Semiarc diagrams")->require_subcommand(1);
  auto* gen = diagram->add_subcommand("gen", "Generate a family member")->require_subcommand(1);

  std::int64_t torus_n = 0;
  auto* torus2 = gen->add_subcommand("torus2", "Closure of the 2-braid sigma_1^n");
  torus2->add_option("n", torus_n)->required();
  on(torus2, [&](const Output& o) {
    emit_diagram(o, "diagram gen torus2", torus_2n(to_int(torus_n, "n")));
    return exit_ok;
  });

  std::string pretzel_twists;
  auto* pretzel_cmd = gen->add_subcommand("pretzel", "Pretzel link P(t1,t2,...)");
  pretzel_cmd->add_option("twists", pretzel_twists, "Comma-separated twist counts")->required();
  on(pretzel_cmd, [&](const Output& o) {
    std::vector<int> twists;
    for (auto t : parse_int_list(pretzel_twists, "twists")) twists.push_back(to_int(t, "twists"));
    emit_diagram(o, "diagram gen pretzel", pretzel(twists));
    return exit_ok;
  });

  std::int64_t chain_k = 0;
  auto* chain_cmd = gen->add_subcommand("chain", "Closed necklace of k rings");
  chain_cmd->add_option("k", chain_k)->required();
  on(chain_cmd, [&](const Output& o) {
    emit_diagram(o, "diagram gen chain", chain(to_int(chain_k, "k")));
    return exit_ok;
  });

  bool kink_negative = false, kink_over_first = false;
  auto* kink = gen->add_subcommand("kink", "One-crossing unknot");
  kink->add_flag("--negative", kink_negative);
  kink->add_flag("--over-first", kink_over_first, "Traverse the crossing over before under");
  on(kink, [&](const Output& o) {
    emit_diagram(o, "diagram gen kink",
                 kinked_unknot(kink_negative ? Sign::negative : Sign::positive, !kink_over_first));
    return exit_ok;
  });

  std::string sum_a, sum_b;
  std::int64_t sum_sa = 0, sum_sb = 0;
  auto* sum = diagram->add_subcommand("sum", "Connected sum at the given semiarcs");
  sum->add_option("a", sum_a)->required();
  sum->add_option("sa", sum_sa)->required();
  sum->add_option("b", sum_b)->required();
  sum->add_option("sb", sum_sb)->required();
  on(sum, [&](const Output& o) {
    const auto result = connected_sum(resolve_diagram(sum_a), to_int(sum_sa, "sa"), resolve_diagram(sum_b),
                                      to_int(sum_sb, "sb"));
    if (o.json) {
      auto j = diagram_json(result.diagram);
      j["relabel"] = result.relabel;
      o.emit("diagram sum", j);
    } else {
      o.out << serialize_pd(result.diagram);
    }
    return exit_ok;
  });

  std::string diagram_spec;
  auto* dvalidate = diagram->add_subcommand("validate", "Parse and check a diagram");
  dvalidate->add_option("diagram", diagram_spec)->required();
  on(dvalidate, [&](const Output& o) {
    const auto d = resolve_diagram(diagram_spec);
    if (o.json) {
      o.emit("diagram validate", {{"valid", true},
                                  {"semiarcs", d.semiarc_count()},
                                  {"crossings", d.crossing_count()},
                                  {"components", d.component_count()},
                                  {"free_loops", d.free_loops()}});
    } else {
      o.out << "ok: " << d.semiarc_count() << " semiarcs, " << d.crossing_count() << " crossings, "
            << d.component_count() << (d.component_count() == 1 ? " component\n" : " components\n");
    }
    return exit_ok;
  });

  auto* dstrands = diagram->add_subcommand("strands", "Maximal overpasses");
  dstrands->add_option("diagram", diagram_spec)->required();
  on(dstrands, [&](const Output& o) {
    const auto sd = strands(resolve_diagram(diagram_spec));
    if (o.json) {
      json list = json::array();
      for (const auto& s : sd.strands) list.push_back({{"semiarcs", s.semiarcs}, {"closed", s.closed}});
      o.emit("diagram strands", list);
    } else {
      for (std::size_t i = 0; i < sd.strands.size(); ++i)
        o.out << "strand " << i << ": " << join(sd.strands[i].semiarcs) << (sd.strands[i].closed ? " (closed)" : "")
              << '\n';
    }
    return exit_ok;
  });

  // color -----------------------------------------------------------------
  auto* color = app.add_subcommand("color", "Colorings by a finite biquandle")->require_subcommand(1);
  std::string color_diagram, color_algebra, count_method = "enum";

  auto* count = color->add_subcommand("count", "Col_Y(D)");
  count->add_option("diagram", color_diagram)->required();
  count->add_option("algebra", color_algebra)->required();
  count->add_option("--method", count_method, "enum (search) or snf (linear targets only)")
      ->check(CLI::IsMember({"enum", "snf"}));
  on(count, [&](const Output& o) {
    const auto d = resolve_diagram(color_diagram);
    const auto y = resolve_algebra(color_algebra);
    const auto n = count_method == "snf" ? count_colorings_linear(d, y) : count_colorings(d, y);
    if (o.json) o.emit("color count", {{"count", n}, {"method", count_method}});
    else o.out << n << '\n';
    return exit_ok;
  });

  bool list_table = false;
  auto* list = color->add_subcommand("list", "Every coloring, one per line");
  list->add_option("diagram", color_diagram)->required();
  list->add_option("algebra", color_algebra)->required();
  list->add_flag("--table", list_table, "Tab-separated table with a semiarc header");
  on(list, [&](const Output& o) {
    const auto d = resolve_diagram(color_diagram);
    const auto all = enumerate_full_colorings(d, resolve_algebra(color_algebra));
    if (o.json) {
      o.emit("color list", {{"semiarcs", d.semiarc_count()}, {"free_loops", d.free_loops()}, {"colorings", all}});
    } else if (list_table) {
      for (int s = 0; s < d.semiarc_count(); ++s) o.out << (s ? "\t" : "") << 's' << s;
      for (int l = 0; l < d.free_loops(); ++l) o.out << (d.semiarc_count() + l ? "\t" : "") << "loop" << l;
      o.out << '\n';
      for (const auto& c : all) o.out << join(c, "\t") << '\n';
    } else {
      for (const auto& c : all) o.out << join(c) << '\n';
    }
    return exit_ok;
  });

  std::vector<std::int64_t> matrix_form;
  auto* matrix = color->add_subcommand("matrix", "Relation matrix over a linear biquandle");
  matrix->add_option("diagram", color_diagram)->required();
  matrix->add_option("form", matrix_form, "n a b c d")->required()->expected(5);
  on(matrix, [&](const Output& o) {
    const auto& v = matrix_form;
    make_linear_biquandle(v[0], v[1], v[2], v[3], v[4]);  // validates the form
    const auto m = coloring_matrix(resolve_diagram(color_diagram), LinearForm{v[0], v[1], v[2], v[3], v[4]});
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) rows[static_cast<std::size_t>(r)].push_back(m.at(r, c));
    if (o.json) {
      o.emit("color matrix", {{"modulus", m.modulus},
                              {"rows", rows},
                              {"smith_diagonal", smith_diagonal(m)},
                              {"solutions", count_solutions_snf(m)}});
    } else {
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) o.out << (c ? " " : "") << row[c];
        o.out << '\n';
      }
    }
    return exit_ok;
  });

  // bridge ----------------------------------------------------------------
  auto* bridge = app.add_subcommand("bridge", "Seed saturation and counting bounds")->require_subcommand(1);
  std::string bridge_diagram;
  std::int64_t kmax = default_seed_kmax;
  std::string seed_list;
  auto* seeds = bridge->add_subcommand("seeds", "Smallest saturating seed set and its coloring sequence");
  seeds->add_option("diagram", bridge_diagram)->required();
  seeds->add_option("--kmax", kmax, "Largest seed set to try");
  seeds->add_option("--seeds", seed_list, "Saturate these strands instead of searching");
  on(seeds, [&](const Output& o) {
    const auto d = resolve_diagram(bridge_diagram);
    std::optional<SeedSearchResult> found;
    std::vector<int> chosen;
    if (seed_list.empty()) {
      found = min_seed_size(d, to_int(kmax, "--kmax"));
      if (!found) {
        if (o.json) o.emit("bridge seeds", {{"saturated", false}, {"kmax", kmax}});
        else o.out << "no saturating set of at most " << kmax << " strands\n";
        return exit_failure;
      }
      chosen = found->witness;
    } else {
      for (auto s : parse_int_list(seed_list, "--seeds")) chosen.push_back(to_int(s, "--seeds"));
    }
    const auto report = wirtinger_saturate(d, chosen);
    if (o.json) {
      json steps = json::array();
      for (const auto& st : report.sequence)
        steps.push_back({{"crossing", st.crossing}, {"colored", st.colored}, {"from", st.from}, {"token", st.token}});
      json j{{"seeds", report.seeds}, {"saturated", report.saturated}, {"sequence", steps}, {"tokens", report.tokens}};
      if (found) j["min_seed_size"] = found->size;
      if (report.b1_upper) j["b1_upper"] = *report.b1_upper;
      o.emit("bridge seeds", j);
    } else {
      if (found) o.out << "min seed size: " << found->size << '\n';
      o.out << "seeds: " << join(report.seeds) << '\n';
      for (const auto& st : report.sequence)
        o.out << "  crossing " << st.crossing << ": strand " << st.colored << " takes token " << st.token
              << " from strand " << st.from << '\n';
      o.out << "tokens: " << join(report.tokens) << '\n';
      o.out << "saturated: " << (report.saturated ? "yes" : "no") << '\n';
    }
    return report.saturated ? exit_ok : exit_failure;
  });

  std::vector<std::string> lower_algs;
  std::string lower_mode = "b2";
  auto* lower = bridge->add_subcommand("lower", "Counting lower bound from coloring counts");
  lower->add_option("diagram", bridge_diagram)->required();
  lower->add_option("--alg", lower_algs, "Target algebra (repeatable)")->required();
  lower->add_option("--mode", lower_mode, "b1 needs quandle targets")->check(CLI::IsMember({"b1", "b2"}));
  on(lower, [&](const Output& o) {
    const auto d = resolve_diagram(bridge_diagram);
    std::vector<std::pair<Quandle, std::uint64_t>> quandles;
    std::vector<std::pair<FiniteBiquandle, std::uint64_t>> biquandles;
    json counts = json::array();
    for (const auto& spec : lower_algs) {
      auto y = resolve_algebra(spec);
      const auto n = count_colorings(d, y);
      counts.push_back({{"algebra", spec}, {"size", y.size()}, {"count", n}});
      if (lower_mode == "b1") quandles.emplace_back(Quandle(y), n);
      else biquandles.emplace_back(std::move(y), n);
    }
    const int bound = lower_mode == "b1" ? b1_lower(quandles) : b2_lower(biquandles);
    if (o.json) {
      o.emit("bridge lower", {{"mode", lower_mode}, {"bound", bound}, {"counts", counts}});
    } else {
      for (const auto& c : counts)
        o.out << c["algebra"].get<std::string>() << ": " << c["count"].get<std::uint64_t>() << '\n';
      o.out << lower_mode << " >= " << bound << '\n';
    }
    return exit_ok;
  });

  // quiver ----------------------------------------------------------------
  auto* quiver = app.add_subcommand("quiver", "Coloring quivers")->require_subcommand(1);
  std::string quiver_diagram, quiver_diagram_b, quiver_algebra;
  QuiverArgs qargs;

  auto* qbuild = quiver->add_subcommand("build", "Vertices and edges of the quiver");
  qbuild->add_option("diagram", quiver_diagram)->required();
  qbuild->add_option("algebra", quiver_algebra)->required();
  qargs.attach(qbuild);
  on(qbuild, [&](const Output& o) {
    const auto y = resolve_algebra(quiver_algebra);
    const auto q = build_quiver(resolve_diagram(quiver_diagram), y, qargs.resolve(y));
    if (o.json) {
      json edges = json::array();
      for (const auto& e : q.edges) edges.push_back({e.source, e.target, e.endo});
      json maps = json::array();
      for (const auto& f : q.endos) maps.push_back(f.images);
      o.emit("quiver build", {{"vertices", q.vertices}, {"edges", edges}, {"endos", maps}});
    } else {
      for (std::size_t i = 0; i < q.endos.size(); ++i) o.out << "endo " << i << ": " << join(q.endos[i].images) << '\n';
      for (std::size_t v = 0; v < q.vertices.size(); ++v) o.out << "vertex " << v << ": " << join(q.vertices[v]) << '\n';
      for (const auto& e : q.edges) o.out << "edge " << e.source << " -> " << e.target << " [" << e.endo << "]\n";
    }
    return exit_ok;
  });

  auto* qindeg = quiver->add_subcommand("indeg", "In-degree polynomial");
  qindeg->add_option("diagram", quiver_diagram)->required();
  qindeg->add_option("algebra", quiver_algebra)->required();
  qargs.attach(qindeg);
  on(qindeg, [&](const Output& o) {
    const auto y = resolve_algebra(quiver_algebra);
    emit_polynomial(o, "quiver indeg",
                    in_degree_polynomial(build_quiver(resolve_diagram(quiver_diagram), y, qargs.resolve(y))));
    return exit_ok;
  });

  auto* qiso = quiver->add_subcommand("iso", "Compare the quivers of two diagrams");
  qiso->add_option("a", quiver_diagram)->required();
  qiso->add_option("b", quiver_diagram_b)->required();
  qiso->add_option("algebra", quiver_algebra)->required();
  qargs.attach(qiso);
  on(qiso, [&](const Output& o) {
    const auto y = resolve_algebra(quiver_algebra);
    const auto s = qargs.resolve(y);
    const auto qa = build_quiver(resolve_diagram(quiver_diagram), y, s);
    const auto qb = build_quiver(resolve_diagram(quiver_diagram_b), y, s);
    const bool iso = quivers_isomorphic(qa, qb);
    if (o.json) {
      o.emit("quiver iso", {{"isomorphic", iso},
                            {"indeg_a", polynomial_json(in_degree_polynomial(qa))},
                            {"indeg_b", polynomial_json(in_degree_polynomial(qb))}});
    } else {
      o.out << (iso ? "isomorphic" : "not isomorphic") << '\n';
    }
    return exit_ok;
  });

  // enhance ---------------------------------------------------------------
  auto* enhance = app.add_subcommand("enhance", "Coloring enhancements")->require_subcommand(1);
  std::string enhance_diagram, enhance_quandle;
  auto* colgroup = enhance->add_subcommand("colgroup", "Column group polynomial over a quandle");
  colgroup->add_option("diagram", enhance_diagram)->required();
  colgroup->add_option("quandle", enhance_quandle)->required();
  on(colgroup, [&](const Output& o) {
    const Quandle q(resolve_algebra(enhance_quandle));
    emit_polynomial(o, "enhance colgroup", column_group_polynomial(resolve_diagram(enhance_diagram), q));
    return exit_ok;
  });

  // repro -----------------------------------------------------------------
  bool repro_all = false, repro_timing = false;
  std::vector<int> repro_items;
  int repro_threads = threads_from_env();
  auto* repro = app.add_subcommand("repro", "Run the acceptance claims");
  repro->add_flag("--all", repro_all, "Every claim");
  repro->add_option("--item", repro_items, "Claim id (repeatable)")->check(CLI::Range(1, repro_item_count));
  repro->add_option("--threads", repro_threads, "Worker threads (default $BIQ_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  repro->add_flag("--timing", repro_timing, "Show per-claim wall time");
  on(repro, [&](const Output& o) {
    if (repro_all == !repro_items.empty()) throw UsageError("repro needs exactly one of --all or --item");
    const auto report = run_repro(repro_items, repro_threads);
    if (o.json) {
      json items = json::array();
      for (const auto& it : report.items) {
        json j{{"id", it.id},
               {"claim", it.claim},
               {"expected", it.expected},
               {"computed", it.computed},
               {"pass", it.pass},
               {"unattainable", it.unattainable}};
        if (repro_timing) j["seconds"] = it.seconds;
        items.push_back(j);
      }
      o.emit("repro", {{"items", items},
                       {"failures", report.failures()},
                       {"unexpected_failures", report.unexpected_failures()}});
    } else {
      for (const auto& it : report.items) o.out << format_repro_item(it, repro_timing);
      o.out << report.items.size() - static_cast<std::size_t>(report.failures()) << '/' << report.items.size()
            << " passed, " << report.failures() - report.unexpected_failures() << " unattainable\n";
    }
    return report.unexpected_failures() == 0 ? exit_ok : exit_failure;
  });

  // knots -----------------------------------------------------------------
  auto* knots = app.add_subcommand("knots", "Built-in knot table")->require_subcommand(1);
  auto* klist = knots->add_subcommand("list", "Names, sizes and determinants");
  on(klist, [&](const Output& o) {
    json list = json::array();
    for (const auto& k : builtin_knots()) {
      json j{{"name", k.name}, {"semiarcs", k.diagram.semiarc_count()}, {"crossings", k.diagram.crossing_count()}};
      if (k.determinant) j["determinant"] = *k.determinant;
      list.push_back(j);
      if (!o.json) {
        o.out << k.name << '\t' << k.diagram.crossing_count() << " crossings";
        if (k.determinant) o.out << "\tdet " << *k.determinant;
        o.out << '\n';
      }
    }
    if (o.json) o.emit("knots list", list);
    return exit_ok;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  const Output o{out, format == "json"};
  for (auto& [cmd, fn] : actions) {
    if (!cmd->parsed()) continue;
    try {
      return fn(o);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    } catch (const Error& e) {
      err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
      return exit_failure;
    }
  }
  err << "usage error: incomplete command\n";
  return exit_usage;
}

}  // namespace biq
