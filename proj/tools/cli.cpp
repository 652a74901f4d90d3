#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wld/arrows.hpp"
#include "wld/classify.hpp"
#include "wld/corpus.hpp"
#include "wld/invariants.hpp"
#include "wld/moves.hpp"

namespace wld::cli {

namespace {

using nlohmann::json;

// Raised for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for inputs that cannot be read or parsed.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_arrow_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return line.compare(b, 6, "arrows") == 0;
  }
  return false;
}

template <typename F>
auto parse_input(const std::string& source, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(source + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  }
}

// A diagram from a path or "example:NAME". Arrow presentations are accepted
// and converted by surgery.
Diagram load_diagram(const std::string& source) {
  if (source.starts_with("example:")) return named(source.substr(8));
  const std::string text = read_file(source);
  if (is_arrow_text(text)) return surgery(parse_input(source, text, parse_arrows));
  return parse_input(source, text, parse_diagram);
}

WArrowPresentation load_presentation(const std::string& source) {
  if (source.starts_with("example:")) return to_arrows(named(source.substr(8)));
  const std::string text = read_file(source);
  if (is_arrow_text(text)) return parse_input(source, text, parse_arrows);
  return to_arrows(parse_input(source, text, parse_diagram));
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json matrix_json(const std::vector<std::vector<long long>>& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

json lattice_json(const CyclicLattice& l) {
  json rows = json::array();
  for (std::size_t r = 0; r < l.basis.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < l.basis.cols(); ++c) row.push_back(integer_json(l.basis(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json abelianization_json(const Abelianization& a) {
  json t = json::array();
  for (const auto& f : a.torsion) t.push_back(integer_json(f));
  return {{"free_rank", a.free_rank}, {"torsion", t}};
}

std::string abelianization_text(const Abelianization& a) {
  std::string s = "Z^" + std::to_string(a.free_rank);
  for (const auto& f : a.torsion) s += " + Z/" + f.get_str();
  return s;
}

json verdict_json(const EquivalenceVerdict& v) {
  json j = {{"relation", to_string(v.relation)},
            {"n", v.n},
            {"verdict", to_string(v.verdict)},
            {"mu", {v.mu_left, v.mu_right}}};
  json rs = json::array();
  for (const auto& r : v.residues) rs.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"left", r.left}, {"right", r.right}});
  j["residues"] = rs;
  if (v.permutation) {
    json p = json::array();
    for (int x : *v.permutation) p.push_back(x + 1);
    j["permutation"] = p;
  }
  if (v.obstruction_k) j["obstruction_k"] = *v.obstruction_k;
  if (v.lattices) j["lattices"] = {{"left", lattice_json(v.lattices->first)}, {"right", lattice_json(v.lattices->second)}};
  return j;
}

void verdict_text(std::ostream& out, const EquivalenceVerdict& v) {
  out << to_string(v.verdict) << " (" << to_string(v.relation) << ", n=" << v.n << ")\n";
  if (v.mu_left != v.mu_right) out << "component counts differ: " << v.mu_left << " vs " << v.mu_right << "\n";
  for (const auto& r : v.residues)
    out << "  (" << r.i + 1 << "," << r.j + 1 << "): " << r.left << " vs " << r.right << "\n";
  if (v.permutation) {
    out << "  right components matched as";
    for (int x : *v.permutation) out << " " << x + 1;
    out << "\n";
  }
  if (v.obstruction_k) {
    out << "  elementary ideals differ at k=" << *v.obstruction_k << " modulo 1 - t^" << v.n << "\n";
    out << "  left lattice:\n" << to_string(v.lattices->first.basis) << "\n";
    out << "  right lattice:\n" << to_string(v.lattices->second.basis) << "\n";
  }
}

FiniteGroupTable load_group(const std::string& spec) {
  if (spec.starts_with("table:")) {
    const std::string path = spec.substr(6);
    return parse_group_csv(read_file(path), path);
  }
  return builtin_group(spec);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + tok + "' in --m");
    }
    if (used != tok.size()) throw UsageError("bad integer '" + tok + "' in --m");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--m needs at least one integer");
  return out;
}

struct Options {
  bool json_out = false;
  std::vector<std::string> inputs;
  std::optional<int> n;
  int kmax = 3;
  std::string relation = "vn";
  std::string m;
  std::string moves;
  int steps = 0;
  std::optional<std::uint64_t> seed;
  std::string group;
  bool core = false;
  bool any_order = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_invariants(const Options& o, std::ostream& out) {
  const Diagram d = load_diagram(o.inputs.at(0));
  const auto lam = linking_matrix(d);
  const auto wg = welded_group(d);
  const auto cg = core_group(d);
  std::map<int, LaurentPolynomial> alex;
  for (int k = 0; k <= o.kmax; ++k) alex[k] = alexander(d, k).polynomial;
  std::map<int, Integer> colorings;
  for (int n = 2; n <= 7; ++n) colorings[n] = coloring_count(d, n);
  if (o.json_out) {
    json j;
    j["kind"] = d.is_string_link() ? "stringlink" : "link";
    j["components"] = d.mu();
    j["crossings"] = d.crossing_count();
    j["arcs"] = wg.generators;
    j["linking"] = matrix_json(lam);
    json a = json::object();
    for (const auto& [k, p] : alex) a[std::to_string(k)] = to_string(p);
    j["alexander"] = a;
    j["group_abelianization"] = abelianization_json(abelianization(wg));
    j["core_abelianization"] = abelianization_json(abelianization(cg));
    json c = json::object();
    for (const auto& [n, v] : colorings) c[std::to_string(n)] = integer_json(v);
    j["colorings"] = c;
    emit(out, j);
    return ok;
  }
  out << (d.is_string_link() ? "string link" : "link") << ": " << d.mu() << " component(s), " << d.crossing_count()
      << " crossing(s), " << wg.generators << " arc(s)\n";
  out << "linking numbers:\n";
  for (const auto& row : lam) {
    out << " ";
    for (long long v : row) out << " " << v;
    out << "\n";
  }
  for (const auto& [k, p] : alex) out << "alexander " << k << ": " << to_string(p) << "\n";
  out << "group abelianization: " << abelianization_text(abelianization(wg)) << "\n";
  out << "core group abelianization: " << abelianization_text(abelianization(cg)) << "\n";
  out << "colorings:";
  for (const auto& [n, v] : colorings) out << " " << n << ":" << v.get_str();
  out << "\n";
  return ok;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("equiv needs --n");
  if (o.relation != "vn" && o.relation != "vn-uc") throw UsageError("--relation must be vn or vn-uc");
  const Diagram a = load_diagram(o.inputs.at(0)), b = load_diagram(o.inputs.at(1));
  const auto v = o.relation == "vn" ? decide_vn(a, b, *o.n, o.any_order) : decide_vn_uc(a, b, *o.n, o.any_order);
  if (o.json_out)
    emit(out, verdict_json(v));
  else
    verdict_text(out, v);
  return ok;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("obstruct needs --n");
  const Diagram a = load_diagram(o.inputs.at(0)), b = load_diagram(o.inputs.at(1));
  const auto v = obstruct_vn(a, b, *o.n, o.kmax);
  if (o.json_out) {
    json j = verdict_json(v);
    j["kmax"] = o.kmax;
    j.erase("residues");
    emit(out, j);
  } else {
    verdict_text(out, v);
    if (!v.obstruction_k) out << "  elementary ideals agree modulo 1 - t^" << v.n << " for k <= " << o.kmax << "\n";
  }
  return ok;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("normal-form needs --n");
  if (o.relation != "vn" && o.relation != "vn-uc") throw UsageError("--relation must be vn or vn-uc");
  if (o.relation == "vn" && *o.n % 2 == 0) throw UsageError("normal-form --relation vn needs odd --n");
  const WArrowPresentation p = load_presentation(o.inputs.at(0));
  const int mu = p.base.mu();
  ResidueMatrix a, b;
  WArrowPresentation nf;
  if (o.relation == "vn") {
    a = normalize_vn(p, *o.n);
    nf = vn_normal_form(mu, a);
  } else {
    std::tie(a, b) = normalize_vn_uc(p, *o.n);
    nf = vn_uc_normal_form(mu, a, b);
  }
  if (o.json_out) {
    json j = {{"relation", o.relation}, {"n", *o.n}, {"a", matrix_json(a)}, {"presentation", serialize(nf)}};
    if (o.relation == "vn-uc") j["b"] = matrix_json(b);
    emit(out, j);
    return ok;
  }
  out << "a:\n";
  for (const auto& row : a) {
    out << " ";
    for (long long v : row) out << " " << v;
    out << "\n";
  }
  if (o.relation == "vn-uc") {
    out << "b:\n";
    for (const auto& row : b) {
      out << " ";
      for (long long v : row) out << " " << v;
      out << "\n";
    }
  }
  out << serialize(nf) << "\n";
  return ok;
}

int cmd_multiplex(const Options& o, std::ostream& out) {
  if (o.m.empty()) throw UsageError("multiplex needs --m");
  const Diagram d = load_diagram(o.inputs.at(0));
  const auto m = parse_int_list(o.m);
  if (static_cast<int>(m.size()) != d.mu())
    throw UsageError("--m has " + std::to_string(m.size()) + " entries for " + std::to_string(d.mu()) + " components");
  const Diagram r = multiplex(d, m);
  if (o.json_out)
    emit(out, {{"diagram", serialize(r)}, {"crossings", r.crossing_count()}});
  else
    out << serialize(r) << "\n";
  return ok;
}

std::vector<MoveKind> move_kinds(const std::string& csv) {
  try {
    return parse_move_list(csv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_scramble(const Options& o, std::ostream& out) {
  if (!o.seed) throw UsageError("scramble needs an explicit --seed");
  if (o.steps < 0) throw UsageError("--steps must be non-negative");
  const auto kinds = move_kinds(o.moves);
  if (kinds.empty() && o.steps > 0) throw UsageError("scramble needs --moves");
  const Diagram d = load_diagram(o.inputs.at(0));
  const Diagram r = scramble(d, kinds, o.steps, *o.seed);
  if (o.json_out)
    emit(out, {{"diagram", serialize(r)}, {"steps", o.steps}, {"seed", *o.seed}, {"crossings", r.crossing_count()}});
  else
    out << serialize(r) << "\n";
  return ok;
}

int cmd_moves(const Options& o, std::ostream& out) {
  const auto kinds = move_kinds(o.moves.empty() ? "r1,r2,r3,oc,uc,v" : o.moves);
  const Diagram d = load_diagram(o.inputs.at(0));
  json j = json::object();
  for (const auto& k : kinds) {
    // expansion sites are parameter grids; list reductions and swaps only
    if (k.direction == Direction::expand && !is_self_inverse(k.type)) continue;
    const auto sites = find_sites(d, k);
    json list = json::array();
    for (const auto& s : sites) list.push_back(to_string(s));
    if (o.json_out) {
      j[family_name(k.type, k.n)] = list;
    } else {
      out << family_name(k.type, k.n) << ": " << sites.size() << " site(s)\n";
      for (const auto& s : sites) out << "  " << to_string(s) << "\n";
    }
  }
  if (o.json_out) emit(out, j);
  return ok;
}

int cmd_homs(const Options& o, std::ostream& out) {
  if (o.group.empty()) throw UsageError("homs needs --group");
  const FiniteGroupTable g = load_group(o.group);
  const Diagram d = load_diagram(o.inputs.at(0));
  const Integer count = hom_count(o.core ? core_group(d) : welded_group(d), g);
  if (o.json_out)
    emit(out, {{"group", g.name()}, {"order", g.order()}, {"presentation", o.core ? "core" : "group"},
               {"count", integer_json(count)}});
  else
    out << count.get_str() << "\n";
  return ok;
}

int cmd_colorings(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("colorings needs --n");
  if (*o.n < 1) throw UsageError("--n must be positive");
  const Diagram d = load_diagram(o.inputs.at(0));
  const Integer count = coloring_count(d, *o.n);
  if (o.json_out)
    emit(out, {{"n", *o.n}, {"count", integer_json(count)}});
  else
    out << count.get_str() << "\n";
  return ok;
}

int cmd_examples(const Options& o, std::ostream& out) {
  if (!o.inputs.empty()) {
    const Diagram d = named(o.inputs[0]);
    if (o.json_out)
      emit(out, {{"name", o.inputs[0]}, {"diagram", serialize(d)}});
    else
      out << serialize(d) << "\n";
    return ok;
  }
  if (o.json_out) {
    emit(out, corpus_names());
  } else {
    for (const auto& n : corpus_names()) out << n << "\n";
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Welded link invariants and generalized virtualization moves", "wld"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", o.json_out, "Emit a single JSON document"); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Move parameter / modulus")->check(CLI::PositiveNumber); };
  auto add_kmax = [&](CLI::App* sub) {
    sub->add_option("--kmax", o.kmax, "Largest elementary ideal index (default 3)")->check(CLI::NonNegativeNumber);
  };
  auto add_relation = [&](CLI::App* sub) {
    sub->add_option("--relation", o.relation, "vn or vn-uc")->check(CLI::IsMember({"vn", "vn-uc"}));
  };
  const std::string input_help = "Diagram file or example:NAME";

  auto* inv = app.add_subcommand("invariants", "Linking numbers, Alexander polynomials, abelianizations, colorings");
  inv->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(inv);
  add_kmax(inv);

  auto* eq = app.add_subcommand("equiv",
                               "Decide V(n) (vn) or V^n+UC (vn-uc) equivalence. For odd n, links with different "
                               "component counts are reported inequivalent.");
  eq->add_option("inputs", o.inputs, input_help)->required()->expected(2);
  add_common(eq);
  add_n(eq);
  add_relation(eq);
  eq->add_flag("--any-order", o.any_order, "Allow the second link's components to be reordered");

  auto* ob = app.add_subcommand("obstruct", "Search for an Alexander-ideal obstruction to V^n equivalence");
  ob->add_option("inputs", o.inputs, input_help)->required()->expected(2);
  add_common(ob);
  add_n(ob);
  add_kmax(ob);

  auto* nf = app.add_subcommand("normal-form", "Normal-form parameters of a string link or arrow presentation");
  nf->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(nf);
  add_n(nf);
  add_relation(nf);

  auto* mx = app.add_subcommand("multiplex", "Multiplex every crossing by its over-component weight");
  mx->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(mx);
  mx->add_option("--m", o.m, "Comma-separated weights, one per component");

  auto* sc = app.add_subcommand("scramble", "Apply random moves");
  sc->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(sc);
  sc->add_option("--moves", o.moves, "Comma-separated move kinds");
  sc->add_option("--steps", o.steps, "Number of moves");
  sc->add_option("--seed", o.seed, "Random seed");

  auto* mv = app.add_subcommand("moves", "List reduction and exchange sites");
  mv->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(mv);
  mv->add_option("--moves", o.moves, "Comma-separated move kinds");

  auto* hm = app.add_subcommand("homs", "Count homomorphisms to a finite group");
  hm->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(hm);
  hm->add_option("--group", o.group, "Group name (z2..z12, d3..d8, s3, s4, q8) or table:PATH");
  hm->add_flag("--core", o.core, "Use the core group instead of the link group");

  auto* co = app.add_subcommand("colorings", "Count Z/n colorings");
  co->add_option("input", o.inputs, input_help)->required()->expected(1);
  add_common(co);
  add_n(co);

  auto* ex = app.add_subcommand("examples", "List the example corpus or print one example");
  ex->add_option("name", o.inputs, "Example name")->expected(0, 1);
  add_common(ex);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "error: " << e.what() << "\n";
    if (sub != &app) err << "run 'wld " << sub->get_name() << " --help' for usage\n";
    return usage_error;
  }
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "invariants") return cmd_invariants(o, out);
    if (name == "equiv") return cmd_equiv(o, out);
    if (name == "obstruct") return cmd_obstruct(o, out);
    if (name == "normal-form") return cmd_normal_form(o, out);
    if (name == "multiplex") return cmd_multiplex(o, out);
    if (name == "scramble") return cmd_scramble(o, out);
    if (name == "moves") return cmd_moves(o, out);
    if (name == "homs") return cmd_homs(o, out);
    if (name == "colorings") return cmd_colorings(o, out);
    if (name == "examples") return cmd_examples(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  }
  return usage_error;
}

}  // namespace wld::cli
