#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

using namespace polystab;
using report::json;

namespace {

constexpr int kUsage = 64;
constexpr int kDomain = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<PR> parse_list(const std::string& s) {
  std::vector<PR> out;
  for (const auto& t : split(s, ',')) out.push_back(PR::parse(t));
  return out;
}

json load_json(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

int worker_count() {
  if (const char* w = std::getenv("POLYSTAB_WORKERS")) {
    int v = std::atoi(w);
    if (v > 0) return v;
  }
  return 1;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Flags shared by commands that build a regime from (x, a, b).
struct RegimeArgs {
  std::string x, a, b;
  int n = 3;
  std::optional<int> d;
  std::string eps;
  bool no_closure = false;
  std::string config;

  void add(CLI::App* c, bool need_xab = true) {
    auto* ox = c->add_option("--x", x, "source capacity x");
    auto* oa = c->add_option("--a", a, "target capacity a");
    auto* ob = c->add_option("--b", b, "target capacity b");
    if (need_xab) {
      ox->required();
      oa->required();
      ob->required();
    }
    c->add_option("--n", n, "complex dimension")->capture_default_str();
    c->add_option("--d", d, "override the degree d");
    c->add_option("--eps", eps, "override epsilon");
    c->add_flag("--no-closure", no_closure, "drop the area-closure constraint when choosing d");
    c->add_option("--config", config, "JSON file (or inline object) with regime overrides");
  }

  Regime select() const {
    RegimeKnobs k;
    if (!config.empty()) report::apply_knobs(load_json(config), k);
    if (d) k.d = d;
    if (!eps.empty()) k.eps = PR::parse(eps);
    if (no_closure) k.area_closure = false;
    return select_regime(n, PR::parse(x), PR::parse(a), PR::parse(b), k);
  }
};

json trace_ledger(const Regime& reg) {
  json out = json::array();
  for (const auto& p : admissible_planes(reg)) {
    auto c = classify_component(p, reg);
    json row = report::to_json(p, reg);
    row["admissible"] = c.admissible;
    row["reasons"] = c.reasons;
    out.push_back(row);
  }
  return out;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> selftest_checks() {
  std::vector<Check> out;
  RegimeKnobs open;
  open.area_closure = false;
  struct Case {
    const char *x, *a, *b;
    std::optional<int> d;
  };
  for (const Case& c : {Case{"5/2", "1", "2", {}}, Case{"3", "1", "5/2", {}}, Case{"3", "3/2", "5/2", 3},
                        Case{"3", "3/2", "3", 3}, Case{"7/3", "5/4", "2", {}}}) {
    RegimeKnobs k = open;
    k.d = c.d;
    Regime reg = select_regime(3, PR::parse(c.x), PR::parse(c.a), PR::parse(c.b), k);
    auto bounds = default_bounds(reg);
    auto pruned = enumerate_configurations(reg, bounds);
    auto raw = enumerate_unpruned(reg, bounds);
    std::string tag = std::string("x=") + c.x + " a=" + c.a + " b=" + c.b + " d=" + std::to_string(reg.d);
    out.push_back({"oracle " + tag, pruned == raw,
                   std::to_string(pruned.size()) + " pruned vs " + std::to_string(raw.size()) + " raw"});
    bool conserved = true;
    for (const auto& cfg : pruned) {
      PR total = special_curve_area(cfg, reg);
      for (const auto& p : cfg.planes) total += curve_area(p, reg);
      conserved = conserved && total == parent_area(reg);
    }
    out.push_back({"conservation " + tag, conserved, ""});
  }
  Regime ref = select_regime(3, PR(3), PR::parse("3/2"), PR::parse("5/2"));
  auto rep = contradiction_check(ref);
  out.push_back({"reference contradiction", rep.contradiction && rep.margin.sign() < 0, rep.basis});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"Exact obstruction calculator for stabilized polydisc embeddings", "polystab"};
  app.require_subcommand(1);
  json out = report::envelope(args);
  int code = 0;

  // decide
  auto* decide = app.add_subcommand("decide", "embedding verdict for P(1,x) into P(a,b)");
  std::string dx, da, db, mode = "stabilized";
  int dim = 3;
  bool cross = false;
  decide->add_option("--x", dx)->required();
  decide->add_option("--a", da)->required();
  decide->add_option("--b", db)->required();
  decide->add_option("--dim", dim, "complex dimension n")->capture_default_str();
  decide->add_option("--mode", mode)->check(CLI::IsMember({"stabilized", "4d"}))->capture_default_str();
  decide->add_flag("--cross-check", cross, "also run the moduli engine on obstruction instances");
  decide->callback([&] {
    PR x = PR::parse(dx), a = PR::parse(da), b = PR::parse(db);
    Verdict v;
    if (mode == "4d") {
      v = decide_4d(x, a, b);
    } else {
      DecideOptions opt;
      opt.cross_check = cross;
      opt.workers = worker_count();
      v = decide_stabilized(x, a, b, dim, opt);
    }
    out["result"] = report::to_json(v);
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "tabulate the embedding function f(x,a) as CSV");
  std::string grid, sweep_out = "-";
  sweep->add_option("--grid", grid, "x=lo:hi:count,a=lo:hi:count")->required();
  sweep->add_option("--out", sweep_out, "output file, - for stdout")->capture_default_str();
  sweep->callback([&] {
    std::vector<PR> xs, as;
    for (const auto& part : split(grid, ',')) {
      auto eq = part.find('=');
      auto r = split(eq == std::string::npos ? "" : part.substr(eq + 1), ':');
      if (r.size() != 3) throw Error(ErrorCode::ParseError, "grid axis must be name=lo:hi:count");
      PR lo = PR::parse(r[0]), hi = PR::parse(r[1]);
      int count = std::stoi(r[2]);
      if (count < 1) throw Error(ErrorCode::ParseError, "grid count must be positive");
      auto& dst = part.substr(0, eq) == "x" ? xs : as;
      for (int i = 0; i < count; ++i) dst.push_back(count == 1 ? lo : lo + (hi - lo) * PR(i) / PR(count - 1));
    }
    if (xs.empty() || as.empty()) throw Error(ErrorCode::ParseError, "grid needs both x and a axes");
    std::ostringstream csv;
    csv << "x,a,f_lower,f_upper,reason\n";
    for (const auto& x : xs)
      for (const auto& a : as) {
        auto f = embedding_function(x, a);
        csv << x << ',' << a << ',' << f.lower << ',' << (f.upper ? f.upper->str() : "unknown") << ','
            << (f.reason ? to_string(*f.reason) : "") << '\n';
      }
    if (sweep_out == "-") {
      std::cout << csv.str();
    } else {
      std::ofstream(sweep_out) << csv.str();
    }
    out = json();
  });

  // regime
  auto* regime = app.add_subcommand("regime", "regime parameters");
  regime->require_subcommand(1);
  auto* rselect = regime->add_subcommand("select", "choose d, eps, delta, S for (x, a, b)");
  RegimeArgs rsel;
  rsel.add(rselect);
  rselect->callback([&] { out["regime"] = report::to_json(rsel.select()); });
  auto* rshow = regime->add_subcommand("show", "validate a fully specified regime");
  std::string rshow_spec;
  rshow->add_option("--regime", rshow_spec, "regime JSON file or inline object")->required();
  rshow->callback([&] {
    Regime reg = report::regime_from_json(load_json(rshow_spec));
    out["regime"] = report::to_json(reg);
    auto v = regime_violations(reg);
    out["result"] = json{{"valid", v.empty()}, {"violations", v}};
  });

  // reeb
  auto* reeb = app.add_subcommand("reeb", "Reeb orbit tables");
  reeb->require_subcommand(1);
  auto* orbits = reeb->add_subcommand("orbits", "orbits of an ellipsoid boundary");
  std::string domain;
  int max_cover = 1;
  orbits->add_option("--domain", domain, "E:c1,c2,... (ellipsoid capacities)")->required();
  orbits->add_option("--max-cover", max_cover)->capture_default_str();
  orbits->callback([&] {
    if (domain.rfind("E:", 0) != 0) throw Error(ErrorCode::ParseError, "domain must start with E:");
    Ellipsoid e(parse_list(domain.substr(2)));
    json table = json::array();
    for (const auto& o : ellipsoid_orbits(e))
      for (int r = 1; r <= max_cover; ++r)
        table.push_back(json{{"axis", o.orbit.axis},
                             {"cover", r},
                             {"period", report::to_json(PR(r) * o.period)},
                             {"cz", cz_ellipsoid_cover(e, o.orbit.axis, r)}});
    out["result"] = json{{"orbits", table}, {"monodromy", report::to_json(monodromy_angle(e))}};
  });

  // index
  auto* index = app.add_subcommand("index", "Conley-Zehnder and Fredholm indices");
  index->require_subcommand(1);
  auto* icz = index->add_subcommand("cz", "CZ index of one orbit");
  std::string iell, itorus;
  int iaxis = 1, icover = 1, in = 3;
  icz->add_option("--ellipsoid", iell, "comma-separated capacities");
  icz->add_option("--axis", iaxis)->capture_default_str();
  icz->add_option("--cover", icover)->capture_default_str();
  icz->add_option("--torus", itorus, "comma-separated class k,l,m...");
  icz->add_option("--n", in, "dimension for torus classes")->capture_default_str();
  icz->callback([&] {
    if (iell.empty() == itorus.empty()) throw CLI::ValidationError("give exactly one of --ellipsoid, --torus");
    if (!iell.empty()) {
      Ellipsoid e(parse_list(iell));
      out["result"] = json{{"cz", cz_ellipsoid_cover(e, iaxis, icover)}};
    } else {
      std::vector<std::int64_t> v;
      for (const auto& t : split(itorus, ',')) v.push_back(std::stoll(t));
      auto c = OrbitClass::torus(v);
      out["result"] = json{{"cz", cz_torus_class(c, in).str()}, {"cz_minus_halfdim", cz_minus_halfdim(c, in)}};
    }
  });
  auto* ifred = index->add_subcommand("fredholm", "Fredholm index of a curve");
  std::string ispec;
  ifred->add_option("--spec", ispec, "curve JSON file or inline object")->required();
  ifred->callback([&] { out["result"] = json{{"index", fredholm_index(report::curve_from_json(load_json(ispec))).str()}}; });
  auto* ibuild = index->add_subcommand("building", "index of a holomorphic building");
  std::string bspec;
  ibuild->add_option("--spec", bspec, "building JSON file or inline object")->required();
  ibuild->callback([&] { out["result"] = json{{"index", building_index(report::building_from_json(load_json(bspec))).str()}}; });

  // obstruct
  auto* obstruct = app.add_subcommand("obstruct", "run the neck-stretching contradiction");
  obstruct->require_subcommand(1);
  auto* orun = obstruct->add_subcommand("run", "enumerate limit configurations and check areas");
  RegimeArgs oargs;
  bool otrace = false;
  oargs.add(orun);
  orun->add_flag("--trace", otrace, "include the per-plane constraint ledger");
  orun->callback([&] {
    Regime reg = oargs.select();
    out["regime"] = report::to_json(reg);
    auto bounds = default_bounds(reg);
    EnumerationStats stats;
    auto configs = enumerate_configurations(reg, bounds, worker_count(), &stats);
    json result;
    result["bounds"] = json{{"k_max", bounds.k_max}, {"l_max", bounds.l_max}, {"M_max", bounds.M_max}};
    result["candidates"] = stats.candidates;
    result["configurations"] = json::array();
    for (const auto& c : configs) result["configurations"].push_back(report::to_json(c, reg));
    if (otrace) result["trace"] = trace_ledger(reg);
    out["result"] = result;
    out["result"]["report"] = report::to_json(contradiction_check(reg, configs), reg);
  });

  // selftest
  auto* self = app.add_subcommand("selftest", "pruned vs brute-force enumeration and area conservation");
  self->callback([&] {
    json checks = json::array();
    bool all = true;
    for (const auto& c : selftest_checks()) {
      checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      all = all && c.pass;
    }
    out["result"] = json{{"checks", checks}, {"pass", all}};
    if (!all) code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    out["error"] = json{{"code", to_string(e.code())}, {"message", e.what()}};
    emit(out);
    return kDomain;
  } catch (const std::invalid_argument& e) {
    out["error"] = json{{"code", "ParseError"}, {"message", e.what()}};
    emit(out);
    return kDomain;
  }
  if (!out.is_null()) emit(out);
  return code;
}
