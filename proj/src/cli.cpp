#include "symlinv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "symlinv/errors.hpp"
#include "symlinv/linv.hpp"
#include "symlinv/phin.hpp"
#include "symlinv/plethysm.hpp"
#include "symlinv/weylhecke.hpp"

namespace symlinv::cli {

namespace {

using json = nlohmann::json;

enum class Format { json, csv, pretty };

// ------------------------------------------------------------------ JSON in

json load_json(const std::string& text) {
  std::error_code ec;
  if (!text.empty() && text.front() != '{' && text.front() != '[' &&
      std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    if (!in) throw DomainError("cannot read '" + text + "'");
    return json::parse(in);
  }
  return json::parse(text);
}

Rational rational_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected an integer or a \"num/den\" string, got " + j.dump());
}

Vector vector_of(const json& j) {
  if (!j.is_array()) throw DomainError("expected an array, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(rational_of(x));
  return v;
}

EigenMonomial monomial_of(const json& j) {
  if (!j.is_object()) throw DomainError("a monomial is an object {symbol: exponent}");
  EigenMonomial m;
  for (const auto& [sym, e] : j.items()) m = m * EigenMonomial::symbol(sym, rational_of(e));
  return m;
}

TorusExponent torus_of(const json& j) {
  return TorusExponent{vector_of(j.at("a")), rational_of(j.at("a0"))};
}

WeylElement weyl_of(const json& j) {
  return WeylElement::make(j.at("nu").get<std::vector<int>>(), j.at("eps").get<std::vector<int>>());
}

GspWeights weights_of(const json& j) {
  return GspWeights{vector_of(j.at("mu")), rational_of(j.at("mu0"))};
}

CharacterData characters_of(const json& j) {
  CharacterData c;
  for (const auto& x : j.at("chi")) c.chi.push_back(monomial_of(x));
  c.sigma = monomial_of(j.at("sigma"));
  return c;
}

Direction direction_of(const json& j) {
  return Direction{vector_of(j.at("u")), j.contains("u0") ? rational_of(j.at("u0")) : Rational(0)};
}

// ------------------------------------------------------------------ JSON out

json str(const Rational& q) { return to_string(q); }

json vec(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

json mono(const EigenMonomial& m) {
  json exps = json::object();
  for (const auto& [sym, e] : m.exponents()) exps[sym] = str(e);
  return json{{"exponents", exps}, {"text", m.to_string()}};
}

json weyl_json(const WeylElement& w) { return json{{"nu", w.nu}, {"eps", w.eps}}; }

json subspace_json(const PhiNModule& m, const Subspace& s) {
  json basis = json::array();
  std::vector<int> labels;
  bool coordinate = true;
  for (const auto& v : s.basis()) {
    basis.push_back(vec(v));
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t q = 0; q < v.size(); ++q)
      if (v[q] != 0) {
        ++nonzero;
        where = q;
      }
    if (nonzero == 1 && v[where] == 1) {
      labels.push_back(m.label(where));
    } else {
      coordinate = false;
    }
  }
  json out{{"dim", s.dim()}, {"basis", basis}};
  if (coordinate) out["labels"] = labels;
  return out;
}

json matrix_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(vec(a.row(r)));
  return rows;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(std::ostream& out, Format fmt, const json& j, const std::optional<Table>& table = {}) {
  if (fmt == Format::csv) {
    if (!table) throw UnsupportedInput("csv output is only available for tables (cg, bcoeff)");
    for (std::size_t c = 0; c < table->header.size(); ++c)
      out << (c ? "," : "") << table->header[c];
    out << "\n";
    for (const auto& row : table->rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << "\n";
    }
    return;
  }
  if (fmt == Format::pretty && table) {
    std::vector<std::size_t> width(table->header.size());
    for (std::size_t c = 0; c < width.size(); ++c) {
      width[c] = table->header[c].size();
      for (const auto& row : table->rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
      out << "\n";
    };
    line(table->header);
    for (const auto& row : table->rows) line(row);
    return;
  }
  out << (fmt == Format::pretty ? j.dump(2) : j.dump()) << "\n";
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                std::optional<std::size_t> place = {}) {
  json e{{"kind", kind}, {"message", message}};
  if (place) e["place"] = *place;
  err << json{{"error", e}}.dump() << "\n";
}

// ------------------------------------------------------------------ commands

struct Options {
  std::string format = "json";

  int m = 0, n = 0, p = 0, k = 0, g = 0;
  std::optional<int> u, v, w, i;
  bool table = false;

  std::string diag;

  std::string phin_case;
  std::string L_text = "1";
  std::string weight_k = "2";
  std::string phin_input;
  std::string d_labels;
  bool all_submodules = false, benois = false, gr1 = false;

  std::string t, weyl, chi, eigs, weights;
  bool all = false;

  std::string family, input, compare;

  std::string exponents;
  std::optional<long> check_n;
};

json cmd_cg(const Options& o, std::optional<Table>& table) {
  const CgTable t = CgTable::build(o.m, o.n, o.p);
  json j{{"m", o.m}, {"n", o.n}, {"p", o.p}};
  if (!o.table) {
    if (!o.u || !o.v || !o.w) throw DomainError("cg needs --u --v --w or --table");
    j["u"] = *o.u;
    j["v"] = *o.v;
    j["w"] = *o.w;
    const Rational val = cg_coefficient(o.m, o.n, o.p, *o.u, *o.v, *o.w);
    j["value"] = str(val);
    table = Table{{"u", "v", "w", "value"},
                  {{std::to_string(*o.u), std::to_string(*o.v), std::to_string(*o.w), to_string(val)}}};
    return j;
  }
  json entries = json::array();
  Table tab{{"u", "v", "w", "value"}, {}};
  for (int u = 0; u <= o.m; ++u)
    for (int v = 0; v <= o.n; ++v) {
      const int w = u + v - t.stratum();
      if (w < 0 || w > o.p) continue;
      const Rational& val = t.at(u, v, w);
      entries.push_back(json{{"u", u}, {"v", v}, {"w", w}, {"value", str(val)}});
      tab.rows.push_back({std::to_string(u), std::to_string(v), std::to_string(w), to_string(val)});
    }
  j["entries"] = entries;
  table = tab;
  return j;
}

json cmd_bcoeff(const Options& o, std::optional<Table>& table) {
  json j{{"n", o.n}, {"k", o.k}};
  Table tab{{"n", "k", "i", "value"}, {}};
  if (o.i) {
    const Rational val = b_coefficient(o.n, o.k, *o.i);
    j["i"] = *o.i;
    j["value"] = str(val);
    tab.rows.push_back({std::to_string(o.n), std::to_string(o.k), std::to_string(*o.i), to_string(val)});
  } else {
    const Vector row = b_row(o.n, o.k);
    j["values"] = vec(row);
    for (std::size_t i = 0; i < row.size(); ++i)
      tab.rows.push_back({std::to_string(o.n), std::to_string(o.k), std::to_string(i), to_string(row[i])});
  }
  table = tab;
  return j;
}

json cmd_project_endo(const Options& o) {
  const Vector diag = vector_of(load_json(o.diag));
  const DiagonalProjection r = project_endomorphism_diagonal(o.n, o.k, diag);
  return json{{"n", o.n}, {"k", o.k}, {"middle_coeff", str(r.middle_coeff)}, {"tail_zero", r.tail_zero}};
}

json cmd_phin(const Options& o) {
  std::string case_name = o.phin_case;
  int n = o.n;
  PhiNParams params;
  params.L = parse_rational(o.L_text);
  params.k = parse_rational(o.weight_k);
  std::optional<std::vector<int>> d_labels;
  if (!o.phin_input.empty()) {
    const json in = load_json(o.phin_input);
    case_name = in.at("case").get<std::string>();
    n = in.at("n").get<int>();
    if (in.contains("params")) {
      const json& pj = in.at("params");
      if (pj.contains("L")) params.L = rational_of(pj.at("L"));
      if (pj.contains("k")) params.k = rational_of(pj.at("k"));
      if (pj.contains("valuations"))
        for (const auto& [sym, val] : pj.at("valuations").items()) params.valuations[sym] = rational_of(val);
    }
    if (in.contains("D")) d_labels = in.at("D").get<std::vector<int>>();
  }
  if (case_name.empty()) throw DomainError("phin needs --case or --input");
  if (!o.d_labels.empty()) d_labels = load_json(o.d_labels).get<std::vector<int>>();

  const PhiNModule m = build_case(parse_phin_case(case_name), n, params);
  json phi = json::array();
  for (std::size_t q = 0; q < m.dim(); ++q) phi.push_back(json{{"f", m.label(q)}, {"eigenvalue", mono(m.phi[q])}});
  json j{{"case", to_string(m.kind)}, {"n", m.n}, {"basis_order", "f_n..f_-n"},
         {"phi", phi}, {"N", matrix_json(m.N)}, {"fil0", subspace_json(m, m.fil0)}};
  if (m.kind == PhiNCase::steinberg) j["L"] = str(m.L);

  json regular = json::array();
  for (const auto& s : regular_submodules(m)) regular.push_back(subspace_json(m, s));
  j["regular_submodules"] = regular;

  if (o.all_submodules) {
    json all = json::array();
    for (const auto& s : stable_submodules(m)) all.push_back(subspace_json(m, s));
    j["stable_submodules"] = all;
  }
  if (o.benois || o.gr1) {
    std::vector<int> labels;
    if (d_labels) {
      labels = *d_labels;
    } else {
      for (int i = n; i >= 1; --i) labels.push_back(i);
    }
    const Subspace d = m.span_of(labels);
    j["D"] = subspace_json(m, d);
    if (o.benois) {
      const BenoisFiltration f = benois_filtration(m, d);
      j["benois"] = json{{"D_-1", subspace_json(m, f.d_minus1)},
                         {"D_0", subspace_json(m, f.d0)},
                         {"D_1", subspace_json(m, f.d1)}};
    }
    if (o.gr1) {
      const Gr1Data g = gr1_data(m, d);
      json eigs = json::array();
      for (const auto& e : g.eigenvalues) eigs.push_back(mono(e));
      j["gr1"] = json{{"rank", g.rank}, {"eigenvalues", eigs}};
    }
  }
  return j;
}

json cmd_hecke(const Options& o) {
  const TorusExponent t = torus_of(load_json(o.t));
  const CharacterData chi = o.chi.empty() ? generic_characters(o.g) : characters_of(load_json(o.chi));
  std::vector<WeylElement> elems;
  if (o.all) {
    elems = weyl_group(o.g);
  } else if (!o.weyl.empty()) {
    elems.push_back(weyl_of(load_json(o.weyl)));
  } else {
    elems.push_back(WeylElement::identity(o.g));
  }
  json rows = json::array();
  for (const auto& w : elems) {
    rows.push_back(json{{"weyl", weyl_json(w)},
                        {"conjugated", json{{"a", vec(weyl_conjugate(w, t).a)}, {"a0", str(t.a0)}}},
                        {"value", mono(hecke_diagonal(o.g, chi, t, w))}});
  }
  return json{{"g", o.g}, {"t", json{{"a", vec(t.a)}, {"a0", str(t.a0)}}}, {"eigenvalues", rows}};
}

json cmd_recover(const Options& o) {
  std::vector<EigenMonomial> theta;
  for (const auto& x : load_json(o.eigs)) theta.push_back(monomial_of(x));
  const GspWeights mu = weights_of(load_json(o.weights));
  const WeylElement w = o.weyl.empty() ? WeylElement::identity(o.g) : weyl_of(load_json(o.weyl));
  const CharacterData c = recover_characters(o.g, theta, mu, w);
  json chi = json::array();
  for (const auto& x : c.chi) chi.push_back(mono(x));
  return json{{"g", o.g}, {"weyl", weyl_json(w)}, {"chi", chi}, {"sigma", mono(c.sigma)}};
}

json cmd_slope(const Options& o) {
  const json in = load_json(o.input);
  if (o.family == "hilbert") {
    HilbertWeights hw{{}, rational_of(in.at("w"))};
    for (const auto& k : in.at("k")) hw.k.push_back(rational_of(k));
    const Vector slopes = vector_of(in.at("slopes"));
    return json{{"family", "hilbert"}, {"noncritical", slope_check_hilbert(hw, slopes)}};
  }
  if (o.family == "gsp") {
    std::vector<GspWeights> weights;
    for (const auto& w : in.at("weights")) weights.push_back(weights_of(w));
    const TorusExponent t = torus_of(in.at("t"));
    const Vector slopes = vector_of(in.at("slopes"));
    const GspSlopeSides s = gsp_slope_sides(weights, t, slopes);
    json j{{"family", "gsp"}, {"lhs", str(s.lhs)}, {"rhs", str(s.rhs)}, {"noncritical", s.lhs < s.rhs}};
    if (in.value("twist_search", false)) j["twist"] = twist_search(weights, t, slopes);
    return j;
  }
  throw DomainError("slope --family must be hilbert or gsp");
}

json cmd_obstruction(const Options& o) {
  std::vector<long> exps;
  const std::string& text = o.exponents;
  if (!text.empty() && text.front() == '[') {
    exps = json::parse(text).get<std::vector<long>>();
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      long x = 0;
      try {
        x = std::stol(item, &used);
      } catch (const std::exception&) {
        throw DomainError("malformed exponent '" + item + "'");
      }
      if (used != item.size()) throw DomainError("malformed exponent '" + item + "'");
      exps.push_back(x);
    }
  }
  const ObstructionOrders r = refinement_obstruction_orders(exps);
  json j{{"exponents", exps}, {"orders", r.orders}, {"unconditional", r.unconditional}};
  if (o.check_n) {
    j["N"] = *o.check_n;
    j["sufficient"] = r.sufficient(*o.check_n);
  }
  return j;
}

json term_json(const PlaceTerm& t) {
  return json{{"numerator", str(t.numerator)}, {"denominator", str(t.denominator)}, {"value", str(t.value)}};
}

json cmd_linv(const Options& o) {
  const json in = load_json(o.input);
  std::string family_name = o.family;
  if (family_name.empty()) family_name = in.value("family", std::string());
  const Family family = parse_family(family_name);
  FamilyParams params;
  std::optional<BRow> row;
  if (in.contains("params")) {
    const json& pj = in.at("params");
    if (pj.contains("n")) params.n = pj.at("n").get<int>();
    if (pj.contains("g")) params.n = pj.at("g").get<int>();
    if (pj.contains("b_row")) {
      const auto r = pj.at("b_row").get<std::vector<int>>();
      if (r.size() != 2) throw DomainError("b_row must be [m, k]");
      row = BRow{r[0], r[1]};
    }
  }
  std::optional<Theorem> which;
  if (!o.compare.empty()) {
    which = parse_theorem(o.compare);
    const TheoremSetup setup = theorem_setup(*which, params);
    if (setup.family != family) {
      throw DomainError("theorem " + o.compare + " belongs to family " + to_string(setup.family));
    }
    if (!row) row = setup.row;
  }
  const TriangulationData data = family_data(family, params);
  if (!row) row = data.default_b_row;

  const Direction u = direction_of(in.at("direction"));
  std::vector<PlaceInput> places;
  for (const auto& pj : in.at("places")) {
    PlaceInput p;
    for (const auto& [key, val] : pj.at("gradients").items()) p.gradients[key] = rational_of(val);
    if (pj.contains("direction")) p.direction = direction_of(pj.at("direction"));
    places.push_back(std::move(p));
  }

  const LInvariant l = generic_l_invariant(data, *row, u, places);
  json per = json::array();
  for (const auto& t : l.per_place) per.push_back(term_json(t));
  json j{{"family", to_string(family)}, {"b_row", {row->m, row->k}}, {"value", str(l.value)}, {"per_place", per}};
  if (which) {
    const Classification c = compare_to_theorem(*which, params);
    j["classification"] = json{{"theorem", to_string(*which)}, {"kind", to_string(c.kind)}, {"scalar", str(c.scalar)}};
    j["theorem_value"] = str(theorem_evaluator(*which, params, u, places).value);
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact plethysm, Hecke and L-invariant computations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* cg = app.add_subcommand("cg", "Inverse Clebsch-Gordan coefficients");
  cg->add_option("--m", o.m)->required();
  cg->add_option("--n", o.n)->required();
  cg->add_option("--p", o.p)->required();
  cg->add_option("--u", o.u);
  cg->add_option("--v", o.v);
  cg->add_option("--w", o.w);
  cg->add_flag("--table", o.table, "Emit every on-stratum coefficient");

  auto* bc = app.add_subcommand("bcoeff", "Coefficients B_{n,k,i}");
  bc->add_option("--n", o.n)->required();
  bc->add_option("--k", o.k)->required();
  bc->add_option("--i", o.i);

  auto* pe = app.add_subcommand("project-endo", "Middle coefficient of a diagonal endomorphism in V_2k");
  pe->add_option("--n", o.n)->required();
  pe->add_option("--k", o.k)->required();
  pe->add_option("--diag", o.diag, "JSON array of rationals")->required();

  auto* ph = app.add_subcommand("phin", "Filtered (phi,N)-modules");
  ph->add_option("--case", o.phin_case);
  ph->add_option("--n", o.n);
  ph->add_option("--L", o.L_text, "Steinberg L-invariant");
  ph->add_option("--k", o.weight_k, "Weight for crystalline_split");
  ph->add_option("--input", o.phin_input, "JSON module description (inline or path)");
  ph->add_option("--D", o.d_labels, "JSON list of labels i spanning D");
  ph->add_flag("--all-submodules", o.all_submodules);
  ph->add_flag("--benois", o.benois);
  ph->add_flag("--gr1", o.gr1);

  auto* he = app.add_subcommand("hecke", "Iwahori-Hecke diagonal eigenvalues for GSp(2g)");
  he->add_option("--g", o.g)->required();
  he->add_option("--t", o.t, "JSON {\"a\": [...], \"a0\": ...}")->required();
  auto* weyl_opt = he->add_option("--weyl", o.weyl, "JSON {\"nu\": [...], \"eps\": [...]}");
  he->add_flag("--all", o.all)->excludes(weyl_opt);
  he->add_option("--chi", o.chi, "JSON {\"chi\": [monomials], \"sigma\": monomial}");

  auto* rc = app.add_subcommand("recover-chi", "Recover Satake characters from normalized eigenvalues");
  rc->add_option("--g", o.g)->required();
  rc->add_option("--eigs", o.eigs, "JSON array of monomials")->required();
  rc->add_option("--weights", o.weights, "JSON {\"mu\": [...], \"mu0\": ...}")->required();
  rc->add_option("--weyl", o.weyl);

  auto* sl = app.add_subcommand("slope", "Noncritical slope checks");
  sl->add_option("--family", o.family)->required()->check(CLI::IsMember({"hilbert", "gsp"}));
  sl->add_option("--input", o.input)->required();

  auto* ob = app.add_subcommand("obstruction", "Root-of-unity regularity obstructions");
  ob->add_option("--exponents", o.exponents, "Comma-separated integers or a JSON array")->required();
  ob->add_option("--check-N", o.check_n);

  auto* li = app.add_subcommand("linv", "L-invariant evaluation");
  li->add_option("--family", o.family)->required();
  li->add_option("--input", o.input)->required();
  li->add_option("--compare-theorem", o.compare)->check(CLI::IsMember({"A", "B", "C", "D1", "D2"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kInputError;
  }

  const Format fmt = o.format == "csv" ? Format::csv : o.format == "pretty" ? Format::pretty : Format::json;
  try {
    std::optional<Table> table;
    json result;
    if (cg->parsed()) {
      result = cmd_cg(o, table);
    } else if (bc->parsed()) {
      result = cmd_bcoeff(o, table);
    } else if (pe->parsed()) {
      result = cmd_project_endo(o);
    } else if (ph->parsed()) {
      result = cmd_phin(o);
    } else if (he->parsed()) {
      result = cmd_hecke(o);
    } else if (rc->parsed()) {
      result = cmd_recover(o);
    } else if (sl->parsed()) {
      result = cmd_slope(o);
    } else if (ob->parsed()) {
      result = cmd_obstruction(o);
    } else {
      result = cmd_linv(o);
    }
    emit(out, fmt, result, table);
    return kOk;
  } catch (const SingularDirectionError& e) {
    emit_error(err, e.kind(), e.what(), e.place());
    return kSingular;
  } catch (const Error& e) {
    emit_error(err, e.kind(), e.what());
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "json", e.what());
    return kInputError;
  }
}

}  // namespace symlinv::cli
