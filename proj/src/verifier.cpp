#include "bhk/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bhk/errors.hpp"
#include "bhk/milnor.hpp"

namespace bhk {

namespace {

Rat json_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  if (j.is_number_float()) throw InputError(path + ": decimal numbers are not exact; write \"p/q\"");
  if (!j.is_string()) throw InputError(path + ": expected a rational as integer or \"p/q\" string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

RatVector json_rat_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(json_rat(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<RatVector> json_rat_vectors(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of vectors");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(json_rat_vector(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(path + ": missing field \"" + key + "\"");
  return obj.at(key);
}

long json_long(const Json& j, const std::string& path) {
  Rat r = json_rat(j, path);
  if (!is_integer(r)) throw InputError(path + ": expected an integer");
  return to_long(Int(r));
}

RunOptions parse_options(const Json& j) {
  RunOptions o;
  if (!j.is_object()) throw InputError("options: expected an object");
  for (const auto& [key, value] : j.items()) {
    const std::string path = "options." + key;
    if (key == "window_margin") {
      o.window_margin = json_long(value, path);
      if (o.window_margin < 0) throw InputError(path + ": must be nonnegative");
    } else if (key == "degree_bound") {
      o.degree_bound = json_long(value, path);
    } else if (key == "engine") {
      if (!value.is_string()) throw InputError(path + ": expected a string");
      o.engine = parse_engine(value.get<std::string>());
    } else if (key == "threads") {
      long t = json_long(value, path);
      if (t < 1) throw InputError(path + ": must be positive");
      o.threads = static_cast<unsigned>(t);
    } else {
      throw InputError(path + ": unknown option");
    }
  }
  return o;
}

Json rat_json(const Rat& r) { return to_string(r); }

Json rat_vector_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json int_vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_long(x));
  return a;
}

Json lattice_vector_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(is_integer(x) ? Json(to_long(Int(x))) : Json(to_string(x)));
  return a;
}

Json group_json(const SymmetryGroup& G) {
  Json g;
  g["order"] = G.order();
  Json gens = Json::array();
  for (const auto& x : G.generators()) gens.push_back(rat_vector_json(x.h()));
  g["generators"] = gens;
  g["invariant_factors"] = int_vector_json(G.invariant_factors());
  return g;
}

Json matrix_json(const IntMatrix& A) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) r.push_back(to_long(A(i, j)));
    rows.push_back(r);
  }
  return rows;
}

void require_cy(const BhDatum& datum) {
  CyReport cy = cy_check(datum.potential, datum.group);
  if (cy.calabi_yau_type()) return;
  if (!cy.k) throw NotCalabiYau("sum of weights " + to_string(cy.weight_sum) + " is not an integer");
  if (!cy.deg_in_m)
    throw NotCalabiYau("deg is not in M: G is not contained in SL_d, so the B ring complex has no integral grading");
  throw NotCalabiYau(
      "deg^v is not in N: G does not contain the exponential grading operator J, so the A ring complex has no "
      "integral grading");
}

void collect_anomalies(const std::string& name, const HodgeTable& t, Json& anomalies) {
  for (const auto& k : t.outside_range())
    anomalies.push_back(name + ": nonzero entry " + std::to_string(t.at(k.first, k.second)) + " at " + charge_key(k) +
                        " outside [0, c]^2");
}

Json verdict(const std::string& name, const std::string& status, const std::string& detail = "") {
  Json v;
  v["name"] = name;
  v["status"] = status;
  if (!detail.empty()) v["detail"] = detail;
  return v;
}

std::string equality_status(bool eq) { return eq ? "PASS" : "FAIL"; }

Json witness_json(const MembershipWitness& w, const ToricMirrorData& data) {
  Json j;
  j["ray"] = lattice_vector_json(w.ray);
  j["exponent"] = w.exponent;
  j["degree"] = rat_json(dot(w.target, data.deg_dual()));
  j["ambient"] = w.ambient;
  j["unknowns"] = w.unknowns;
  Json polys = Json::array();
  for (const auto& p : w.polynomials) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p) {
      Json t;
      t["w"] = lattice_vector_json(mono);
      t["c"] = to_string(c);
      terms.push_back(t);
    }
    polys.push_back(terms);
  }
  j["polynomials"] = polys;
  return j;
}

Json condition_json(const ConditionReport& r, const ToricMirrorData& data) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["message"] = r.message;
  j["necessary_condition"] = r.necessary_condition ? "pass" : "fail";
  Json rays = Json::array();
  for (std::size_t i = 0; i < r.rays.size(); ++i) {
    Json ray;
    ray["ray"] = lattice_vector_json(r.rays[i]);
    if (i < r.witnesses.size() && r.witnesses[i])
      ray["witness"] = witness_json(*r.witnesses[i], data);
    else
      ray["witness"] = nullptr;
    rays.push_back(ray);
  }
  j["rays"] = rays;
  Json q = Json::array();
  for (const auto& s : r.quotient) {
    Json e;
    e["degree"] = s.degree;
    e["ring_dim"] = s.ring_dim;
    e["ideal_rank"] = s.ideal_rank;
    e["quotient_dim"] = s.quotient_dim();
    q.push_back(e);
  }
  j["quotient"] = q;
  j["max_generator_degree"] = r.max_generator_degree;
  j["vanishing_from"] = r.vanishing_from ? Json(*r.vanishing_from) : Json(nullptr);
  return j;
}

std::pair<Rat, Rat> parse_key(const std::string& key) {
  std::vector<std::size_t> slashes;
  for (std::size_t i = 0; i < key.size(); ++i)
    if (key[i] == '/') slashes.push_back(i);
  if (slashes.empty()) throw InputError("bad table key " + key);
  std::size_t cut = slashes[slashes.size() / 2 - (slashes.size() % 2 == 0 ? 1 : 0)];
  if (slashes.size() == 1) cut = slashes[0];
  return {parse_rat(key.substr(0, cut)), parse_rat(key.substr(cut + 1))};
}

HodgeTable table_from_json(const Json& j, const Rat& c) {
  HodgeTable t(c);
  for (const auto& [key, value] : j.items()) {
    auto [p, m] = parse_key(key);
    t.add(p, m, value.get<std::size_t>());
  }
  return t;
}

}  // namespace

Engine parse_engine(const std::string& name) {
  if (name == "complex" || name == "complex-only") return Engine::Complex;
  if (name == "orbifold" || name == "orbifold-only") return Engine::Orbifold;
  if (name == "both") return Engine::Both;
  throw InputError("unknown engine \"" + name + "\" (expected complex, orbifold or both)");
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Complex:
      return "complex";
    case Engine::Orbifold:
      return "orbifold";
    case Engine::Both:
      return "both";
  }
  return "?";
}

InputSpec parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n');
    throw InputError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw InputError("top level must be an object");
  InputSpec spec;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw InputError("mode: expected \"bh\" or \"unified\"");
    spec.mode = doc["mode"].get<std::string>();
  } else if (doc.contains("matrix")) {
    spec.mode = "bh";
  } else {
    throw InputError("missing field \"mode\"");
  }
  if (doc.contains("options")) spec.options = parse_options(doc["options"]);

  if (spec.mode == "bh") {
    BhInput bh;
    const Json& m = require(doc, "matrix", "input");
    if (!m.is_array() || m.empty()) throw InputError("matrix: expected a nonempty array of rows");
    const std::size_t d = m.size();
    bh.matrix = IntMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::string path = "matrix[" + std::to_string(i) + "]";
      if (!m[i].is_array() || m[i].size() != d)
        throw InputError(path + ": expected " + std::to_string(d) + " entries (matrix must be square)");
      for (std::size_t j = 0; j < d; ++j) {
        Rat x = json_rat(m[i][j], path + "[" + std::to_string(j) + "]");
        if (!is_integer(x)) throw InputError(path + "[" + std::to_string(j) + "]: exponents must be integers");
        bh.matrix(i, j) = Int(x);
      }
    }
    if (doc.contains("group")) {
      const Json& g = doc["group"];
      bh.generators = json_rat_vectors(require(g, "generators", "group"), "group.generators");
    }
    if (doc.contains("coefficients")) {
      const Json& c = doc["coefficients"];
      if (!c.is_object()) throw InputError("coefficients: expected an object");
      if (c.contains("f")) bh.f = json_rat_vector(c["f"], "coefficients.f");
      if (c.contains("g")) bh.g = json_rat_vector(c["g"], "coefficients.g");
    }
    spec.bh = std::move(bh);
  } else if (spec.mode == "unified") {
    UnifiedInput u;
    long r = json_long(require(doc, "rank", "input"), "rank");
    if (r <= 0) throw InputError("rank: must be positive");
    u.rank = static_cast<std::size_t>(r);
    u.delta = json_rat_vectors(require(doc, "Delta", "input"), "Delta");
    u.delta_dual = json_rat_vectors(require(doc, "Delta_dual", "input"), "Delta_dual");
    u.deg = json_rat_vector(require(doc, "deg", "input"), "deg");
    u.deg_dual = json_rat_vector(require(doc, "deg_dual", "input"), "deg_dual");
    if (doc.contains("f")) u.f = json_rat_vector(doc["f"], "f");
    if (doc.contains("g")) u.g = json_rat_vector(doc["g"], "g");
    spec.unified = std::move(u);
  } else {
    throw InputError("mode: expected \"bh\" or \"unified\", got \"" + spec.mode + "\"");
  }
  return spec;
}

InputSpec load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

BhDatum make_datum(const InputSpec& spec, std::vector<std::string>* notices) {
  if (!spec.bh) throw InputError("this command needs a bh-mode input");
  const BhInput& bh = *spec.bh;
  Potential P(bh.matrix, bh.f);
  std::vector<GroupElement> gens;
  if (bh.generators) {
    for (const auto& h : *bh.generators) gens.emplace_back(h);
  } else if (notices) {
    notices->push_back("no group given: using the trivial group");
  }
  SymmetryGroup G = subgroup_closure(P, gens);
  return BhDatum(P, G, bh.g);
}

ToricMirrorData make_unified(const InputSpec& spec) {
  if (spec.unified) {
    const auto& u = *spec.unified;
    return ToricMirrorData(u.rank, u.delta, u.delta_dual, u.deg, u.deg_dual, u.f, u.g);
  }
  return unified_from_bh(make_datum(spec));
}

Json table_json(const HodgeTable& t) {
  Json j = Json::object();
  for (const auto& [k, v] : t.entries()) j[charge_key(k)] = v;
  return j;
}

Json run_analyze(const InputSpec& spec) {
  Json report;
  report["command"] = "analyze";
  Json notices = Json::array();
  std::vector<std::string> notes;
  BhDatum datum = make_datum(spec, &notes);
  for (const auto& n : notes) notices.push_back(n);
  const Potential& P = datum.potential;
  const SymmetryGroup& G = datum.group;

  Json s;
  s["dimension"] = P.dimension();
  s["matrix"] = matrix_json(P.exponents());
  s["potential"] = P.to_string();
  s["weights"] = rat_vector_json(P.weights().q);
  s["weight_sum"] = rat_json(P.weights().sum);
  CyReport cy = cy_check(P, G);
  s["k"] = cy.k ? Json(to_string(*cy.k)) : Json(nullptr);
  s["central_charge"] = rat_json(cy.central_charge);
  s["calabi_yau"] = cy.calabi_yau_type();
  s["deg_in_M"] = cy.deg_in_m;
  s["deg_dual_in_N"] = cy.deg_dual_in_n;
  s["det"] = to_string(P.det());
  SymmetryGroup aut = aut_group(P);
  s["aut"] = group_json(aut);
  s["group"] = group_json(G);
  SymmetryGroup Gd = dual_group(P, G);
  s["dual_group"] = group_json(Gd);
  LatticeData L = lattice_data(P, G);
  s["index_N_over_N0"] = to_string(L.index_n_over_n0);
  s["index_M0dual_over_N"] = to_string(L.index_m0dual_over_n);

  MilnorDims mw = milnor_dims(P);
  MilnorDims md = milnor_dims(transpose_potential(P));
  Json nd;
  nd["W"] = mw.nondegenerate();
  nd["W_dual"] = md.nondegenerate();
  nd["milnor_W"] = std::to_string(mw.total) + " (expected " + to_string(mw.expected_total) + ")";
  nd["milnor_W_dual"] = std::to_string(md.total) + " (expected " + to_string(md.expected_total) + ")";
  s["nondegenerate"] = nd;
  if (!cy.calabi_yau_type()) {
    try {
      require_cy(datum);
    } catch (const NotCalabiYau& e) {
      notices.push_back(std::string("not of Calabi-Yau type: ") + e.what());
    }
  }
  report["summary"] = s;
  report["notices"] = notices;
  return report;
}

Json run_rings(const InputSpec& spec, RingSide side, const RunOptions& options) {
  Json report;
  report["command"] = "rings";
  std::vector<std::string> notes;
  BhDatum datum = make_datum(spec, &notes);
  require_cy(datum);
  CyReport cy = cy_check(datum.potential, datum.group);
  report["side"] = side == RingSide::A ? "A" : "B";
  report["engine"] = to_string(options.engine);
  report["central_charge"] = rat_json(cy.central_charge);
  Json tables = Json::object();
  Json anomalies = Json::array();
  std::optional<HodgeTable> complex, orbifold;
  if (options.engine != Engine::Orbifold) {
    complex = ComplexEngine(datum, side).bigraded_table({options.window_margin, options.threads});
    tables["complex"] = table_json(*complex);
    collect_anomalies("complex", *complex, anomalies);
  }
  if (options.engine != Engine::Complex) {
    orbifold = side == RingSide::B ? orbifold_b_table(datum.potential, datum.group, options.threads)
                                   : orbifold_a_table(datum.potential, datum.group, options.threads);
    tables["orbifold"] = table_json(*orbifold);
    collect_anomalies("orbifold", *orbifold, anomalies);
  }
  report["tables"] = tables;
  Json verdicts = Json::array();
  if (complex && orbifold) verdicts.push_back(verdict("engines agree", equality_status(*complex == *orbifold)));
  report["verdicts"] = verdicts;
  report["anomalies"] = anomalies;
  Json notices = Json::array();
  for (const auto& n : notes) notices.push_back(n);
  report["notices"] = notices;
  return report;
}

Json run_dual(const InputSpec& spec) {
  BhDatum datum = make_datum(spec);
  BhDatum mirror = datum.mirror();
  Json report;
  report["command"] = "dual";
  Json doc;
  doc["mode"] = "bh";
  doc["matrix"] = matrix_json(mirror.potential.exponents());
  Json gens = Json::array();
  for (const auto& g : mirror.group.generators()) gens.push_back(rat_vector_json(g.h()));
  doc["group"]["generators"] = gens;
  doc["coefficients"]["f"] = rat_vector_json(mirror.potential.coefficients());
  doc["coefficients"]["g"] = rat_vector_json(mirror.dual_coefficients);
  report["dual_input"] = doc;
  report["dual_group"] = group_json(mirror.group);
  report["potential"] = mirror.potential.to_string();
  return report;
}

Rat default_witness_bound(const BhDatum& datum) {
  CyReport cy = cy_check(datum.potential, datum.group);
  Rat c = cy.central_charge;
  Rat best = 3 * c;
  for (const BhDatum& d : {datum, datum.mirror()}) {
    ToricMirrorData u = unified_from_bh(d);
    for (const auto& r : u.rays()) best = std::max(best, Rat(c + dot(r, u.deg_dual())));
  }
  return best;
}

Json run_verify(const InputSpec& spec, const RunOptions& options) {
  Json report;
  report["command"] = "verify";
  std::vector<std::string> notes;
  BhDatum datum = make_datum(spec, &notes);
  require_cy(datum);
  BhDatum mirror = datum.mirror();
  require_cy(mirror);
  const Potential& P = datum.potential;
  CyReport cy = cy_check(P, datum.group);
  const Rat c = cy.central_charge;

  Json s;
  s["potential"] = P.to_string();
  s["dual_potential"] = mirror.potential.to_string();
  s["weights"] = rat_vector_json(P.weights().q);
  s["dual_weights"] = rat_vector_json(mirror.potential.weights().q);
  s["k"] = to_string(*cy.k);
  s["central_charge"] = rat_json(c);
  s["group_order"] = datum.group.order();
  s["dual_group_order"] = mirror.group.order();
  s["engine"] = to_string(options.engine);
  s["window_margin"] = options.window_margin;
  s["nondegenerate"] = is_nondegenerate(P);
  s["dual_nondegenerate"] = is_nondegenerate(mirror.potential);
  report["summary"] = s;

  const TableOptions topt{options.window_margin, options.threads};
  HodgeTable A, B, A_dual, B_dual;
  std::optional<HodgeTable> oracle_B, oracle_B_dual;
  if (options.engine != Engine::Complex) {
    oracle_B = orbifold_b_table(P, datum.group, options.threads);
    oracle_B_dual = orbifold_b_table(mirror.potential, mirror.group, options.threads);
  }
  if (options.engine == Engine::Orbifold) {
    B = *oracle_B;
    A = oracle_B->reflect_minus();
    B_dual = *oracle_B_dual;
    A_dual = oracle_B_dual->reflect_minus();
  } else {
    B = ComplexEngine(datum, RingSide::B).bigraded_table(topt);
    A = ComplexEngine(datum, RingSide::A).bigraded_table(topt);
    B_dual = ComplexEngine(mirror, RingSide::B).bigraded_table(topt);
    A_dual = ComplexEngine(mirror, RingSide::A).bigraded_table(topt);
  }

  Json tables;
  tables["A"] = table_json(A);
  tables["B"] = table_json(B);
  tables["A_dual"] = table_json(A_dual);
  tables["B_dual"] = table_json(B_dual);
  tables["oracle_B"] = oracle_B ? table_json(*oracle_B) : Json(nullptr);
  tables["oracle_B_dual"] = oracle_B_dual ? table_json(*oracle_B_dual) : Json(nullptr);
  report["tables"] = tables;

  Json verdicts = Json::array();
  if (options.engine == Engine::Both)
    verdicts.push_back(verdict("(i) complex B = orbifold B", equality_status(B == *oracle_B && B_dual == *oracle_B_dual),
                               "compared for (W,G) and for (W^v,G^v)"));
  else
    verdicts.push_back(verdict("(i) complex B = orbifold B", "SKIPPED", "needs --engine both"));
  verdicts.push_back(verdict("(ii) A(W,G) = B(W^v,G^v)", equality_status(A == B_dual)));
  verdicts.push_back(verdict("(iii) B(W,G) = A(W^v,G^v)", equality_status(B == A_dual)));
  verdicts.push_back(verdict("(iv) A = B with Q- -> c - Q-",
                             equality_status(A == B.reflect_minus() && A_dual == B_dual.reflect_minus()),
                             "checked for (W,G) and for (W^v,G^v)"));

  const Rat bound = options.degree_bound ? Rat(*options.degree_bound) : default_witness_bound(datum);
  Json witnesses = Json::array();
  bool all_found = true;
  for (const BhDatum* d : {&datum, &mirror}) {
    ToricMirrorData u = unified_from_bh(*d);
    for (std::size_t i = 0; i < u.rays().size(); ++i) {
      auto w = key_lemma_witness(u, i, bound);
      Json e;
      e["datum"] = d == &datum ? "W" : "W_dual";
      e["ray"] = lattice_vector_json(u.rays()[i]);
      e["exponent"] = w ? Json(w->exponent) : Json(nullptr);
      e["degree"] = w ? rat_json(dot(w->target, u.deg_dual())) : Json(nullptr);
      witnesses.push_back(e);
      if (!w) all_found = false;
    }
  }
  verdicts.push_back(verdict("(v) membership witnesses on all rays", all_found ? "PASS" : "FAIL-UNKNOWN",
                             "degree bound " + to_string(bound)));
  report["verdicts"] = verdicts;
  report["witnesses"] = witnesses;

  Json anomalies = Json::array();
  collect_anomalies("A", A, anomalies);
  collect_anomalies("B", B, anomalies);
  collect_anomalies("A_dual", A_dual, anomalies);
  collect_anomalies("B_dual", B_dual, anomalies);
  if (oracle_B) collect_anomalies("oracle_B", *oracle_B, anomalies);
  if (oracle_B_dual) collect_anomalies("oracle_B_dual", *oracle_B_dual, anomalies);
  report["anomalies"] = anomalies;
  Json notices = Json::array();
  for (const auto& n : notes) notices.push_back(n);
  report["notices"] = notices;
  return report;
}

Json run_check_unified(const InputSpec& spec, const RunOptions& options) {
  ToricMirrorData data = make_unified(spec);
  const long bound = options.degree_bound ? *options.degree_bound : kDefaultUnifiedBound;
  UnifiedReport rep = unified_condition(data, bound);
  Json report;
  report["command"] = "check-unified";
  Json s;
  s["source"] = spec.mode;
  s["rank"] = data.rank();
  s["delta_size"] = data.delta().size();
  s["delta_dual_size"] = data.delta_dual().size();
  s["degree_bound"] = bound;
  report["summary"] = s;
  report["primal"] = condition_json(rep.primal, data);
  report["dual"] = condition_json(rep.dual, data.dual());
  Json verdicts = Json::array();
  verdicts.push_back(verdict("primal condition", to_string(rep.primal.verdict), rep.primal.message));
  verdicts.push_back(verdict("dual condition", to_string(rep.dual.verdict), rep.dual.message));
  report["verdicts"] = verdicts;
  Json warnings = Json::array();
  for (const auto& w : rep.warnings) warnings.push_back(w);
  report["warnings"] = warnings;
  return report;
}

int verdict_exit_code(const Json& report) {
  if (!report.contains("verdicts")) return 0;
  for (const auto& v : report["verdicts"]) {
    const auto status = v["status"].get<std::string>();
    if (status != "PASS" && status != "SKIPPED") return 1;
  }
  return 0;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  const std::string cmd = report.value("command", "");
  auto list = [&](const char* key, const char* label) {
    if (!report.contains(key)) return;
    for (const auto& n : report[key]) out << label << ": " << n.get<std::string>() << '\n';
  };
  auto grid = [&](const std::string& name, const Json& t, const Rat& c) {
    out << name << ":\n";
    if (t.is_null()) {
      out << "  (not computed)\n";
      return;
    }
    std::istringstream lines(table_from_json(t, c).grid());
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  };

  if (cmd == "analyze") {
    const Json& s = report["summary"];
    out << "W = " << s["potential"].get<std::string>() << '\n';
    out << "weights q = (";
    for (std::size_t i = 0; i < s["weights"].size(); ++i) out << (i ? ", " : "") << s["weights"][i].get<std::string>();
    out << "), sum " << s["weight_sum"].get<std::string>() << '\n';
    out << "k = " << (s["k"].is_null() ? std::string("(not an integer)") : s["k"].get<std::string>())
        << ", c = " << s["central_charge"].get<std::string>() << '\n';
    out << "Calabi-Yau type: " << (s["calabi_yau"].get<bool>() ? "yes" : "no")
        << " (deg in M: " << (s["deg_in_M"].get<bool>() ? "yes" : "no")
        << ", deg^v in N: " << (s["deg_dual_in_N"].get<bool>() ? "yes" : "no") << ")\n";
    auto inv = [](const Json& g) {
      std::string r;
      for (const auto& x : g["invariant_factors"]) r += (r.empty() ? "Z/" : " x Z/") + std::to_string(x.get<long>());
      return r.empty() ? std::string("trivial") : r;
    };
    out << "|Aut(W)| = " << s["aut"]["order"] << "  " << inv(s["aut"]) << '\n';
    out << "|G| = " << s["group"]["order"] << "  " << inv(s["group"]) << '\n';
    out << "|G^v| = " << s["dual_group"]["order"] << "  " << inv(s["dual_group"]) << '\n';
    out << "[N : N_0] = " << s["index_N_over_N0"].get<std::string>()
        << ", [M_0^v : N] = " << s["index_M0dual_over_N"].get<std::string>() << '\n';
    out << "nondegenerate: W " << (s["nondegenerate"]["W"].get<bool>() ? "yes" : "no") << " (Milnor "
        << s["nondegenerate"]["milnor_W"].get<std::string>() << "), W^v "
        << (s["nondegenerate"]["W_dual"].get<bool>() ? "yes" : "no") << " (Milnor "
        << s["nondegenerate"]["milnor_W_dual"].get<std::string>() << ")\n";
    list("notices", "notice");
    return out.str();
  }
  if (cmd == "dual") {
    out << "W^v = " << report["potential"].get<std::string>() << '\n';
    out << "|G^v| = " << report["dual_group"]["order"] << '\n';
    out << report["dual_input"].dump(2) << '\n';
    return out.str();
  }
  if (cmd == "rings") {
    Rat c = parse_rat(report["central_charge"].get<std::string>());
    out << report["side"].get<std::string>() << " ring, c = " << to_string(c) << '\n';
    for (const auto& [name, t] : report["tables"].items()) grid(name, t, c);
  }
  if (cmd == "verify") {
    const Json& s = report["summary"];
    Rat c = parse_rat(s["central_charge"].get<std::string>());
    out << "W = " << s["potential"].get<std::string>() << ", |G| = " << s["group_order"] << '\n';
    out << "W^v = " << s["dual_potential"].get<std::string>() << ", |G^v| = " << s["dual_group_order"] << '\n';
    out << "k = " << s["k"].get<std::string>() << ", c = " << to_string(c) << '\n';
    for (const auto& [name, t] : report["tables"].items()) grid(name, t, c);
  }
  if (cmd == "check-unified") {
    for (const char* side : {"primal", "dual"}) {
      const Json& r = report[side];
      out << side << ": " << r["verdict"].get<std::string>() << " (" << r["message"].get<std::string>() << ")\n";
      out << "  necessary condition: " << r["necessary_condition"].get<std::string>() << '\n';
      for (const auto& ray : r["rays"]) {
        out << "  ray " << ray["ray"].dump() << ": ";
        if (ray["witness"].is_null())
          out << "no witness\n";
        else
          out << "witness at l = " << ray["witness"]["exponent"] << '\n';
      }
    }
    list("warnings", "warning");
  }
  if (report.contains("verdicts"))
    for (const auto& v : report["verdicts"]) {
      out << v["status"].get<std::string>() << "  " << v["name"].get<std::string>();
      if (v.contains("detail")) out << "  [" << v["detail"].get<std::string>() << "]";
      out << '\n';
    }
  list("anomalies", "anomaly");
  list("notices", "notice");
  return out.str();
}

}  // namespace bhk
