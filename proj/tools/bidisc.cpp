// Command-line surface: every pipeline of the library with JSON output.
// Exit codes: 0 ok, 1 domain error (well-formed input, operation refused),
// 2 usage or syntax error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "bidisc/classify.hpp"
#include "bidisc/localinv.hpp"
#include "bidisc/minimality.hpp"
#include "bidisc/param.hpp"
#include "bidisc/parse.hpp"
#include "bidisc/selftest.hpp"

using nlohmann::json;
using namespace bidisc;

namespace {

std::string slurp_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(Err::BadParams, "cannot open file " + arg.substr(1));
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }
  return arg;
}

Rat parse_rat(const std::string& s) {
  BPoly p = parse_poly(s);
  require(is_constant_total(p), Err::BadParams, "expected a rational constant");
  return p.coeff(0).coeff(0);
}

UPoly parse_upoly(const std::string& s) {
  BPoly p = parse_poly(s);
  require(p.degree().value_or(0) == 0, Err::BadParams, "expected a polynomial in x only");
  return p.coeff(0);
}

json j_deg(const Degree& d) {
  if (d.is_neg_inf()) return json(nullptr);
  return json(d.value());
}

json j_upoly(const UPoly& u, const char* var = "x") { return to_string(u, var); }

json j_gmat(const GMat& m) {
  return json{{"a", to_string(m.a)},
              {"b", to_string(m.b)},
              {"c", to_string(m.c)},
              {"d", to_string(m.d)},
              {"det", to_string(m.det)}};
}

json j_word(const std::vector<GMat>& w) {
  json a = json::array();
  for (const auto& m : w) a.push_back(j_gmat(m));
  return a;
}

json j_autword(const AutWord& w) {
  json a = json::array();
  for (const auto& g : w) {
    if (g.is_swap)
      a.push_back(json{{"gen", "swap"}});
    else
      a.push_back(json{{"gen", "elementary"}, {"lambda", to_string(g.lambda)}, {"p", to_string(g.p)}});
  }
  return a;
}

json j_disc_report(const DiscReport& r) {
  json j{{"disc", to_string(r.disc)},
         {"deg", j_deg(r.deg)},
         {"bound", r.upper_bound},
         {"d_y", r.d_y},
         {"separable", r.separable}};
  j["ord_inf"] = r.separable ? json(r.ord_inf) : json(nullptr);
  return j;
}

json j_polytope(const PolytopeData& p) {
  json verts = json::array();
  for (auto& [i, jj] : p.vertices) verts.push_back(json::array({i, jj}));
  return json{{"vertices", verts}, {"a", p.a},   {"b", p.b},
              {"c", p.c},          {"d_x", p.d_x}, {"d_y", p.d_y},
              {"normal_position", p.normal_position}, {"two_volume", p.two_volume}};
}

json j_chardata(const CharData& c) {
  return json{{"p", c.p},     {"q", c.q},
              {"n", c.n},     {"alpha", to_string(c.alpha)},
              {"beta", to_string(c.beta)}, {"b", c.b},
              {"unit", to_string(c.unit)}};
}

json j_branch(const PuiseuxBranch& b) {
  json terms = json::array();
  for (auto& [k, c] : b.series)
    terms.push_back(json{{"exp_num", k}, {"exp_den", b.ram}, {"coeff", to_string(c)}});
  json j{{"ram", b.ram}, {"exact", b.exact}, {"series", terms}};
  j["center"] = b.center ? json(to_string(*b.center)) : json("infinity");
  if (!b.exact) j["known_upto"] = b.known_upto;
  return j;
}

int g_threads = 1;

GMat parse_matrix_arg(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  require(parts.size() == 4, Err::BadParams, "matrix spec needs four ';'-separated entries");
  return GMat(parse_upoly(parts[0]), parse_upoly(parts[1]), parse_upoly(parts[2]),
              parse_upoly(parts[3]));
}

std::vector<GMat> parse_word_arg(const std::string& spec) {
  std::vector<GMat> word;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "tau") {
      word.push_back(GMat::tau());
    } else if (cur.rfind("dj:", 0) == 0) {
      auto rest = cur.substr(3);
      auto colon = rest.find(':');
      require(colon != std::string::npos, Err::BadParams, "dj generator is dj:<lambda>:<h>");
      word.push_back(GMat::dejonquieres(parse_rat(rest.substr(0, colon)),
                                        parse_upoly(rest.substr(colon + 1))));
    } else {
      throw Error(Err::BadParams, "unknown generator '" + cur + "' (use tau or dj:<lambda>:<h>)");
    }
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  require(!word.empty(), Err::BadParams, "empty generator word");
  return word;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bidisc: exact discriminants of bivariate polynomials over Q"};
  app.require_subcommand(1);
  int threads_default = 1;
  if (const char* env = std::getenv("BIDISC_THREADS")) threads_default = std::max(1, std::atoi(env));
  app.add_option("--threads", threads_default, "cap on worker threads");

  std::string in1, in2, alpha_s = "0", matrix_s, word_s, mode;
  std::string u_s, v1_s, v2_s = "1", shape_s = "4,3,1";
  std::uint64_t seed = 1, budget = 1000, resume = 0;
  int order = 0, steps = 3, coeff_bound = 3, deg_bound = 3, count = 1;
  bool as_form = false, with_branches = false;

  auto* disc_cmd = app.add_subcommand("disc", "discriminant report of f w.r.t. y");
  disc_cmd->add_option("poly", in1)->required();

  auto* res_cmd = app.add_subcommand("resultant", "Res_y(f, g)");
  res_cmd->add_option("f", in1)->required();
  res_cmd->add_option("g", in2)->required();

  auto* poly_cmd = app.add_subcommand("polytope", "generic Newton polytope data");
  poly_cmd->add_option("poly", in1)->required();

  auto* char_cmd = app.add_subcommand("charpoly", "right-edge characteristic data");
  char_cmd->add_option("poly", in1)->required();

  auto* min_cmd = app.add_subcommand("minimal", "minimality report");
  min_cmd->add_option("poly", in1)->required();

  auto* red_cmd = app.add_subcommand("reduce", "GL2(K[x]) volume reduction and divisibility cases");
  red_cmd->add_option("poly", in1)->required();

  auto* orb_cmd = app.add_subcommand("orbit", "apply a GL2(K[x]) matrix or generator word");
  orb_cmd->add_option("poly", in1)->required();
  orb_cmd->add_option("--matrix", matrix_s, "a;b;c;d entries in x");
  orb_cmd->add_option("--word", word_s, "comma list of tau | dj:<lambda>:<h>");
  orb_cmd->add_flag("--form", as_form, "treat input as a form in Y0,Y1");

  auto* coord_cmd = app.add_subcommand("coordinate", "extract <f> | random");
  coord_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"extract", "random"}));
  coord_cmd->add_option("poly", in1);
  coord_cmd->add_option("--seed", seed);
  coord_cmd->add_option("--steps", steps);
  coord_cmd->add_option("--coeff-bound", coeff_bound);
  coord_cmd->add_option("--deg-bound", deg_bound);

  auto* fam_cmd = app.add_subcommand("family", "monic reducible equality check");
  fam_cmd->add_option("poly", in1)->required();

  auto* sym_cmd = app.add_subcommand("symmetry", "Delta_y versus Delta_x report");
  sym_cmd->add_option("poly", in1)->required();

  auto* loc_cmd = app.add_subcommand("local", "local invariants over x = alpha");
  loc_cmd->add_option("poly", in1)->required();
  loc_cmd->add_option("--alpha", alpha_s);
  loc_cmd->add_option("--order", order, "series truncation order (x-valuation)");
  loc_cmd->add_flag("--branches", with_branches, "include Puiseux series");

  auto* imp_cmd = app.add_subcommand("implicitize", "implicit equation of x=u(s), y=v1(s)/v2(s)");
  imp_cmd->add_option("--u", u_s)->required();
  imp_cmd->add_option("--v1", v1_s)->required();
  imp_cmd->add_option("--v2", v2_s);

  auto* search_cmd = app.add_subcommand("search", "search reduced nonmonic minimal polynomials");
  search_cmd->add_option("--shape", shape_s, "dU,dV1,dV2");
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--budget", budget, "candidates to examine");
  search_cmd->add_option("--resume", resume, "skip this many enumeration indices");

  auto* cls_cmd = app.add_subcommand("classify", "Theorem-1.5 classification of a factored form");
  cls_cmd->add_option("factors", in1, "(F1)*(F2)*... with Fi in x,Y0,Y1")->required();

  auto* apc_cmd = app.add_subcommand("appendixc", "automorphism checks on random words");
  apc_cmd->add_option("--seed", seed);
  apc_cmd->add_option("--count", count);
  apc_cmd->add_option("--steps", steps);
  apc_cmd->add_option("--coeff-bound", coeff_bound);
  apc_cmd->add_option("--deg-bound", deg_bound);

  app.add_subcommand("selftest", "run the invariant suite");

  CLI11_PARSE(app, argc, argv);
  g_threads = threads_default;

  json report;
  report["status"] = "ok";
  int exit_code = 0;
  std::string cmd = app.get_subcommands().front()->get_name();
  report["command"] = cmd;

  try {
    if (cmd == "disc") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      report["result"] = j_disc_report(disc_degree_report(parse_poly(text)));
    } else if (cmd == "resultant") {
      std::string t1 = slurp_arg(in1), t2 = slurp_arg(in2);
      report["input"] = json::array({t1, t2});
      report["result"] = json{{"res", to_string(resultant_y(parse_poly(t1), parse_poly(t2)))}};
    } else if (cmd == "polytope") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      report["result"] = j_polytope(generic_polytope(parse_poly(text)));
    } else if (cmd == "charpoly") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      report["result"] = j_chardata(edge_char_data(parse_poly(text)));
    } else if (cmd == "minimal") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      MinimalityReport r = minimality_report(parse_poly(text));
      json j{{"d_y", r.d_y},
             {"deg_disc", j_deg(r.deg_disc)},
             {"abs_irreducible", r.abs_irreducible},
             {"minimal", r.minimal},
             {"almost_minimal", r.almost_minimal},
             {"disc", to_string(r.disc)}};
      j["genus_if_extremal"] = r.genus_if_extremal ? json(*r.genus_if_extremal) : json(nullptr);
      report["result"] = j;
    } else if (cmd == "reduce") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      DivisibilityReport r = divisibility_report(parse_poly(text));
      json j{{"outcome", div_case_name(r.outcome)},
             {"reduced_case", div_case_name(r.reduced_case)},
             {"input_reduced", r.input_reduced},
             {"output", to_string(r.trace.output)},
             {"word", j_word(r.trace.word)},
             {"reduced", r.trace.reduced},
             {"volume_sequence", r.trace.volume_sequence},
             {"d_y", r.trace.d_y},
             {"d_x", r.trace.d_x},
             {"c", r.trace.c}};
      if (r.outcome == DivCase::Case4_gcdWindow || r.reduced_case == DivCase::Case4_gcdWindow)
        j["gcd_window"] = r.gcd_window;
      report["result"] = j;
    } else if (cmd == "orbit") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      std::vector<GMat> word;
      if (!matrix_s.empty()) word.push_back(parse_matrix_arg(matrix_s));
      if (!word_s.empty()) {
        auto w2 = parse_word_arg(word_s);
        word.insert(word.end(), w2.begin(), w2.end());
      }
      require(!word.empty(), Err::BadParams, "give --matrix or --word");
      if (as_form) {
        BForm F = parse_form(text);
        UPoly d0 = F.d >= 2 ? disc_form(F) : UPoly(Rat(1));
        for (const auto& m : word) F = apply_form(m, F);
        UPoly d1 = F.d >= 2 ? disc_form(F) : UPoly(Rat(1));
        report["result"] = json{{"image", to_string(F)},
                                {"deg_disc_before", j_deg(d0.degree())},
                                {"deg_disc_after", j_deg(d1.degree())}};
      } else {
        BPoly f = parse_poly(text);
        Degree d0 = disc_affine(f).deg;
        for (const auto& m : word) f = apply_affine(m, f);
        Degree d1 = disc_affine(f).deg;
        report["result"] = json{{"image", to_string(f)},
                                {"deg_disc_before", j_deg(d0)},
                                {"deg_disc_after", j_deg(d1)}};
      }
    } else if (cmd == "coordinate") {
      if (mode == "extract") {
        require(!in1.empty(), Err::BadParams, "coordinate extract needs a polynomial");
        std::string text = slurp_arg(in1);
        report["input"] = text;
        BPoly f = parse_poly(text);
        AutWord w = extract_automorphism(f);
        report["result"] =
            json{{"word", j_autword(w)}, {"image", to_string(apply_aut(w, f))}};
      } else {
        auto [f, w] = random_coordinate(seed, steps, coeff_bound, deg_bound);
        report["input"] = json{{"seed", seed}, {"steps", steps}};
        report["result"] = json{{"f", to_string(f)},
                                {"word", j_autword(w)},
                                {"minimal", minimality_report(f).minimal}};
      }
    } else if (cmd == "family") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      MonicFamilyReport r = monic_family_check(parse_poly(text));
      json j{{"r", r.r},
             {"deg_disc", j_deg(r.deg_disc)},
             {"attains", r.attains},
             {"witness_unavailable", r.witness_unavailable}};
      if (r.witness)
        j["witness"] = json{{"word", j_autword(r.witness->first)},
                            {"g", to_string(r.witness->second, "y")}};
      report["result"] = j;
    } else if (cmd == "symmetry") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      SymmetryReport s = symmetry_report(parse_poly(text));
      report["result"] = json{{"n_x", s.n_x},
                              {"n_y", s.n_y},
                              {"nondegenerate", s.nondegenerate},
                              {"vanishes_at_inf_inf", s.vanishes_at_inf_inf},
                              {"eq_a", s.eq_a},
                              {"eq_b", s.eq_b},
                              {"deg_disc_y", j_deg(s.deg_disc_y)},
                              {"deg_disc_x", j_deg(s.deg_disc_x)}};
    } else if (cmd == "local") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      BPoly f = parse_poly(text);
      Rat alpha = parse_rat(alpha_s);
      LocalReport r = local_invariants(f, alpha);
      json j{{"alpha", to_string(r.alpha)},
             {"places", r.places},
             {"r_alpha", r.r_alpha},
             {"delta_alpha", r.delta_alpha},
             {"ord_disc", r.ord_disc},
             {"identity_holds", r.identity_holds}};
      if (with_branches) {
        int ord = order > 0 ? order : std::max(4, 2 * degree_x(f).value_or(1) * f.deg());
        json arr = json::array();
        for (const auto& b : puiseux_branches(f, alpha, ord)) arr.push_back(j_branch(b));
        j["branches"] = arr;
      }
      report["result"] = j;
    } else if (cmd == "implicitize") {
      RatParam p(parse_upoly(slurp_arg(u_s)), parse_upoly(slurp_arg(v1_s)),
                 parse_upoly(slurp_arg(v2_s)));
      report["input"] = json{{"u", to_string(p.u)}, {"v1", to_string(p.v1)}, {"v2", to_string(p.v2)}};
      ParamReport r = param_report(p);
      report["result"] = json{{"f", to_string(r.f)},
                              {"proper", r.proper},
                              {"predicted", json::array({r.pred_dy, r.pred_a, r.pred_b})},
                              {"observed", json::array({r.obs_dy, r.obs_a, r.obs_b})},
                              {"deg_disc", j_deg(r.deg_disc)},
                              {"minimal", r.minimal}};
    } else if (cmd == "search") {
      int du, dv1, dv2;
      if (std::sscanf(shape_s.c_str(), "%d,%d,%d", &du, &dv1, &dv2) != 3)
        throw Error(Err::BadParams, "--shape needs dU,dV1,dV2");
      auto sink = [](const SearchHit& h) {
        json line{{"param",
                   json{{"u", to_string(h.param.u)},
                        {"v1", to_string(h.param.v1)},
                        {"v2", to_string(h.param.v2)}}},
                  {"f", to_string(h.f)},
                  {"d_y", h.d_y},
                  {"d_x", h.d_x},
                  {"c", h.c},
                  {"deg_disc", h.deg_disc},
                  {"reduced", h.reduced},
                  {"index", h.index}};
        std::cout << line.dump() << "\n";
      };
      auto hits = search_minimal({du, dv1, dv2}, seed, budget, resume, g_threads, sink);
      return hits.empty() ? 0 : 0;
    } else if (cmd == "classify") {
      std::string text = slurp_arg(in1);
      report["input"] = text;
      ClassificationVerdict v = classify_form(parse_form_factors(text));
      json j{{"d", v.d},
             {"deg_disc", j_deg(v.deg_disc)},
             {"bound", v.bound},
             {"outcome", classify_outcome_name(v.outcome)},
             {"irreducibility_assumed", v.irreducibility_assumed}};
      if (v.witness) j["witness"] = j_gmat(*v.witness);
      if (!v.normalising_word.empty()) j["normalising_word"] = j_word(v.normalising_word);
      if (v.normal_form_reached) j["normal_form"] = to_string(*v.normal_form_reached);
      if (!v.note.empty()) j["note"] = v.note;
      report["result"] = j;
    } else if (cmd == "appendixc") {
      json arr = json::array();
      bool all = true;
      for (int i = 0; i < count; ++i) {
        auto [f, w] = random_coordinate(seed + (std::uint64_t)i, steps, coeff_bound, deg_bound);
        AppendixCReport r = verify_appendixc(w);
        all = all && r.all_pass;
        arr.push_back(json{{"seed", seed + (std::uint64_t)i},
                           {"f", to_string(f)},
                           {"jacobian_const", r.jacobian_const},
                           {"degree_dualities", r.degree_dualities},
                           {"monicity", r.monicity},
                           {"disc_degree", r.disc_degree},
                           {"all_pass", r.all_pass}});
      }
      report["result"] = json{{"all_pass", all}, {"words", arr}};
      if (!all) exit_code = 1;
    } else if (cmd == "selftest") {
      auto results = run_selftest(g_threads);
      json arr = json::array();
      int failed = 0;
      for (const auto& r : results) {
        std::cerr << (r.pass ? "ok   " : "FAIL ") << r.name
                  << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        arr.push_back(json{{"name", r.name}, {"pass", r.pass}});
        if (!r.pass) ++failed;
      }
      report["result"] = json{{"checks", arr},
                              {"passed", (int)results.size() - failed},
                              {"failed", failed}};
      if (failed > 0) exit_code = 1;
    }
  } catch (const Error& e) {
    report["status"] = "error";
    json err{{"kind", err_name(e.kind())}, {"message", e.what()}};
    if (e.offset()) err["offset"] = *e.offset();
    report["error"] = err;
    exit_code = e.is_syntax_class() ? 2 : 1;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = json{{"kind", "InternalError"}, {"message", e.what()}};
    exit_code = 1;
  }

  std::cout << report.dump(2) << "\n";
  return exit_code;
}
