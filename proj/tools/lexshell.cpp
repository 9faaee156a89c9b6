// Command-line surface: validation, chains, complexes, labelling conditions,
// the monomial order, Groebner bases, the theorem checks and the sweep.
//
// Exit codes: 0 = verdict true / success, 1 = verdict false, 2 = error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexshell/complex.hpp"
#include "lexshell/io.hpp"
#include "lexshell/theorem_lab.hpp"

using namespace lexshell;
using nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

json report_shell(const std::string& command, const ParsedInstance& inst) {
  json r;
  r["command"] = command;
  r["instance"] = {{"kind", inst.is_poset() ? "poset" : "category"}, {"digest", inst.digest}};
  return r;
}

void emit(json r, const Timer& timer) {
  r["timing_ms"] = timer.ms();
  std::cout << r.dump(2) << "\n";
}

EdgeLabelling need_labelling(const ParsedInstance& inst, const PathTable& t) {
  if (!inst.has_labelling())
    fail(Errc::usage_error, "this command needs edge labels in the instance file");
  return inst.labelling_for(t);
}

json witness_json(const PathTable& t, const PrefixWitness& w) {
  return {{"class", t.class_display(w.cls)},
          {"first", t.path_display(w.first)},
          {"second", t.path_display(w.second)}};
}

json witness_json(const PathTable& t, const LexWitness& w) {
  const auto& rp = t.path(w.chain);
  int s = rp.dom, at = rp.dom;
  std::vector<int> verts{rp.dom};
  for (int e : rp.edges) verts.push_back(t.edge(e).cod);
  (void)s;
  (void)at;
  return {{"class", t.class_display(w.cls)},
          {"chain", t.path_display(w.chain)},
          {"s", t.vertex_name(verts[w.s_pos])},
          {"t", t.vertex_name(verts[w.t_pos])}};
}

json witness_json(const PathTable& t, const SbsWitness& w) {
  return {{"class", t.class_display(w.cls)}, {"chain", t.path_display(w.chain)}};
}

int run(int argc, char** argv) {
  CLI::App app{"lex-shellability and parallel-ideal Groebner bases for finite posets and "
               "acyclic categories"};
  app.require_subcommand(1);

  std::string file;
  std::string out_file;
  bool force = false;
  bool do_search = false;
  std::string w_text, v_text;
  std::string paper_basis_file;
  std::string direction = "both";
  SweepConfig sweep_config;
  bool verbose = false;
  bool deterministic = true;
  int facet_bound = 9;
  int max_label = 0;
  int label_bound = 12;

  auto add_instance_arg = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance file (.json)")->required();
  };

  auto* validate = app.add_subcommand("validate", "parse and validate an instance");
  add_instance_arg(validate);
  auto* chains = app.add_subcommand("chains", "maximal chains of the bounded instance");
  add_instance_arg(chains);
  std::string from_elem, to_elem;
  chains->add_option("--from", from_elem, "interval bottom");
  chains->add_option("--to", to_elem, "interval top");
  auto* complex_cmd = app.add_subcommand("complex", "order complex of a poset");
  add_instance_arg(complex_cmd);
  auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a category");
  add_instance_arg(nerve_cmd);
  auto* shelling = app.add_subcommand("shelling", "shelling check of the induced facet order");
  add_instance_arg(shelling);
  shelling->add_flag("--search", do_search, "brute-force search for any shelling order");
  shelling->add_option("--facet-bound", facet_bound, "search bound on the facet count");
  auto* prefix = app.add_subcommand("prefix", "prefix condition check");
  add_instance_arg(prefix);
  auto* lex = app.add_subcommand("lex", "LEX-condition check");
  add_instance_arg(lex);
  auto* sbs = app.add_subcommand("sbs", "SBS-condition check");
  add_instance_arg(sbs);
  auto* order = app.add_subcommand("order", "explain a monomial comparison");
  add_instance_arg(order);
  order->add_option("--explain", w_text, "first monomial (a-b-c resp. gen.gen)")->required();
  order->add_option("second", v_text, "second monomial")->required();
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the parallel ideal");
  add_instance_arg(gb);
  gb->add_option("--verify-paper-basis", paper_basis_file,
                 "verify the basis in this file instead of printing the reduced one");
  auto* oracle = app.add_subcommand("oracle", "brute-force initial ideal");
  add_instance_arg(oracle);
  auto* quadratic = app.add_subcommand("quadratic", "quadraticity verdict for the reduced basis");
  add_instance_arg(quadratic);
  auto* verify = app.add_subcommand("verify", "theorem checks on one instance");
  add_instance_arg(verify);
  verify->add_option("--direction", direction, "fwd | bwd | both")
      ->check(CLI::IsMember({"fwd", "bwd", "both"}));
  auto* sweep = app.add_subcommand("sweep", "equivalence sweep over many instances");
  sweep->add_option("--max-elements", sweep_config.max_elements, "exhaustive enumeration cutoff");
  sweep->add_option("--max-label", sweep_config.max_label, "label alphabet size");
  sweep->add_option("--count", sweep_config.random_count, "random instances past the cutoff");
  sweep->add_option("--seed", sweep_config.seed, "random seed");
  sweep->add_option("--random-elements", sweep_config.random_elements,
                    "size of the random instances");
  sweep->add_option("--jobs", sweep_config.jobs, "parallel workers (default 1)");
  sweep->add_flag("--categories", sweep_config.categories, "sweep random acyclic categories");
  sweep->add_flag("--verbose", verbose, "include per-instance verdicts");
  sweep->add_flag("--deterministic", deterministic,
                  "deterministic aggregation (always on; flag kept for compatibility)");
  auto* augment = app.add_subcommand("augment", "adjoin fresh bottom/top");
  add_instance_arg(augment);
  augment->add_flag("--force", force, "augment even if already bounded/augmented");
  augment->add_option("-o,--out", out_file, "write the augmented instance here");
  auto* search_cmd = app.add_subcommand("label-search", "search for a LEX-labelling");
  add_instance_arg(search_cmd);
  search_cmd->add_option("--max-label", max_label, "label alphabet size")->required();
  search_cmd->add_option("--edge-bound", label_bound, "search bound on the edge count");

  CLI11_PARSE(app, argc, argv);
  Timer timer;

  if (sweep->parsed()) {
    auto summary = equivalence_sweep(sweep_config);
    json r;
    r["command"] = "sweep";
    r["instances"] = summary.instances;
    r["labellings_seen"] = summary.labellings_seen;
    r["prefix_valid"] = summary.prefix_valid;
    r["sbs_true"] = summary.sbs_true;
    r["quadratic_true"] = summary.quadratic_true;
    r["order_law_pairs"] = summary.order_law_pairs;
    r["shelling_checks"] = summary.shelling_checks;
    r["restriction_checks"] = summary.restriction_checks;
    r["agreement"] = summary.all_ok();
    if (verbose || !summary.all_ok()) {
      json ds = json::array();
      for (const auto& d : summary.discrepancies)
        ds.push_back({{"kind", d.kind}, {"detail", d.detail}, {"instance", d.instance_json}});
      r["discrepancies"] = std::move(ds);
    }
    emit(r, timer);
    return summary.all_ok() ? kTrue : kFalse;
  }

  ParsedInstance inst = load_instance(file);

  if (validate->parsed()) {
    json r = report_shell("validate", inst);
    PathTable t = inst.make_table();
    r["vertices"] = t.vertex_count();
    r["edges"] = t.edge_count();
    r["paths"] = t.path_count();
    r["classes"] = t.class_count();
    r["labelled"] = inst.has_labelling();
    if (inst.has_labelling()) inst.labelling_for(t);  // totality check
    emit(r, timer);
    return kTrue;
  }

  if (augment->parsed()) {
    json r = report_shell("augment", inst);
    std::string text;
    if (inst.is_poset()) {
      Poset aug = inst.poset().augmented(force);
      PathTable t{aug};
      text = instance_to_json(t, nullptr);
      r["elements"] = aug.size();
    } else {
      AcyclicCategory aug = inst.category().augmented(force);
      PathTable t{aug};
      text = instance_to_json(t, nullptr);
      r["objects"] = aug.object_count();
    }
    if (out_file.empty()) {
      r["instance_out"] = json::parse(text);
      emit(r, timer);
    } else {
      std::ofstream out(out_file);
      out << text << "\n";
      r["written"] = out_file;
      emit(r, timer);
    }
    return kTrue;
  }

  PathTable t = inst.make_table();

  if (chains->parsed()) {
    json r = report_shell("chains", inst);
    if (!inst.is_poset()) fail(Errc::usage_error, "chains expects a poset instance");
    const Poset& p = inst.poset();
    Interval iv = (!from_elem.empty() || !to_elem.empty())
                      ? p.closed_interval(p.index_of(from_elem), p.index_of(to_elem))
                      : p.full_interval();
    json cs = json::array();
    for (const auto& c : p.maximal_chains(iv)) {
      std::string s;
      for (int v : c.vertices) {
        if (!s.empty()) s += "-";
        s += p.name(v);
      }
      cs.push_back(s);
    }
    r["chains"] = std::move(cs);
    emit(r, timer);
    return kTrue;
  }

  if (complex_cmd->parsed() || nerve_cmd->parsed()) {
    bool want_nerve = nerve_cmd->parsed();
    json r = report_shell(want_nerve ? "nerve" : "complex", inst);
    Complex k;
    if (want_nerve) {
      k = Complex::nerve(inst.is_poset() ? AcyclicCategory::from_poset(inst.poset())
                                         : inst.category());
    } else {
      if (!inst.is_poset()) fail(Errc::usage_error, "complex expects a poset instance");
      k = Complex::order_complex(inst.poset());
    }
    r["complex"] = render_complex(k);
    emit(r, timer);
    return kTrue;
  }

  if (prefix->parsed() || lex->parsed() || sbs->parsed()) {
    EdgeLabelling lab = need_labelling(inst, t);
    json r;
    bool ok;
    if (prefix->parsed()) {
      r = report_shell("prefix", inst);
      auto w = find_prefix_violation(t, lab);
      ok = !w.has_value();
      if (w) r["witness"] = witness_json(t, *w);
    } else if (lex->parsed()) {
      r = report_shell("lex", inst);
      if (!inst.is_poset()) fail(Errc::usage_error, "the LEX-condition is defined for posets");
      auto w = find_lex_violation(t, lab);
      ok = !w.has_value();
      if (w) r["witness"] = witness_json(t, *w);
    } else {
      r = report_shell("sbs", inst);
      auto w = find_sbs_violation(t, lab);
      ok = !w.has_value();
      if (w) r["witness"] = witness_json(t, *w);
    }
    r["verdict"] = ok;
    emit(r, timer);
    return ok ? kTrue : kFalse;
  }

  if (order->parsed()) {
    EdgeLabelling lab = need_labelling(inst, t);
    MonomialOrder ord(t, lab);
    PathId w = t.parse_path(w_text);
    PathId v = t.parse_path(v_text);
    auto explain = ord.compare_by_rules(w, v);
    json r = report_shell("order", inst);
    r["first"] = t.path_display(w);
    r["second"] = t.path_display(v);
    r["result"] = explain.result < 0 ? "less" : (explain.result > 0 ? "greater" : "equal");
    switch (explain.rule) {
      case OrderRule::degree: r["rule"] = "1: degree (lower degree is greater)"; break;
      case OrderRule::labels: r["rule"] = "2: label sequence"; break;
      case OrderRule::carrier: r["rule"] = "3: carrier chain"; break;
      case OrderRule::domain: r["rule"] = "4: domain"; break;
      case OrderRule::equal: r["rule"] = "equal monomial"; break;
    }
    r["carrier_first"] = t.path_display(ord.carrier(w));
    r["carrier_second"] = t.path_display(ord.carrier(v));
    emit(r, timer);
    return kTrue;
  }

  if (gb->parsed() || quadratic->parsed() || oracle->parsed()) {
    EdgeLabelling lab = need_labelling(inst, t);
    MonomialOrder ord(t, lab);
    if (oracle->parsed()) {
      json r = report_shell("oracle", inst);
      auto set = initial_ideal_oracle(t, ord);
      auto minimal = divisibility_minimal(t, set);
      json all = json::array(), min = json::array();
      for (PathId p : set) all.push_back(t.path_display(p));
      for (PathId p : minimal) min.push_back(t.path_display(p));
      r["initial_ideal"] = std::move(all);
      r["minimal_generators"] = std::move(min);
      emit(r, timer);
      return kTrue;
    }
    if (!paper_basis_file.empty()) {
      std::ifstream in(paper_basis_file);
      if (!in) fail(Errc::usage_error, "cannot read '" + paper_basis_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      auto candidate = parse_basis_file(buf.str(), t);
      bool ok = is_groebner_basis(t, candidate, ord);
      json r = report_shell("gb --verify-paper-basis", inst);
      r["verdict"] = ok;
      emit(r, timer);
      return ok ? kTrue : kFalse;
    }
    auto basis = buchberger(t, parallel_ideal_generators(t), ord);
    bool quad = is_quadratic(t, basis);
    auto dims = dimension_check(t, basis, ord);
    json r = report_shell(quadratic->parsed() ? "quadratic" : "gb", inst);
    r["basis"] = render_basis(t, basis);
    r["quadratic"] = quad;
    r["normal_monomials"] = dims.normal;
    r["expected_dimension"] = dims.expected;
    r["dimension_ok"] = dims.ok && dims.truncated_ok;
    emit(r, timer);
    if (quadratic->parsed()) return quad ? kTrue : kFalse;
    return kTrue;
  }

  if (shelling->parsed()) {
    json r = report_shell("shelling", inst);
    if (!inst.is_poset()) fail(Errc::usage_error, "shelling expects a poset instance");
    Complex k = Complex::order_complex(inst.poset());
    if (do_search) {
      auto found = find_shelling(k, facet_bound);
      r["found"] = found.has_value();
      if (found) {
        json order_out = json::array();
        for (const auto& f : *found) order_out.push_back(k.face(f).label);
        r["order"] = std::move(order_out);
      }
      emit(r, timer);
      return found ? kTrue : kFalse;
    }
    EdgeLabelling lab = need_labelling(inst, t);
    least_chains(t, lab);  // prefix precondition
    std::vector<std::pair<PathId, FaceRef>> facets;
    for (const auto& fr : k.facets()) {
      const auto& f = k.face(fr);
      std::vector<int> edges;
      for (std::size_t i = 0; i + 1 < f.chain.size(); ++i) {
        for (int g = 0; g < t.edge_count(); ++g)
          if (t.edge(g).dom == f.chain[i] && t.edge(g).cod == f.chain[i + 1]) {
            edges.push_back(g);
            break;
          }
      }
      facets.push_back({t.find_path(edges), fr});
    }
    std::sort(facets.begin(), facets.end(), [&](const auto& a, const auto& b) {
      int c = chain_compare(t, lab, a.first, b.first);
      return c != 0 ? c < 0 : a.second < b.second;
    });
    FacetOrdering order_in;
    json order_out = json::array();
    for (const auto& [p, fr] : facets) {
      order_in.push_back(fr);
      order_out.push_back(t.path_display(p));
    }
    bool ok = is_shelling(k, order_in);
    r["order"] = std::move(order_out);
    r["verdict"] = ok;
    emit(r, timer);
    return ok ? kTrue : kFalse;
  }

  if (verify->parsed()) {
    EdgeLabelling lab = need_labelling(inst, t);
    json r = report_shell("verify", inst);
    r["direction"] = direction;
    if (direction == "fwd" || direction == "both") {
      auto rep = verify_forward(t, lab);
      r["forward"] = {{"applicable", rep.applicable},
                      {"sbs", rep.sbs},
                      {"quadratic", rep.quadratic}};
      if (rep.sbs_witness) r["forward"]["sbs_witness"] = witness_json(t, *rep.sbs_witness);
      if (!rep.applicable) {
        r["forward"]["note"] = "not applicable: the labelling fails SBS";
        emit(r, timer);
        return kFalse;
      }
      r["forward"]["basis"] = render_basis(t, rep.basis);
    }
    if (direction == "bwd" || direction == "both") {
      auto rep = verify_backward(t, lab);
      r["backward"] = {{"sbs", rep.sbs}, {"quadratic", rep.quadratic}};
    }
    emit(r, timer);
    return kTrue;
  }

  if (search_cmd->parsed()) {
    json r = report_shell("label-search", inst);
    auto found = search_lex_labelling(t, max_label, label_bound);
    r["found"] = found.has_value();
    if (found) {
      json lab_out = json::object();
      for (int e = 0; e < t.edge_count(); ++e) lab_out[t.edge_name(e)] = found->label(e);
      r["labelling"] = std::move(lab_out);
    }
    emit(r, timer);
    return found ? kTrue : kFalse;
  }

  fail(Errc::usage_error, "no subcommand matched");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
