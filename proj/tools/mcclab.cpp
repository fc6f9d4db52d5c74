#include "mcclab/budget.hpp"
#include "mcclab/constructions.hpp"
#include "mcclab/errors.hpp"
#include "mcclab/homology.hpp"
#include "mcclab/io.hpp"
#include "mcclab/mcc.hpp"
#include "mcclab/qfunc.hpp"
#include "mcclab/random_complex.hpp"
#include "mcclab/rtrees.hpp"
#include "mcclab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>

using namespace mcclab;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kIo = 4,
  kDomain = 5,
  kInvariant = 6,
};

struct Session {
  std::string command;
  Json summary = Json::object();
  int status = kOk;
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content << std::flush;
  else
    write_file_atomic(out_path, content);
}

Json big(const BigInt& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json group_json(std::size_t dim, const HomologyGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(big(t));
  return Json{{"dim", dim}, {"betti", g.betti}, {"torsion", torsion}};
}

SimplicialComplex load_complex(const std::string& path) { return complex_from_json(read_text_file(path)); }

std::string rational_text(const Rational& q) { return to_string(q); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal connected covers: enumeration, homology, r-trees, constructions and random thresholds"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 0;
  std::uint64_t seed = 0;
  app.add_option("--workers", workers, "Worker threads (0: available parallelism)");
  app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();

  Session session;
  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<void()> body) {
    sub->callback([&, name = std::move(name), body = std::move(body)] {
      session.command = name;
      action = body;
    });
  };

  // mcc
  auto* mcc = app.add_subcommand("mcc", "Minimal connected covers");
  mcc->require_subcommand(1);
  int n = 0, r = 0;
  std::string out_path, in_path;
  bool count_only = false, reverse = false, exact = false;

  auto* enumerate = mcc->add_subcommand("enumerate", "List M_r(n), one complex per line");
  enumerate->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  enumerate->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--reverse", reverse, "Search facets in reverse lexicographic order");
  enumerate->add_option("--out", out_path);
  bind(enumerate, "mcc enumerate", [&] {
    EnumerationOptions options;
    options.workers = workers;
    options.order = reverse ? SearchOrder::Reverse : SearchOrder::Forward;
    const auto all = enumerate_mcc(n, r, options);
    session.summary["count"] = all.size();
    if (count_only) {
      std::cout << all.size() << '\n';
      return;
    }
    std::string lines;
    for (const auto& y : all) lines += complex_to_json(y.complex()) + '\n';
    emit(lines, out_path);
    if (!out_path.empty()) std::cout << all.size() << '\n';
  });

  auto* check = mcc->add_subcommand("check", "Verdict and structural diagnostics for a complex file");
  check->add_option("file", in_path)->required();
  bind(check, "mcc check", [&] {
    const auto y = as_pure(load_complex(in_path));
    const int vn = y.vertex_count(), vr = y.dimension();
    const bool verdict = is_mcc(y);
    const auto bounds = facet_count_bounds(vn, vr);
    Json leaves = Json::array();
    for (const auto& leaf : find_leaves(y))
      leaves.push_back({{"vertex", leaf.vertex}, {"branch", leaf.branch}, {"external", leaf.external}});
    Json doc{{"n", vn},
             {"r", vr},
             {"is_mcc", verdict},
             {"connected", is_connected(y.complex())},
             {"facet_count", y.facet_count()},
             {"facet_bounds", {bounds.lo, bounds.hi}},
             {"leaves", leaves}};
    if (verdict) {
      doc["homology_signature"] = verify_mcc_homology(y);
      doc["treelike"] = is_treelike(y);
    }
    std::cout << doc.dump(2) << '\n';
    session.summary["is_mcc"] = verdict;
  });

  auto* bounds = mcc->add_subcommand("bounds", "Count ledger: lower chain, upper chain and envelopes");
  bounds->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  bounds->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--exact", exact, "Also count M_r(n) by enumeration");
  bind(bounds, "mcc bounds", [&] {
    std::optional<BigInt> count;
    if (exact) {
      EnumerationOptions options;
      options.workers = workers;
      count = count_mcc(n, r, options);
    }
    const auto ledger = bound_chain(n, r, count);
    Json doc{{"n", n}, {"r", r}};
    doc["exact_count"] = ledger.exact_count ? big(*ledger.exact_count) : Json(nullptr);
    doc["lower_chain_vertices"] = ledger.lower_chain_vertices;
    doc["lower_chain"] = big(ledger.lower_chain);
    doc["upper_chain"] = big(ledger.upper_chain);
    doc["envelope_a"] = ledger.envelope_a;
    doc["envelope_b"] = ledger.envelope_b;
    doc["log10_lower_envelope"] = ledger.log10_lower_envelope;
    doc["log10_upper_envelope"] = ledger.log10_upper_envelope;
    doc["sandwich_holds"] = ledger.sandwich_holds();
    std::cout << doc.dump(2) << '\n';
  });

  // homology
  auto* hom = app.add_subcommand("homology", "Integral homology of a complex file");
  int dim = -1;
  hom->add_option("file", in_path)->required();
  hom->add_option("--dim", dim, "Only this degree")->check(CLI::NonNegativeNumber);
  bind(hom, "homology", [&] {
    const auto x = load_complex(in_path);
    Json degrees = Json::array();
    if (dim >= 0) {
      degrees.push_back(group_json(static_cast<std::size_t>(dim), homology(x, dim)));
    } else {
      const auto profile = homology_profile(x);
      for (std::size_t k = 0; k < profile.degrees.size(); ++k)
        degrees.push_back(group_json(k, profile.degrees[k]));
    }
    std::cout << Json{{"n", x.vertex_count()}, {"degrees", degrees}}.dump(2) << '\n';
  });

  // rtree
  auto* rtree = app.add_subcommand("rtree", "r-trees");
  rtree->require_subcommand(1);
  bool do_enumerate = false;
  auto* rcount = rtree->add_subcommand("count", "Number of labeled r-trees on n vertices");
  rcount->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  rcount->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  rcount->add_flag("--enumerate", do_enumerate, "Also enumerate them and compare");
  bind(rcount, "rtree count", [&] {
    const auto formula = count_r_trees(n, r);
    if (!do_enumerate) {
      std::cout << formula.get_str() << '\n';
      return;
    }
    const auto trees = enumerate_r_trees(n, r);
    const bool agree = BigInt(static_cast<long>(trees.size())) == formula;
    std::cout << Json{{"formula", big(formula)}, {"enumerated", trees.size()}, {"agree", agree}}.dump() << '\n';
    if (!agree) session.status = kVerificationFailed;
  });

  auto* rcheck = rtree->add_subcommand("check", "Is a graph file an r-tree or a partial r-tree");
  rcheck->add_option("file", in_path)->required();
  rcheck->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  bind(rcheck, "rtree check", [&] {
    const auto g = graph_from_json(read_text_file(in_path));
    Json doc{{"n", g.vertex_count()}, {"r", r}, {"is_r_tree", is_r_tree(g, r)}};
    if (g.vertex_count() <= budget::kTreewidthVertices) {
      const auto tw = exact_treewidth(g);
      doc["treewidth"] = tw.width;
      doc["is_partial_r_tree"] = is_partial_r_tree(g, r);
    }
    std::cout << doc.dump(2) << '\n';
  });

  auto* rembed = rtree->add_subcommand("embed", "An r-tree containing the 1-skeleton of an MCC");
  rembed->add_option("file", in_path)->required();
  rembed->add_option("--out", out_path);
  bind(rembed, "rtree embed", [&] {
    const auto y = as_pure(load_complex(in_path));
    emit(graph_to_json(embed_in_r_tree(y)) + '\n', out_path);
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Explicit complexes");
  construct->require_subcommand(1);
  int degree = 0, order = 0, free_rank = 0;
  std::vector<long> torsion;
  auto* cone = construct->add_subcommand("cone", "Cone-augment a connected complex to dimension r");
  cone->add_option("file", in_path)->required();
  cone->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  cone->add_option("--out", out_path);
  bind(cone, "construct cone", [&] { emit(complex_to_json(cone_augment(load_complex(in_path), r).complex()) + '\n', out_path); });

  auto* sphere = construct->add_subcommand("sphere", "Boundary of the (i+1)-simplex");
  sphere->add_option("--i", degree)->required();
  sphere->add_option("--out", out_path);
  bind(sphere, "construct sphere", [&] { emit(complex_to_json(sphere_triangulation(degree)) + '\n', out_path); });

  auto* moore = construct->add_subcommand("moore", "Moore space with H_k = Z_m");
  moore->add_option("--m", order)->required();
  moore->add_option("--k", degree)->required();
  moore->add_option("--out", out_path);
  bind(moore, "construct moore", [&] { emit(complex_to_json(moore_space(order, degree)) + '\n', out_path); });

  auto* group = construct->add_subcommand("group", "Member of M_r(n) with a prescribed H_k");
  group->add_option("--free", free_rank)->check(CLI::NonNegativeNumber);
  group->add_option("--torsion", torsion, "Torsion orders, comma separated")->delimiter(',');
  group->add_option("--k", degree)->required();
  group->add_option("--r", r)->required();
  group->add_option("--out", out_path);
  bind(group, "construct group", [&] {
    const auto y = realize_group(GroupSpec{free_rank, torsion}, degree, r);
    session.summary["n"] = y.vertex_count();
    emit(complex_to_json(y.complex()) + '\n', out_path);
  });

  // random
  auto* random = app.add_subcommand("random", "Random pure r-complexes");
  random->require_subcommand(1);
  double alpha_min = 0, alpha_max = 0, p = 0;
  int steps = 0;
  std::size_t trials = 0;
  auto* sweep = random->add_subcommand("sweep", "Event frequencies over an alpha grid, p = alpha log n / n^r");
  sweep->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--alpha-min", alpha_min)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--alpha-max", alpha_max)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path);
  bind(sweep, "random sweep", [&] {
    const auto rows = threshold_sweep(n, r, alpha_grid(alpha_min, alpha_max, steps), trials, seed, workers);
    session.summary["rows"] = rows.size();
    emit(sweep_csv(rows), out_path);
  });

  auto* samp = random->add_subcommand("sample", "One sample of the model");
  samp->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  samp->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  samp->add_option("--p", p)->required()->check(CLI::Range(0.0, 1.0));
  samp->add_option("--out", out_path);
  bind(samp, "random sample", [&] {
    const auto y = sample({n, r, p, seed});
    session.summary["facets"] = y.facet_count();
    emit(complex_to_json(y.complex()) + '\n', out_path);
  });

  // qfunc
  auto* qfunc = app.add_subcommand("qfunc", "Exact q_r(n, x) over [r+1, n/2]");
  std::string alpha_text;
  bool scan = false;
  qfunc->add_option("--n", n)->required();
  qfunc->add_option("--r", r)->required();
  qfunc->add_option("--alpha", alpha_text, "Rational such as 1, 2/3 or 0.75")->required();
  qfunc->add_flag("--scan", scan, "Emit every x as CSV");
  qfunc->add_option("--out", out_path);
  bind(qfunc, "qfunc", [&] {
    const auto alpha = parse_rational(alpha_text);
    if (scan) {
      const auto values = q_scan(n, r, alpha);
      emit(q_scan_csv(values), out_path);
      if (alpha > fraction(factorial(static_cast<unsigned>(r)), r + 1)) {
        const auto rep = endpoint_max_check(values);
        session.summary["argmax"] = rep.argmax;
        session.summary["argmax_at_endpoint"] = rep.argmax_at_endpoint;
      }
      return;
    }
    const auto rep = endpoint_max_check(n, r, alpha);
    const auto slope = initial_slope_check(n, r, alpha);
    Json doc{{"n", n},
             {"r", r},
             {"alpha", rational_text(alpha)},
             {"points", rep.points},
             {"argmax", rep.argmax},
             {"argmax_at_endpoint", rep.argmax_at_endpoint},
             {"max", rational_text(rep.max_value)},
             {"max_float", rep.max_value.get_d()},
             {"sign_changes", rep.sign_changes},
             {"epsilon", rational_text(rep.epsilon)},
             {"fitted_c", rational_text(rep.fitted_c)},
             {"lower_endpoint", {{"x", rep.lower_x}, {"q", rep.lower_value.get_d()},
                                 {"limit", lower_endpoint_limit(r, alpha).get_d()}}},
             {"upper_endpoint", {{"x", rep.upper_x}, {"q", rep.upper_value.get_d()},
                                 {"stated_limit", upper_endpoint_limit(r, alpha).get_d()},
                                 {"leading_term", upper_endpoint_leading_term(r, alpha).get_d()}}},
             {"initial_slope", {{"decreasing", slope.decreasing}, {"difference", slope.difference.get_d()},
                                {"derivative", slope.derivative.get_d()}, {"target", slope.target.get_d()},
                                {"derivative_ratio", slope.derivative_ratio.get_d()},
                                {"difference_ratio", slope.difference_ratio.get_d()}}}};
    emit(doc.dump(2) + '\n', out_path);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the claim checks at a named scale");
  std::string scale_name;
  verify->add_option("scale", scale_name)->required()->check(CLI::IsMember({"smoke", "desk", "extended"}));
  bind(verify, "verify", [&] {
    const auto report = verify_all(parse_scale(scale_name), workers, seed);
    for (const auto& c : report.claims) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.claim << " cases=" << c.cases << " seconds=" << c.seconds;
      if (!c.detail.empty()) std::cout << " detail=" << c.detail;
      std::cout << '\n';
    }
    session.summary["claims"] = report.claims.size();
    session.summary["failed"] = std::count_if(report.claims.begin(), report.claims.end(),
                                              [](const ClaimResult& c) { return !c.passed; });
    if (!report.passed()) session.status = kVerificationFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    action();
  } catch (const BudgetExceeded& e) {
    session.status = kBudget;
    error = e.what();
  } catch (const IoError& e) {
    session.status = kIo;
    error = e.what();
  } catch (const DomainError& e) {
    session.status = kDomain;
    error = e.what();
  } catch (const InvariantViolation& e) {
    session.status = kInvariant;
    error = e.what();
  }
  if (!error.empty()) std::cerr << "error: " << error << '\n';

  Json summary{{"command", session.command}, {"exit_code", session.status}};
  summary["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  summary.update(session.summary);
  std::cerr << summary.dump() << '\n';
  return session.status;
}
