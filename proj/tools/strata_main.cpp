#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "strata/bounds.hpp"
#include "strata/jacobian.hpp"
#include "strata/naive_orbits.hpp"
#include "strata/parse.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string words_of_tuple(const FiniteGroup& g, const std::vector<int>& tuple) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ", ";
    os << g.label(tuple[i]);
  }
  os << ")";
  return os.str();
}

int run_signature(const std::string& text, long long order, long long localize,
                  bool json) {
  Signature sig = parse_signature(text);
  Json j;
  j["signature"] = sig.str();
  j["normalized_area"] = rational_str(normalized_area(sig));
  j["euler_characteristic"] = rational_str(euler_characteristic(sig));
  j["degenerate"] = is_degenerate(sig);
  j["nilpotent_admissible"] = is_nilpotent_admissible(sig);
  j["hyperbolic"] = is_hyperbolic(sig);
  if (is_hyperbolic(sig)) {
    j["teichmuller_dim"] = teichmuller_dim(sig);
  }
  if (localize > 0) {
    j["localization"] = p_localization(sig, localize).str();
  }
  if (order > 0) {
    j["riemann_hurwitz_genus"] = rational_str(riemann_hurwitz_genus(sig, order));
  }
  if (json) {
    print_json(j);
    return 0;
  }
  std::cout << "signature            " << sig.str() << "\n";
  std::cout << "normalized area      " << j["normalized_area"].get<std::string>()
            << "\n";
  std::cout << "euler characteristic "
            << j["euler_characteristic"].get<std::string>() << "\n";
  std::cout << "degenerate           " << (is_degenerate(sig) ? "yes" : "no")
            << "\n";
  std::cout << "nilpotent admissible "
            << (is_nilpotent_admissible(sig) ? "yes" : "no") << "\n";
  if (is_hyperbolic(sig)) {
    std::cout << "teichmuller dim      " << teichmuller_dim(sig) << "\n";
  } else {
    std::cout << "teichmuller dim      - (not Fuchsian)\n";
  }
  if (localize > 0) {
    std::cout << localize << "-localization       "
              << j["localization"].get<std::string>() << "\n";
  }
  if (order > 0) {
    std::cout << "genus at order " << order << "   "
              << j["riemann_hurwitz_genus"].get<std::string>() << "\n";
  }
  return 0;
}

int run_bound(const std::string& cls_text, int d, bool json) {
  GroupClass cls = cls_text == "nilpotent"
                       ? GroupClass::nilpotent()
                       : GroupClass::prime(std::stoll(cls_text));
  auto result = bound_result(cls, d);
  if (json) {
    print_json(to_json(result));
    return 0;
  }
  std::cout << "class        " << cls.str() << "\n";
  std::cout << "dimension    " << d << "\n";
  std::cout << "max order    " << rational_str(result.coefficient)
            << " * (g-1)\n";
  std::cout << "attained at  ";
  for (size_t i = 0; i < result.extremal.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << result.extremal[i].str();
  }
  std::cout << "\n";
  return 0;
}

int run_search(const std::string& cls_text, int d, bool json) {
  MinAreaResult res;
  GroupClass cls = cls_text == "nilpotent"
                       ? GroupClass::nilpotent()
                       : GroupClass::prime(std::stoll(cls_text));
  if (cls.is_nilpotent_class()) {
    res = min_area_search(d, SearchConstraint::nilpotent_admissible);
  } else {
    res = min_area_search(d, SearchConstraint::periods_p_powers, cls.p);
  }
  Json j;
  j["class"] = cls.str();
  j["d"] = d;
  j["min_normalized_area"] = rational_str(res.min_area);
  j["argmin"] = Json::array();
  for (const auto& sig : res.argmin) j["argmin"].push_back(sig.str());
  j["signatures_searched"] = res.searched;
  if (json) {
    print_json(j);
    return 0;
  }
  std::cout << "class              " << cls.str() << "\n";
  std::cout << "dimension          " << d << "\n";
  std::cout << "minimal area       " << rational_str(res.min_area) << "\n";
  std::cout << "minimizers         ";
  for (size_t i = 0; i < res.argmin.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << res.argmin[i].str();
  }
  std::cout << "\n";
  std::cout << "searched           " << res.searched << " signatures\n";
  return 0;
}

int run_enumerate(const std::string& sig_text, const std::string& group_text,
                  int cap, long long limit, bool json) {
  Signature sig = parse_signature(sig_text);
  FiniteGroup g = parse_group_spec(group_text, cap);
  auto all = enumerate_actions(sig, g);
  Json j;
  j["signature"] = sig.str();
  j["group"] = g.name();
  j["count"] = all.size();
  j["epimorphisms"] = Json::array();
  for (size_t i = 0; i < all.size() && i < static_cast<size_t>(limit); ++i) {
    Json words = Json::array();
    for (int x : all[i].tuple()) words.push_back(g.label(x));
    j["epimorphisms"].push_back(std::move(words));
  }
  if (json) {
    print_json(j);
    return 0;
  }
  std::cout << all.size() << " surface-kernel epimorphisms " << sig.str()
            << " -> " << g.name() << "\n";
  for (size_t i = 0; i < all.size() && i < static_cast<size_t>(limit); ++i) {
    std::cout << "  " << words_of_tuple(g, all[i].tuple()) << "\n";
  }
  if (all.size() > static_cast<size_t>(limit)) {
    std::cout << "  ... (" << all.size() - limit << " more; raise --limit)\n";
  }
  return 0;
}

int run_classify(const std::string& sig_text, const std::string& group_text,
                 int cap, bool json) {
  Signature sig = parse_signature(sig_text);
  FiniteGroup g = parse_group_spec(group_text, cap);
  auto report = classify(sig, g);
  if (json) {
    print_json(to_json(report));
    return 0;
  }
  std::cout << report.total << " epimorphisms " << sig.str() << " -> "
            << g.name() << " fall into " << report.orbits.size()
            << " orbit(s)\n";
  std::cout << "moves: " << report.move_set << "\n";
  for (size_t i = 0; i < report.orbits.size(); ++i) {
    std::cout << "  orbit " << i << ": size " << report.orbits[i].size
              << ", representative (";
    for (size_t k = 0; k < report.orbits[i].representative_words.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << report.orbits[i].representative_words[k];
    }
    std::cout << ")\n";
  }
  return 0;
}

int run_jacobian(const std::string& sig_text, const std::string& group_text,
                 const std::string& images, const std::string& quotient,
                 int cap, bool json) {
  Signature sig = parse_signature(sig_text);
  FiniteGroup g = parse_group_spec(group_text, cap);
  SurfaceKernelEpimorphism theta{sig, &g, {}, {}};
  if (!images.empty()) {
    std::vector<int> elems;
    std::stringstream ss(images);
    std::string part;
    while (std::getline(ss, part, ',')) elems.push_back(eval_word(g, part));
    size_t h2 = 2 * static_cast<size_t>(sig.genus());
    if (elems.size() != h2 + sig.periods().size()) {
      throw std::invalid_argument("--images needs " +
                                  std::to_string(h2 + sig.periods().size()) +
                                  " comma-separated words");
    }
    theta.hyperbolic_images.assign(elems.begin(), elems.begin() + h2);
    theta.period_images.assign(elems.begin() + h2, elems.end());
    auto check = is_surface_kernel(theta);
    if (!check.ok) {
      throw std::invalid_argument("--images is not surface-kernel: " +
                                  check.violation);
    }
  } else {
    auto all = enumerate_actions(sig, g);
    if (all.empty()) {
      std::cerr << "no surface-kernel epimorphism " << sig.str() << " -> "
                << g.name() << "\n";
      return 1;
    }
    theta = all.front();
  }
  auto ctx = make_jacobian_context(g);
  DecompositionReport report = [&] {
    if (quotient.empty()) return group_algebra_decomposition(ctx, theta);
    std::vector<int> sub;
    std::stringstream ss(quotient);
    std::string part;
    while (std::getline(ss, part, ',')) sub.push_back(eval_word(g, part));
    return quotient_decomposition(ctx, theta, subgroup_generated(g, sub));
  }();
  if (json) {
    print_json(to_json(report));
    return 0;
  }
  std::cout << "decomposition for " << sig.str() << " -> " << g.name();
  if (!report.subgroup_label.empty()) {
    std::cout << ", quotient by " << report.subgroup_label;
  }
  std::cout << "\n";
  std::cout << "epimorphism " << words_of_tuple(g, theta.tuple()) << "\n";
  std::cout << "  irrep   d_V   k_V   n_j   dim B_j\n";
  for (const auto& f : report.factors) {
    if (f.dim == 0 && f.multiplicity == 0) continue;
    std::printf("  %5d %5lld %5lld %5lld %9lld\n", f.irrep, f.degree,
                f.field_degree, f.multiplicity, f.dim);
  }
  std::cout << "total " << report.total() << " = genus " << report.genus
            << "\n";
  return 0;
}

int run_family(const std::string& group_text, int cap, bool json) {
  FiniteGroup g = parse_group_spec(group_text, cap);
  Signature sig = [&]() -> Signature {
    if (g.name().rfind("G2", 0) == 0) return Signature(0, {2, 2, 2, 4});
    if (g.name().rfind("Gp", 0) == 0) return Signature(1, {p_group_prime(g)});
    throw std::invalid_argument("family analysis needs a G2:... or Gp:... group");
  }();
  auto classified = classify_with_members(sig, g);
  auto ctx = make_jacobian_context(g);
  auto theta = classified.all.empty() ? SurfaceKernelEpimorphism{sig, &g, {}, {}}
                                      : classified.all.front();
  Json j;
  j["group"] = g.name();
  j["order"] = g.size();
  j["signature"] = sig.str();
  j["genus"] = rational_str(riemann_hurwitz_genus(sig, g.size()));
  j["epimorphisms"] = classified.report.total;
  j["orbits"] = classified.report.orbits.size();
  j["move_set"] = classified.report.move_set;
  j["maximality"] = [&] {
    auto m = maximality_lookup(sig);
    switch (m.status) {
      case MaximalityInfo::Status::maximal: return Json("maximal");
      case MaximalityInfo::Status::extends_to: {
        Json arr = Json::array();
        for (const auto& s : m.extensions) arr.push_back(s.str());
        return Json{{"extends_to", arr}};
      }
      default: return Json("unknown");
    }
  }();
  if (!classified.all.empty()) {
    j["decomposition"] = to_json(group_algebra_decomposition(ctx, theta));
  }
  if (json) {
    print_json(j);
    return 0;
  }
  std::cout << "family       " << g.name() << " (order " << g.size() << ")\n";
  std::cout << "signature    " << sig.str() << ", genus "
            << j["genus"].get<std::string>() << "\n";
  std::cout << "actions      " << classified.report.total << " epimorphisms in "
            << classified.report.orbits.size() << " orbit(s)\n";
  std::cout << "maximality   " << j["maximality"].dump() << "\n";
  if (!classified.all.empty()) {
    std::cout << "jacobian     total " << j["decomposition"]["total"]
              << " = genus " << j["decomposition"]["genus"] << "\n";
  }
  return 0;
}

int run_verify(const std::string& scale_text, bool inject_fault, bool json) {
  Scale scale = scale_text == "full" ? Scale::full : Scale::quick;
  auto report = run_verification(scale, inject_fault);
  if (json) {
    print_json(verification_to_json(report));
  } else {
    std::cout << render_text(report);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "strata - sharp bounds, action classification and Jacobian "
      "decomposition for nilpotent and p-group actions on families of "
      "Riemann surfaces"};
  app.require_subcommand(1);
  bool json = false;
  int cap = FiniteGroup::kDefaultCap;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--cap", cap, "group size cap for permutation closures");

  std::string sig_text, group_text, cls_text = "nilpotent", images, quotient;
  std::string scale_text = "quick";
  int d = 1;
  long long order = 0, localize = 0, limit = 20;
  bool inject_fault = false;

  auto* sig_cmd = app.add_subcommand("signature", "signature invariants");
  sig_cmd->add_option("signature", sig_text, "e.g. \"(0; 2,2,2,4)\"")->required();
  sig_cmd->add_option("--order", order, "cover degree for the genus computation");
  sig_cmd->add_option("--localize", localize, "prime for the localization");

  auto* bound_cmd = app.add_subcommand("bound", "closed-form maximal order");
  bound_cmd->add_option("--class", cls_text, "nilpotent (default) or a prime");
  bound_cmd->add_option("--d", d, "family dimension")->required();

  auto* search_cmd =
      app.add_subcommand("search", "exhaustive minimal-area search");
  search_cmd->add_option("--class", cls_text, "nilpotent (default) or a prime");
  search_cmd->add_option("--d", d, "family dimension")->required();

  auto* enum_cmd =
      app.add_subcommand("enumerate", "surface-kernel epimorphisms");
  enum_cmd->add_option("--sig", sig_text, "signature")->required();
  enum_cmd->add_option("--group", group_text, "G2:n=.. | Gp:p=..,n=.. | perm:[..]")
      ->required();
  enum_cmd->add_option("--limit", limit, "how many tuples to print");

  auto* classify_cmd =
      app.add_subcommand("classify", "orbits under automorphisms and moves");
  classify_cmd->add_option("--sig", sig_text, "signature")->required();
  classify_cmd->add_option("--group", group_text, "group spec")->required();

  auto* jac_cmd = app.add_subcommand("jacobian", "group algebra decomposition");
  jac_cmd->add_option("--sig", sig_text, "signature")->required();
  jac_cmd->add_option("--group", group_text, "group spec")->required();
  jac_cmd->add_option("--images", images,
                      "comma-separated generator words for the epimorphism");
  jac_cmd->add_option("--quotient", quotient,
                      "words generating a subgroup H: decompose JC_H");

  auto* family_cmd =
      app.add_subcommand("family", "full analysis of a built-in family member");
  family_cmd->add_option("--group", group_text, "G2:n=.. or Gp:p=..,n=..")
      ->required();

  auto* verify_cmd =
      app.add_subcommand("verify-paper", "run the built-in verification checks");
  verify_cmd->add_option("--scale", scale_text, "quick (default) or full");
  verify_cmd
      ->add_flag("--inject-fault", inject_fault,
                 "corrupt one expected value (harness self-test)")
      ->group("");  // hidden

  // Let --json and --cap appear after the subcommand name as well.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (*sig_cmd) return run_signature(sig_text, order, localize, json);
    if (*bound_cmd) return run_bound(cls_text, d, json);
    if (*search_cmd) return run_search(cls_text, d, json);
    if (*enum_cmd) return run_enumerate(sig_text, group_text, cap, limit, json);
    if (*classify_cmd) return run_classify(sig_text, group_text, cap, json);
    if (*jac_cmd)
      return run_jacobian(sig_text, group_text, images, quotient, cap, json);
    if (*family_cmd) return run_family(group_text, cap, json);
    if (*verify_cmd) return run_verify(scale_text, inject_fault, json);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    // Semantically unusable input (e.g. a non-Fuchsian signature).
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
