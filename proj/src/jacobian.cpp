#include "strata/jacobian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strata {

JacobianContext make_jacobian_context(const FiniteGroup& g) {
  JacobianContext ctx{character_table(g), {}};
  ctx.irreps = rational_irreps(ctx.table);
  return ctx;
}

long long fixed_dim(const CharacterTable& table, int chi,
                    const std::vector<int>& subgroup) {
  const FiniteGroup& g = *table.group;
  std::vector<int> h = subgroup;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (h.empty() || subgroup_generated(g, h) != h) {
    throw std::invalid_argument("fixed_dim: not a subgroup");
  }
  CycNumber sum;
  for (int x : h) sum += table.value(chi, x);
  sum *= CycNumber::from_rational(Rational(1, static_cast<long long>(h.size())));
  Rational avg = sum.rational_part();  // throws "not rational" on a broken table
  if (!is_integer(avg) || avg < 0) {
    throw std::logic_error("fixed_dim: non-integral fixed space dimension");
  }
  return rational_to_int64(avg);
}

long long dim_factor(const JacobianContext& ctx,
                     const SurfaceKernelEpimorphism& theta,
                     const RationalIrrep& w) {
  if (w.trivial) {
    throw std::invalid_argument("dim_factor: trivial factor is the quotient genus");
  }
  const FiniteGroup& g = *theta.group;
  const int chi = w.members.front();
  const long long d = w.degree;
  const int h = theta.signature.genus();
  Rational inner = Rational(d) * (h - 1);
  for (int gamma : theta.period_images) {
    auto cyclic = subgroup_generated(g, {gamma});
    inner += Rational(d - fixed_dim(ctx.table, chi, cyclic), 2);
  }
  Rational dim = Rational(w.field_degree) * inner;
  if (!is_integer(dim) || dim < 0) {
    throw std::logic_error("dim_factor: non-integral factor dimension");
  }
  return rational_to_int64(dim);
}

long long DecompositionReport::total() const {
  long long t = 0;
  for (const auto& f : factors) t += f.multiplicity * f.dim;
  return t;
}

namespace {

DecompositionReport base_report(const JacobianContext& ctx,
                                const SurfaceKernelEpimorphism& theta) {
  DecompositionReport report{.group_name = theta.group->name(),
                             .signature = theta.signature};
  for (size_t j = 0; j < ctx.irreps.size(); ++j) {
    const RationalIrrep& w = ctx.irreps[j];
    DecompositionFactor f;
    f.irrep = static_cast<int>(j);
    f.degree = w.degree;
    f.field_degree = w.field_degree;
    f.dim = w.trivial ? theta.signature.genus() : dim_factor(ctx, theta, w);
    report.factors.push_back(f);
  }
  return report;
}

}  // namespace

DecompositionReport group_algebra_decomposition(
    const JacobianContext& ctx, const SurfaceKernelEpimorphism& theta) {
  auto check = is_surface_kernel(theta);
  if (!check.ok) {
    throw std::invalid_argument("group_algebra_decomposition: " + check.violation);
  }
  DecompositionReport report = base_report(ctx, theta);
  for (auto& f : report.factors) f.multiplicity = ctx.irreps[f.irrep].multiplicity;
  report.genus =
      rational_to_int64(riemann_hurwitz_genus(theta.signature, theta.group->size()));
  if (report.total() != report.genus) {
    std::ostringstream os;
    os << "decomposition inconsistent: factors sum to " << report.total()
       << " but the genus is " << report.genus;
    throw std::logic_error(os.str());
  }
  return report;
}

DecompositionReport group_algebra_decomposition(
    const SurfaceKernelEpimorphism& theta) {
  return group_algebra_decomposition(make_jacobian_context(*theta.group), theta);
}

DecompositionReport quotient_decomposition(const JacobianContext& ctx,
                                           const SurfaceKernelEpimorphism& theta,
                                           const std::vector<int>& subgroup) {
  auto check = is_surface_kernel(theta);
  if (!check.ok) {
    throw std::invalid_argument("quotient_decomposition: " + check.violation);
  }
  DecompositionReport report = base_report(ctx, theta);
  for (auto& f : report.factors) {
    f.multiplicity =
        fixed_dim(ctx.table, ctx.irreps[f.irrep].members.front(), subgroup);
  }
  {
    std::ostringstream os;
    os << "<";
    std::vector<int> h = subgroup;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    bool first = true;
    for (int x : h) {
      if (x == theta.group->identity()) continue;
      if (!first) os << ",";
      os << theta.group->label(x);
      first = false;
    }
    os << ">";
    report.subgroup_label = os.str();
  }
  report.genus = quotient_branch_data(theta, subgroup).genus;
  if (report.total() != report.genus) {
    std::ostringstream os;
    os << "decomposition inconsistent: induced factors sum to " << report.total()
       << " but the quotient genus is " << report.genus;
    throw std::logic_error(os.str());
  }
  return report;
}

DecompositionReport quotient_decomposition(const SurfaceKernelEpimorphism& theta,
                                           const std::vector<int>& subgroup) {
  return quotient_decomposition(make_jacobian_context(*theta.group), theta,
                                subgroup);
}

}  // namespace strata
