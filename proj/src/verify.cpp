#include "cpgroups/verify.hpp"

#include <exception>

#include "cpgroups/catalog.hpp"
#include "cpgroups/errors.hpp"
#include "cpgroups/metric.hpp"
#include "cpgroups/structure.hpp"
#include "cpgroups/subgroups.hpp"

namespace cpg {

namespace {

// Runs f on every entry concurrently; results come back in entry order.
template <class R, class F>
std::vector<R> map_entries(const std::vector<CatalogEntry>& entries, F&& f) {
  std::vector<R> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(entries.size()); ++i) {
    try {
      results[i] = f(entries[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

bool in_cp3(const FiniteGroup& g, const OrderTable& t) {
  return is_cp3(g, t, Execution::Serial).member;
}

struct Outcome {
  bool relevant = false;
  bool ok = true;
  std::string line;
  std::size_t tally = 0;     // target-specific count
  std::size_t tally_of = 0;
};

void collect(VerifyResult& result, const std::vector<Outcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (!o.relevant) continue;
    if (!o.ok) result.pass = false;
    if (!o.line.empty()) result.lines.push_back(o.line);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

VerifyResult theorem1(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  const auto entries = catalog_iter(max_order);
  auto outcomes = map_entries<Outcome>(entries, [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    const auto t = order_table(g);
    Outcome o;
    o.relevant = true;
    const bool cp3 = in_cp3(g, t);
    const auto cp = is_cp(g, t);
    o.tally = cp3 ? 1 : 0;
    if (cp3 && !cp.member) {
      o.ok = false;
      o.line = "COUNTEREXAMPLE " + e.name + " is in CP3 but not CP: " +
               render_witness(g, *cp.witness);
    }
    return o;
  });
  std::size_t cp3_count = 0;
  for (const auto& o : outcomes) cp3_count += o.tally;
  collect(result, outcomes);
  result.lines.push_back("checked " + std::to_string(entries.size()) + " catalog groups of order <= " +
                         std::to_string(max_order) + "; " + std::to_string(cp3_count) +
                         " lie in CP3, all of them in CP");

  auto s4 = symmetric(4, limits);
  const auto t = order_table(s4);
  const auto cp = is_cp(s4, t);
  const auto cp3 = is_cp3(s4, t);
  if (cp.member && !cp3.member) {
    result.lines.push_back("symmetric:4 separates CP3 from CP: in CP, not in CP3 (" +
                           render_witness(s4, *cp3.witness) + ")");
  } else {
    result.pass = false;
    result.lines.push_back("symmetric:4 fails to separate: cp=" + yes_no(cp.member) +
                           " cp3=" + yes_no(cp3.member));
  }
  return result;
}

VerifyResult theorem2(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  auto outcomes = map_entries<Outcome>(catalog_iter(max_order), [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    Outcome o;
    if (!in_cp3(g, order_table(g))) return o;
    o.relevant = true;
    const auto scan = abelian_subgroup_scan(g, limits);
    o.ok = scan.verdict;
    std::string line = e.name + ": " + std::to_string(scan.abelian.size()) + " abelian subgroups";
    if (scan.verdict) {
      o.line = line + ", all p-groups";
    } else {
      for (const auto& a : scan.abelian)
        if (!a.p_group) {
          o.line = "COUNTEREXAMPLE " + line + "; abelian subgroup of order " +
                   std::to_string(a.members.count()) + " is not a p-group: " + a.members.to_hex();
          break;
        }
    }
    return o;
  });
  collect(result, outcomes);
  return result;
}

VerifyResult theorem3(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  std::vector<CatalogEntry> pgroups;
  for (auto& e : catalog_iter(max_order))
    if (p_group_of_order(e.order)) pgroups.push_back(std::move(e));

  auto outcomes = map_entries<Outcome>(pgroups, [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    const auto t = order_table(g);
    Outcome o;
    o.relevant = true;
    const bool cp3 = in_cp3(g, t);
    const bool cp2 = is_cp2(g, t, Execution::Serial).member;
    if (cp3 != cp2) {
      o.ok = false;
      o.line = "COUNTEREXAMPLE " + e.name + ": cp3=" + yes_no(cp3) + " cp2=" + yes_no(cp2);
      return o;
    }
    if (cp3) {
      const auto layers = layer_check(g, t);
      std::string sizes;
      for (const auto& l : layers.layers) sizes += (sizes.empty() ? "" : ",") + std::to_string(l.size);
      if (!layers.all_normal_subgroups()) {
        o.ok = false;
        o.line = "COUNTEREXAMPLE " + e.name + " is in CP3 but some layer is not a normal subgroup"
                 " (layer sizes " + sizes + ")";
      } else {
        o.line = e.name + ": in CP3 and CP2; layers " + sizes + " all normal";
      }
    } else {
      o.line = e.name + ": in neither CP3 nor CP2";
    }
    return o;
  });
  collect(result, outcomes);
  result.lines.push_back("checked " + std::to_string(pgroups.size()) + " catalog p-groups of order <= " +
                         std::to_string(max_order));
  return result;
}

VerifyResult theorem4(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 17u}) {
    auto g = psl2(q, limits);
    const auto t = order_table(g);
    const bool cp3 = in_cp3(g, t);
    std::string line = "psl2:" + std::to_string(q) + " order " + std::to_string(g.order()) +
                       " (formula " + std::to_string(psl2_order(q)) + ")";
    if (g.order() != psl2_order(q)) result.pass = false;
    if (q < 4) {
      line += cp3 ? ": in CP3" : ": NOT in CP3 (unexpected)";
      if (!cp3) result.pass = false;
    } else {
      const auto hit = involution_witness(g, t);
      const bool simple = normal_subgroups(g).size() == 2;
      if (cp3 || !hit || !simple) result.pass = false;
      line += std::string(cp3 ? ": in CP3 (unexpected)" : ": not in CP3") +
              (simple ? ", simple" : ", NOT simple (unexpected)");
      if (hit) {
        line += "; involutions " + g.label(hit->a) + " and " + g.label(hit->b) +
                " have product of order " + std::to_string(hit->ab_order);
      } else {
        line += "; no involution pair with product order > 3";
      }
    }
    result.lines.push_back(line);
  }

  auto a5 = alternating(5, limits);
  const bool a5_simple = normal_subgroups(a5).size() == 2;
  if (!a5_simple) result.pass = false;
  result.lines.push_back(std::string("alternating:5 ") + (a5_simple ? "simple" : "NOT simple") +
                         " by the normal-subgroup scan");

  std::vector<CatalogEntry> candidates;
  for (auto& e : catalog_iter(max_order)) {
    // cyclic, elementary abelian and products of cyclic groups are abelian by construction
    if (e.family == Family::Cyclic || e.family == Family::ElementaryAbelian ||
        e.family == Family::Product)
      continue;
    candidates.push_back(std::move(e));
  }
  auto outcomes = map_entries<Outcome>(candidates, [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    Outcome o;
    if (is_abelian(g) || !is_simple(g)) return o;
    o.relevant = true;
    const auto t = order_table(g);
    const auto cp3 = is_cp3(g, t, Execution::Serial);
    o.ok = !cp3.member;
    o.line = o.ok ? e.name + ": nonabelian simple, not in CP3 (" + render_witness(g, *cp3.witness) + ")"
                  : "COUNTEREXAMPLE " + e.name + ": nonabelian simple group in CP3";
    return o;
  });
  collect(result, outcomes);
  result.lines.push_back("scanned " + std::to_string(candidates.size()) +
                         " nonabelian-family catalog groups of order <= " + std::to_string(max_order));
  return result;
}

VerifyResult conjecture5(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  auto outcomes = map_entries<Outcome>(catalog_iter(max_order), [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    Outcome o;
    if (!in_cp3(g, order_table(g))) return o;
    o.relevant = true;
    const auto series = derived_series(g);
    o.ok = series.back().count() == 1;
    std::string sizes;
    for (const auto& s : series) sizes += (sizes.empty() ? "" : " > ") + std::to_string(s.count());
    o.line = o.ok ? e.name + ": solvable, derived length " + std::to_string(series.size() - 1) +
                        " (" + sizes + ")"
                  : "COUNTEREXAMPLE " + e.name + ": in CP3 but not solvable (" + sizes + ")";
    return o;
  });
  std::size_t counterexamples = 0;
  for (const auto& o : outcomes)
    if (o.relevant && !o.ok) ++counterexamples;
  collect(result, outcomes);
  result.lines.push_back(std::to_string(counterexamples) + " counterexamples among CP3 catalog groups of order <= " +
                         std::to_string(max_order));
  return result;
}

VerifyResult subgroup_closure(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  const auto pred = cp3_predicate();
  auto outcomes = map_entries<Outcome>(catalog_iter(max_order), [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    Outcome o;
    if (!in_cp3(g, order_table(g))) return o;
    o.relevant = true;
    const auto report = hereditary_check(g, pred, limits);
    o.ok = report.holds();
    o.line = e.name + ": " + std::to_string(report.subgroups_checked) + " subgroups, " +
             std::to_string(report.violations.size()) + " outside CP3";
    if (!o.ok) o.line = "COUNTEREXAMPLE " + o.line + " (first " + report.violations.front().to_hex() + ")";
    return o;
  });
  collect(result, outcomes);
  return result;
}

VerifyResult problem1(std::size_t max_order, const Limits& limits) {
  VerifyResult result;
  result.conclusive = false;
  const auto pred = cp3_predicate();
  std::size_t quotients = 0, outside = 0;
  auto outcomes = map_entries<Outcome>(catalog_iter(max_order), [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    Outcome o;
    if (!in_cp3(g, order_table(g))) return o;
    o.relevant = true;
    const auto scan = quotient_scan(g, pred);
    std::size_t in = 0;
    for (const auto& obs : scan.observations) in += obs.verdict ? 1 : 0;
    o.tally_of = scan.observations.size();
    o.tally = in;
    o.line = e.name + ": " + std::to_string(o.tally_of) + " normal subgroups, " +
             std::to_string(in) + " quotients in CP3";
    return o;
  });
  for (const auto& o : outcomes) {
    quotients += o.tally_of;
    outside += o.tally_of - o.tally;
  }
  collect(result, outcomes);
  result.lines.push_back("observed " + std::to_string(quotients) + " quotients of CP3 catalog groups, " +
                         std::to_string(outside) + " outside CP3 (observational data only)");
  return result;
}

}  // namespace

std::optional<VerifyTarget> parse_verify_target(std::string_view name) {
  if (name == "theorem1") return VerifyTarget::Theorem1;
  if (name == "theorem2") return VerifyTarget::Theorem2;
  if (name == "theorem3") return VerifyTarget::Theorem3;
  if (name == "theorem4") return VerifyTarget::Theorem4;
  if (name == "conjecture5") return VerifyTarget::Conjecture5;
  if (name == "subgroup-closure") return VerifyTarget::SubgroupClosure;
  if (name == "problem1") return VerifyTarget::Problem1;
  return std::nullopt;
}

const char* to_string(VerifyTarget target) {
  switch (target) {
    case VerifyTarget::Theorem1: return "theorem1";
    case VerifyTarget::Theorem2: return "theorem2";
    case VerifyTarget::Theorem3: return "theorem3";
    case VerifyTarget::Theorem4: return "theorem4";
    case VerifyTarget::Conjecture5: return "conjecture5";
    case VerifyTarget::SubgroupClosure: return "subgroup-closure";
    case VerifyTarget::Problem1: return "problem1";
  }
  return "unknown";
}

std::size_t default_max_order(VerifyTarget target) {
  switch (target) {
    case VerifyTarget::Theorem3: return 256;
    case VerifyTarget::Theorem4: return 2500;
    default: return 200;
  }
}

std::string VerifyResult::render() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  if (!conclusive) out += "RESULT: observations recorded (non-conclusive; no claim is made)\n";
  else out += pass ? "RESULT: pass\n" : "RESULT: FAIL\n";
  return out;
}

VerifyResult verify(VerifyTarget target, const VerifyOptions& options) {
  const std::size_t max_order = options.max_order.value_or(default_max_order(target));
  if (max_order > options.limits.max_elements)
    fail(ErrorKind::CapExceeded, "max order exceeds the element cap");
  switch (target) {
    case VerifyTarget::Theorem1: return theorem1(max_order, options.limits);
    case VerifyTarget::Theorem2: return theorem2(max_order, options.limits);
    case VerifyTarget::Theorem3: return theorem3(max_order, options.limits);
    case VerifyTarget::Theorem4: return theorem4(max_order, options.limits);
    case VerifyTarget::Conjecture5: return conjecture5(max_order, options.limits);
    case VerifyTarget::SubgroupClosure: return subgroup_closure(max_order, options.limits);
    case VerifyTarget::Problem1: return problem1(max_order, options.limits);
  }
  fail(ErrorKind::InvalidInput, "unknown verify target");
}

std::vector<ClassifyRow> classify_catalog(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.max_elements)
    fail(ErrorKind::CapExceeded, "max order exceeds the element cap");
  return map_entries<ClassifyRow>(catalog_iter(max_order), [&](const CatalogEntry& e) {
    auto g = e.build(limits);
    const auto t = order_table(g);
    ClassifyRow row;
    row.name = e.name;
    row.order = g.order();
    row.cp = is_cp(g, t).member;
    row.cp2 = is_cp2(g, t, Execution::Serial).member;
    row.cp3 = is_cp3(g, t, Execution::Serial).member;
    const auto series = derived_series(g);
    row.solvable = series.back().count() == 1;
    row.derived_length = series.size() - 1;
    row.p_group = is_p_group(g);
    return row;
  });
}

}  // namespace cpg
