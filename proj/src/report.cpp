#include "cpgroups/report.hpp"

#include <iomanip>
#include <sstream>

namespace cpg {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string order_multiset(const ClassReport& r) {
  std::string out;
  for (const auto& [o, count] : r.order_counts) {
    if (!out.empty()) out += ",";
    out += std::to_string(o) + ":" + std::to_string(count);
  }
  return out;
}

std::string violation_note(const Witness& w) {
  switch (w.violated) {
    case Condition::CP2:
      return std::to_string(w.ab_order) + " > max(" + std::to_string(w.a_order) + ", " +
             std::to_string(w.b_order) + ")";
    case Condition::CP3:
    case Condition::Triangle:
      return std::to_string(w.ab_order) + " >= " + std::to_string(w.a_order) + " + " +
             std::to_string(w.b_order);
    default:
      return "";
  }
}

void witness_records(std::ostringstream& os, const std::string& key, const FiniteGroup& g,
                     const Witness& w) {
  if (w.split) {
    os << key << ".element=" << w.a << "\n";
    os << key << ".element_label=" << g.label(w.a) << "\n";
    os << key << ".element_order=" << w.a_order << "\n";
    os << key << ".p=" << w.split->p << "\n";
    os << key << ".q=" << w.split->q << "\n";
    os << key << ".p_part=" << g.label(w.split->p_part) << "\n";
    os << key << ".q_part=" << g.label(w.split->q_part) << "\n";
    os << key << ".product_order=" << w.split->product_order << "\n";
    return;
  }
  os << key << ".a=" << w.a << "\n";
  os << key << ".a_label=" << g.label(w.a) << "\n";
  os << key << ".b=" << w.b << "\n";
  os << key << ".b_label=" << g.label(w.b) << "\n";
  os << key << ".orders=" << w.a_order << "," << w.b_order << "," << w.ab_order << "\n";
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "records") return Format::Records;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

std::string render_witness(const FiniteGroup& g, const Witness& w) {
  std::ostringstream os;
  if (w.split) {
    const auto& s = *w.split;
    os << "x=" << g.label(w.a) << " [o=" << w.a_order << "] has commuting powers "
       << g.label(s.p_part) << " [o=" << s.p << "] and " << g.label(s.q_part) << " [o=" << s.q
       << "] whose product has order " << s.product_order;
    return os.str();
  }
  os << "a=" << g.label(w.a) << " [o=" << w.a_order << "], b=" << g.label(w.b)
     << " [o=" << w.b_order << "], ab=" << g.label(g.mul(w.a, w.b)) << " [o=" << w.ab_order
     << "]";
  const auto note = violation_note(w);
  if (!note.empty()) os << "; " << note;
  return os.str();
}

std::string class_report_text(const FiniteGroup& g, const ClassReport& r) {
  std::ostringstream os;
  os << "group:          " << r.name << "\n";
  os << "order:          " << r.order << "\n";
  os << "source:         " << to_string(g.source()) << "\n";
  os << "element orders: ";
  bool first = true;
  for (const auto& [o, count] : r.order_counts) {
    os << (first ? "" : ", ") << count << " of order " << o;
    first = false;
  }
  os << "\n";
  os << "CP:             " << yes_no(r.in_cp);
  if (r.cp_witness) os << "  (" << render_witness(g, *r.cp_witness) << ")";
  os << "\n";
  os << "CP2:            " << yes_no(r.in_cp2);
  if (r.cp2_witness) os << "  (" << render_witness(g, *r.cp2_witness) << ")";
  os << "\n";
  os << "CP3:            " << yes_no(r.in_cp3);
  if (r.cp3_witness) os << "  (" << render_witness(g, *r.cp3_witness) << ")";
  os << "\n";
  os << "d is a metric:  " << yes_no(r.axioms.identity && r.axioms.symmetry && r.axioms.triangle)
     << "  (identity " << yes_no(r.axioms.identity) << ", symmetry " << yes_no(r.axioms.symmetry)
     << ", triangle " << yes_no(r.axioms.triangle) << ")\n";
  if (r.axioms.triangle_triple) {
    const auto& t = *r.axioms.triangle_triple;
    os << "                d(" << g.label(t.x) << ", " << g.label(t.z) << ") > d(" << g.label(t.x)
       << ", " << g.label(t.y) << ") + d(" << g.label(t.y) << ", " << g.label(t.z) << ")\n";
  }
  os << "ultrametric:    " << yes_no(r.axioms.ultrametric) << "\n";
  if (r.axioms.audited) {
    os << "raw audit:      triangle " << yes_no(r.axioms.raw_triangle) << ", ultrametric "
       << yes_no(r.axioms.raw_ultrametric) << "\n";
  }
  return os.str();
}

std::string class_report_records(const FiniteGroup& g, const ClassReport& r) {
  std::ostringstream os;
  os << "name=" << r.name << "\n";
  os << "order=" << r.order << "\n";
  os << "source=" << to_string(g.source()) << "\n";
  os << "orders=" << order_multiset(r) << "\n";
  os << "in_cp=" << bool_str(r.in_cp) << "\n";
  os << "in_cp2=" << bool_str(r.in_cp2) << "\n";
  os << "in_cp3=" << bool_str(r.in_cp3) << "\n";
  if (r.cp_witness) witness_records(os, "cp_witness", g, *r.cp_witness);
  if (r.cp2_witness) witness_records(os, "cp2_witness", g, *r.cp2_witness);
  if (r.cp3_witness) witness_records(os, "cp3_witness", g, *r.cp3_witness);
  os << "axiom.identity=" << bool_str(r.axioms.identity) << "\n";
  os << "axiom.symmetry=" << bool_str(r.axioms.symmetry) << "\n";
  os << "axiom.triangle=" << bool_str(r.axioms.triangle) << "\n";
  os << "axiom.ultrametric=" << bool_str(r.axioms.ultrametric) << "\n";
  if (r.axioms.audited) {
    os << "audit.triangle=" << bool_str(r.axioms.raw_triangle) << "\n";
    os << "audit.ultrametric=" << bool_str(r.axioms.raw_ultrametric) << "\n";
  }
  return os.str();
}

std::string p_group_field(const std::optional<PGroupInfo>& info) {
  if (!info) return "none";
  if (info->trivial()) return "trivial";
  return std::to_string(info->prime);
}

std::string render_classify(const std::vector<ClassifyRow>& rows, Format format) {
  std::ostringstream os;
  auto derived = [](const ClassifyRow& r) {
    return r.solvable ? std::to_string(r.derived_length) : std::string("-");
  };
  switch (format) {
    case Format::Records:
      for (const auto& r : rows)
        os << "name=" << r.name << " order=" << r.order << " cp=" << bool_str(r.cp)
           << " cp2=" << bool_str(r.cp2) << " cp3=" << bool_str(r.cp3)
           << " solvable=" << bool_str(r.solvable) << " derived_length=" << derived(r)
           << " pgroup=" << p_group_field(r.p_group) << "\n";
      break;
    case Format::Csv:
      os << "name,order,cp,cp2,cp3,solvable,derived_length,pgroup\n";
      for (const auto& r : rows)
        os << csv_field(r.name) << "," << r.order << "," << bool_str(r.cp) << ","
           << bool_str(r.cp2) << "," << bool_str(r.cp3) << "," << bool_str(r.solvable) << ","
           << derived(r) << "," << p_group_field(r.p_group) << "\n";
      break;
    case Format::Text: {
      std::size_t width = 4;
      for (const auto& r : rows) width = std::max(width, r.name.size());
      os << std::left << std::setw(static_cast<int>(width)) << "name"
         << "  order  cp   cp2  cp3  solvable  dl  pgroup\n";
      for (const auto& r : rows)
        os << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::right
           << std::setw(5) << r.order << "  " << std::left << std::setw(3) << yes_no(r.cp) << "  "
           << std::setw(3) << yes_no(r.cp2) << "  " << std::setw(3) << yes_no(r.cp3) << "  "
           << std::setw(8) << yes_no(r.solvable) << "  " << std::setw(2) << derived(r) << "  "
           << p_group_field(r.p_group) << "\n";
      break;
    }
  }
  return os.str();
}

std::string distance_csv(const FiniteGroup& g, const std::vector<std::uint32_t>& matrix) {
  const std::size_t n = g.order();
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << csv_field(g.label(static_cast<Index>(i)));
  os << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << matrix[i * n + j];
    os << "\n";
  }
  return os.str();
}

std::string subgroup_list_hex(const std::vector<SubgroupSet>& subgroups) {
  std::string out;
  for (const auto& s : subgroups) out += s.to_hex() + "\n";
  return out;
}

}  // namespace cpg
