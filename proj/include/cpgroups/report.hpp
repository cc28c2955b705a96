#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpgroups/finite_group.hpp"
#include "cpgroups/metric.hpp"
#include "cpgroups/structure.hpp"

namespace cpg {

enum class Format { Text, Records, Csv };
std::optional<Format> parse_format(const std::string& s);

/// "a=(1 2)(3 4)[o=2] b=(1 3)[o=2] ab[o=4]" style rendering.
std::string render_witness(const FiniteGroup& g, const Witness& w);

std::string class_report_text(const FiniteGroup& g, const ClassReport& r);
/// One key=value per line.
std::string class_report_records(const FiniteGroup& g, const ClassReport& r);

struct ClassifyRow {
  std::string name;
  std::size_t order = 0;
  bool cp = false;
  bool cp2 = false;
  bool cp3 = false;
  bool solvable = false;
  std::optional<PGroupInfo> p_group;
  std::size_t derived_length = 0;  // meaningful when solvable
};

std::string p_group_field(const std::optional<PGroupInfo>& info);
std::string render_classify(const std::vector<ClassifyRow>& rows, Format format);

/// Header of element labels, then one row of distances per element.
std::string distance_csv(const FiniteGroup& g, const std::vector<std::uint32_t>& matrix);

/// One hex bitset per line.
std::string subgroup_list_hex(const std::vector<SubgroupSet>& subgroups);

}  // namespace cpg
