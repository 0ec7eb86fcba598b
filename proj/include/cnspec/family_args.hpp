#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cnspec/error.hpp"
#include "cnspec/group_spec.hpp"
#include "cnspec/pipeline.hpp"

namespace cnspec {

/// "4", "4..7" or "2,3,5" (entries may themselves be ranges). Sorted, unique.
inline std::vector<long> parse_range(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::InvalidParams, "bad parameter range \"" + text + "\""); };
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) throw bad();
    return std::stol(s);
  };
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
    } else {
      const long lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
      if (hi < lo || hi - lo > 100000) throw bad();
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Parameter ranges as given on the command line, keyed by name.
using ParamRanges = std::map<std::string, std::string>;

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
};

inline const std::vector<FamilyInfo>& cli_families() {
  static const std::vector<FamilyInfo> list = {
      {"presented", {"m", "s", "t", "k"}},
      {"dihedral", {"m"}},
      {"qd", {"n"}},
      {"dicyclic", {"n"}},
      {"metacyclic", {"m", "n"}},
      {"u6n", {"n"}},
      {"sz2", {}},
      {"gl2", {"q"}},
      {"sl2", {"q"}},
      {"psl", {"k"}},
      {"hanaki-nu", {"n"}},
      {"hanaki-p", {"p", "n"}},
      {"heisenberg", {"p"}},
      {"sz2-quotient", {"z"}},
      {"zpzp-quotient", {"p", "z"}},
      {"d2m-quotient", {"m", "z"}},
  };
  return list;
}

inline const FamilyInfo& family_info(const std::string& name) {
  const std::string key = name == "quasidihedral" ? "qd" : name;
  for (const auto& f : cli_families())
    if (f.name == key) return f;
  throw Error(ErrorKind::InvalidParams, "unknown family \"" + name + "\"");
}

namespace family_args_detail {

inline std::uint32_t u(long v) {
  if (v < 0 || v > 1000000) throw Error(ErrorKind::InvalidParams, "parameter out of range");
  return static_cast<std::uint32_t>(v);
}

inline GroupSpec make(const std::string& family, const std::map<std::string, long>& p) {
  auto at = [&](const char* k) { return p.at(k); };
  if (family == "presented") return PresentedSpec{u(at("m")), u(at("s")), u(at("t")), u(at("k"))};
  if (family == "dihedral") return DihedralSpec{u(at("m"))};
  if (family == "qd") return QuasidihedralSpec{u(at("n"))};
  if (family == "dicyclic") return DicyclicSpec{u(at("n"))};
  if (family == "metacyclic") return MetacyclicSpec{u(at("m")), u(at("n"))};
  if (family == "u6n") return U6nSpec{u(at("n"))};
  if (family == "sz2") return Sz2Spec{};
  if (family == "gl2") return GL2Spec{u(at("q"))};
  if (family == "sl2") return SL2Spec{u(at("q"))};
  if (family == "psl") {
    const long k = at("k");
    if (k < 2 || k > 12) throw Error(ErrorKind::InvalidParams, "psl requires 2 <= k <= 12");
    return SL2Spec{u(1L << k)};
  }
  if (family == "hanaki-nu") return HanakiNuSpec{u(at("n"))};
  if (family == "hanaki-p") return HanakiPSpec{u(at("p")), u(at("n"))};
  if (family == "heisenberg") return HanakiPSpec{u(at("p")), 1};
  if (family == "sz2-quotient") return realize_sz2(at("z"));
  if (family == "zpzp-quotient") return realize_zpzp(at("p"), at("z"));
  if (family == "d2m-quotient") return realize_d2m(at("m"), at("z"));
  throw Error(ErrorKind::InvalidParams, "unknown family \"" + family + "\"");
}

}  // namespace family_args_detail

/// Cartesian product of the family's parameter ranges, in ascending order
/// (first parameter most significant). Ranges for parameters the family does
/// not use are ignored. hanaki-p defaults n to 1. abelian, when non-empty,
/// wraps every instance in a direct product.
inline std::vector<GroupSpec> expand_family(const std::string& family, const ParamRanges& ranges,
                                            const std::vector<std::uint32_t>& abelian = {}) {
  const FamilyInfo& info = family_info(family);
  std::vector<std::vector<long>> values;
  for (const auto& name : info.params) {
    auto it = ranges.find(name);
    if (it == ranges.end() || it->second.empty()) {
      if (info.name == "hanaki-p" && name == "n") {
        values.push_back({1});
        continue;
      }
      throw Error(ErrorKind::InvalidParams, "family " + info.name + " needs --" + name);
    }
    values.push_back(parse_range(it->second));
  }
  std::vector<GroupSpec> out;
  std::vector<std::size_t> idx(values.size(), 0);
  while (true) {
    std::map<std::string, long> p;
    for (std::size_t i = 0; i < values.size(); ++i) p[info.params[i]] = values[i][idx[i]];
    GroupSpec s = family_args_detail::make(info.name, p);
    out.push_back(abelian.empty() ? s : product(s, abelian));
    std::size_t i = values.size();
    while (i > 0) {
      --i;
      if (++idx[i] < values[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (values.empty()) return out;
  }
}

}  // namespace cnspec
