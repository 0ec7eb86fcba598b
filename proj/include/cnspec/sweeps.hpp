#pragma once

#include <set>
#include <string>
#include <vector>

#include "cnspec/group_spec.hpp"
#include "cnspec/pipeline.hpp"

namespace cnspec {

namespace sweep_detail {

class Collector {
 public:
  void add(const GroupSpec& s, std::uint64_t max_order = 512) {
    if (expected_order(s) > max_order) return;
    if (seen_.insert(display_name(s)).second) out_.push_back(s);
  }
  std::vector<GroupSpec> take() { return std::move(out_); }

 private:
  std::set<std::string> seen_;
  std::vector<GroupSpec> out_;
};

inline std::uint32_t u(long v) { return static_cast<std::uint32_t>(v); }

}  // namespace sweep_detail

/// Every constructible family instance of order <= 512 checked for route agreement.
inline std::vector<GroupSpec> agreement_instances() {
  using sweep_detail::u;
  sweep_detail::Collector c;
  for (long n = 4; n <= 8; ++n) c.add(QuasidihedralSpec{u(n)});
  c.add(SL2Spec{4});
  c.add(GL2Spec{3});
  c.add(GL2Spec{4});
  for (long n = 2; n <= 3; ++n) c.add(HanakiNuSpec{u(n)});
  c.add(HanakiPSpec{2, 1});
  c.add(HanakiPSpec{3, 1});
  c.add(HanakiPSpec{2, 2});
  for (long m = 3; m <= 30; ++m) c.add(DihedralSpec{u(m)});
  for (long n = 2; n <= 15; ++n) c.add(DicyclicSpec{u(n)});
  for (long m = 3; m <= 16; ++m)
    for (long n = 1; n <= 6; ++n) c.add(MetacyclicSpec{u(m), u(n)});
  for (long n = 1; n <= 12; ++n) c.add(U6nSpec{u(n)});
  for (long z = 1; z <= 12; ++z) c.add(realize_sz2(z));
  for (long p : {2, 3, 5})
    for (long a = 1; a <= 10; ++a) c.add(realize_zpzp(p, p * a));
  return c.take();
}

/// Agreement instances plus the classification ranges and boundaries.
inline std::vector<GroupSpec> verdict_instances() {
  using sweep_detail::u;
  sweep_detail::Collector c;
  for (const auto& s : agreement_instances()) c.add(s);
  c.add(QuasidihedralSpec{9});
  c.add(SL2Spec{8}, 504);
  c.add(GL2Spec{5});
  for (long z = 1; z <= 20; ++z) c.add(realize_sz2(z));
  for (long p : {2, 3, 5})
    for (long z = p; z <= 10; z += p) c.add(realize_zpzp(p, z));
  for (long m = 2; m <= 13; ++m)
    for (long z = 1; z <= 20; ++z) {
      if (m % 2 == 0 && z % 2 == 1) continue;
      c.add(realize_d2m(m, z));
    }
  for (long n = 5; n <= 7; ++n) c.add(DicyclicSpec{u(n)});
  return c.take();
}

}  // namespace cnspec
