#pragma once

#include <string>
#include <vector>

namespace fusionprod {

/// Nonincreasing list of nonnegative integers.  Construction sorts the parts
/// descending and strips trailing zeros, so length() counts nonzero parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& comma_separated);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const;        // 1-based, 0 beyond the length
  long long total() const;
  /// Tail sum L_i = l_i + ... + l_p (1-based); 0 for i > length().
  long long tail_sum(int i) const;
  int max_part() const { return parts_.empty() ? 0 : parts_[0]; }

  bool operator==(const Partition&) const = default;
  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// Tail-sum dominance: every tail sum of ell is >= that of r.  Requires equal
/// totals (after zero padding); throws std::invalid_argument otherwise.
bool dominates(const Partition& ell, const Partition& r);

}  // namespace fusionprod
