#include "fusionprod/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusionprod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("Partition: negative part");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::stoi(cur));
  return Partition(parts);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: 1-based index");
  return i <= length() ? parts_[i - 1] : 0;
}

long long Partition::total() const {
  long long t = 0;
  for (int p : parts_) t += p;
  return t;
}

long long Partition::tail_sum(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::tail_sum: 1-based index");
  long long t = 0;
  for (int j = i; j <= length(); ++j) t += parts_[j - 1];
  return t;
}

std::string Partition::str() const {
  std::string out = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool dominates(const Partition& ell, const Partition& r) {
  if (ell.total() != r.total())
    throw std::invalid_argument("dominates: partitions have different totals");
  int p = std::max(ell.length(), r.length());
  for (int i = 1; i <= p; ++i)
    if (ell.tail_sum(i) < r.tail_sum(i)) return false;
  return true;
}

}  // namespace fusionprod
