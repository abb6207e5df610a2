#include "permlab/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace permlab {

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> moved(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (cyc.size() > 1) {
        if (moved[from]) throw std::invalid_argument("cycles are not disjoint");
        moved[from] = true;
        p.img_[from] = static_cast<std::uint16_t>(to);
      }
    }
  }
  return p;
}

Perm Perm::then(const Perm& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<std::uint16_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[i] = next.img_[img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<std::uint16_t>(i);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long Perm::order() const {
  long ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start]) continue;
    long len = 0;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      i = img_[i];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == start) continue;
    std::vector<int> cyc;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      cyc.push_back(static_cast<int>(i));
      i = img_[i];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) { return a.then(b); }

Perm conjugate(const Perm& h, const Perm& g) { return g.inverse().then(h).then(g); }

std::string format_cycles(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

} // namespace permlab
