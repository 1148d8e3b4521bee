#include "fusionloc/perm.h"

#include <numeric>
#include <sstream>

#include "fusionloc/errors.h"

namespace fusionloc {

Perm::Perm(size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InputError("image list is not a bijection");
    }
    seen[x] = true;
  }
}

Perm Perm::FromOneBased(const std::vector<long>& images) {
  std::vector<Point> zero(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || static_cast<size_t>(images[i]) > images.size()) {
      throw InputError("image " + std::to_string(images[i]) +
                       " out of range 1.." + std::to_string(images.size()));
    }
    zero[i] = static_cast<Point>(images[i] - 1);
  }
  return Perm(std::move(zero));
}

Perm Perm::FromCycles(size_t degree, std::string_view text) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle string");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw InputError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw InputError("bad character in cycle string");
      long v = std::stol(std::string(text.substr(start, i - start)));
      if (v < 1 || static_cast<size_t>(v) > degree) {
        throw InputError("point " + std::to_string(v) + " exceeds degree");
      }
      Point p = static_cast<Point>(v - 1);
      if (used[p]) throw InputError("point repeated in cycle string");
      used[p] = true;
      cycle.push_back(p);
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& other) const {
  if (other.degree() != degree()) throw InputError("degree mismatch");
  Perm r;
  r.images_.resize(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) {
    r.images_[x] = other.images_[images_[x]];
  }
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) {
    r.images_[images_[x]] = static_cast<Point>(x);
  }
  return r;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  Perm result(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  uint64_t ord = 1;
  for (size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::ToCycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    Point y = static_cast<Point>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << (y + 1);
      first = false;
      y = images_[y];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::vector<long> Perm::OneBased() const {
  std::vector<long> r(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) r[i] = images_[i] + 1;
  return r;
}

size_t PermHash::operator()(const Perm& p) const {
  uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

Perm Conjugate(const Perm& g, const Perm& h) { return h.inverse() * g * h; }

}  // namespace fusionloc
