#ifndef FUSIONLOC_PERM_H_
#define FUSIONLOC_PERM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fusionloc {

using Point = uint32_t;

// A permutation of {0, ..., degree-1}. Groups act on the right:
// x^(gh) = (x^g)^h, so (g * h)[x] == h[g[x]].
// Text I/O is 1-based, matching the group file format.
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t degree);
  // Throws InputError unless `images` is a bijection on {0..n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm FromOneBased(const std::vector<long>& images);
  // Parses cycle notation such as "(1 2 3)(4 5)" or "()".
  static Perm FromCycles(size_t degree, std::string_view text);

  size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm pow(long k) const;
  bool is_identity() const;
  uint64_t order() const;

  // 1-based cycle notation; identity prints as "()".
  std::string ToCycles() const;
  std::vector<long> OneBased() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const;
};

// Conjugate g^h = h^-1 g h.
Perm Conjugate(const Perm& g, const Perm& h);

}  // namespace fusionloc

#endif  // FUSIONLOC_PERM_H_
