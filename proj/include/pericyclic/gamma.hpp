#pragma once

// Divisors on finite pointed sets: pushforward, the l1 condition cutting out
// O_infinity, smash products and the sign action of {-1, 0, 1}.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace peri {

struct PointedSet {
  std::vector<std::string> elements;
  int basepoint = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const std::string& name) const;
  friend bool operator==(const PointedSet&, const PointedSet&) = default;
};

/// Throws InputError on duplicate names or a missing basepoint.
PointedSet pointed_set(std::vector<std::string> elements, const std::string& basepoint);
/// {*, 1, ..., size-1} pointed at *.
PointedSet standard_pointed_set(int size);
/// {-1, 0, 1} pointed at 0.
PointedSet sign_set();

struct PointedMap {
  PointedSet src;
  PointedSet dst;
  std::vector<int> images;
};

/// Throws InputError on bad images and PreconditionError if the basepoint is
/// not preserved.
PointedMap pointed_map(PointedSet src, PointedSet dst, std::vector<int> images);
PointedMap identity_map(const PointedSet& x);
PointedMap compose(const PointedMap& g, const PointedMap& f);

struct Divisor {
  PointedSet carrier;
  std::vector<mpq_class> values;
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Throws InputError unless there is one value per element and the value at
/// the basepoint is 0.
Divisor divisor(PointedSet carrier, std::vector<mpq_class> values);
Divisor zero_divisor(const PointedSet& x);

Divisor pushforward(const PointedMap& f, const Divisor& d);
/// Same, writing into `out` and reusing its storage.
void pushforward(const PointedMap& f, const Divisor& d, Divisor& out);
mpq_class l1_norm(const Divisor& d);
bool oinfty_member(const Divisor& d);

struct SmashProduct {
  PointedSet set;
  std::vector<std::pair<int, int>> pairs;  // per element; the basepoint maps to (-1, -1)
};

SmashProduct smash(const PointedSet& x, const PointedSet& y);
Divisor divisor_smash(const Divisor& d, const Divisor& e);
/// sign in {-1, 0, 1}; throws InputError otherwise.
Divisor spm1_act(int sign, const Divisor& d);

std::string to_string(const Divisor& d);

}  // namespace peri
