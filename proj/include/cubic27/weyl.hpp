#pragma once

#include <unordered_map>

#include "cubic27/tables.hpp"
#include "cubic27/gf.hpp"

namespace cubic {

// abstract 27-line labels: 0..5 E1..E6, 6..20 F_ij (lex i<j), 21..26 G1..G6
using Perm27 = std::array<uint8_t, 27>;

int label_E(int i);           // 1-based
int label_F(int i, int j);    // 1 <= i < j <= 6
int label_G(int i);
std::string label_name(int idx);

const std::array<std::array<uint8_t, 27>, 27>& abstract_incidence();
/// 45 tritangent trios as sorted label triples
const std::vector<std::array<uint8_t, 3>>& abstract_trios();
/// trio index containing both labels, -1 when skew
int trio_of_pair(int a, int b);
/// 36 double-sixers, each as 12 sorted labels (two skew sixes)
const std::vector<std::array<uint8_t, 12>>& abstract_double_sixers();

bool perm_preserves_incidence(const Perm27& w);
Perm27 perm_compose(const Perm27& a, const Perm27& b);  // (a*b)(x) = a(b(x))
Perm27 perm_inverse(const Perm27& a);
Perm27 perm_identity();
Perm27 perm_from_s6(const std::array<int, 6>& sigma);   // 0-based images
int perm_order(const Perm27& a);

struct Perm27Hash {
  size_t operator()(const Perm27& p) const {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : p) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }
};

/// the full incidence-automorphism group of the 27 abstract lines
struct WE6 {
  std::vector<Perm27> elems;  // 51840, sorted
  std::unordered_map<Perm27, uint32_t, Perm27Hash> index;
  uint32_t index_of(const Perm27& w) const;
};
const WE6& we6();

/// version-stamped on-disk cache of the permutation table
bool we6_save(const std::string& path);
/// load into the process-wide table before first use; false if unusable
bool we6_load(const std::string& path);

/// atlas conjugacy class via the characteristic polynomial on the root lattice
const WeylClassInfo& class_of(const Perm27& w);
int class_index_of(const Perm27& w);

// W(D5) on the 16 lines of a quartic del Pezzo surface, odd-weight F_2^5 model
/// the 16 odd-weight masks in canonical (sorted) order
const std::array<uint8_t, 16>& odd_vectors();
int odd_vector_index(uint8_t mask);
/// incidence in the model: two lines meet iff their masks differ in 4 bits
bool d5_meets(uint8_t a, uint8_t b);

struct D5Element {
  std::array<int, 5> sigma;   // bit permutation, image position of each bit
  std::array<int, 5> flip;    // target-bit translation component
  int table_index;            // row of weyl_d5_classes()
};
/// decompose an incidence-preserving permutation of the 16 model lines
D5Element d5_class_of(const std::array<uint8_t, 16>& perm16);

/// identify 16 abstract lines (with the given meets relation) with the
/// odd-weight model; result[i] = input index placed at odd_vectors()[i]
std::optional<std::array<int, 16>> d5_find_model(
    const std::array<std::array<uint8_t, 16>, 16>& meets);

}  // namespace cubic
