// dev scratch: classify candidate constructions for orders 16, 18, 20, 24
#include <cstdio>
#include <string>
#include <vector>

#include "nilact/constructions.hpp"
#include "nilact/frattini.hpp"

using namespace nilact;

static GroupRef from_gens(const GenSet& g) { return group_from_perms(g.degree, g.gens); }

int main() {
  auto c = [&](int n) { return from_gens(cyclic_gens(n)); };
  auto prod = [&](GroupRef a, GroupRef b) { return direct_product_table(a, b); };

  std::vector<std::pair<std::string, GroupRef>> g16;
  g16.emplace_back("C16", c(16));
  g16.emplace_back("C2xC8", prod(c(2), c(8)));
  g16.emplace_back("C4xC4", prod(c(4), c(4)));
  g16.emplace_back("C2xC2xC4", prod(prod(c(2), c(2)), c(4)));
  g16.emplace_back("C2^4", prod(prod(c(2), c(2)), prod(c(2), c(2))));
  g16.emplace_back("D16", from_gens(dihedral_gens(8)));
  g16.emplace_back("SD16", semidirect_cyclic_table(8, 2, 3));
  g16.emplace_back("M16", semidirect_cyclic_table(8, 2, 5));
  g16.emplace_back("Q16", dicyclic_table(4));
  g16.emplace_back("D8xC2", prod(from_gens(dihedral_gens(4)), c(2)));
  g16.emplace_back("Q8xC2", prod(dicyclic_table(2), c(2)));
  g16.emplace_back("C4:C4", semidirect_cyclic_table(4, 4, 3));
  {
    // (C2xC2) x| C4, the C4 swapping the coordinates
    AbTable v4 = ab_to_table(AbGroup::from_factors({2, 2}));
    GroupRef c4 = c(4);
    Action a = action_from_generator_images(c4, v4.table, {parse_cycles("(1 2)", 4)});
    g16.emplace_back("V4:C4", semidirect_table(a));
  }
  {
    // central product D8 o C4: centre of D8 is r^2
    GroupRef d8 = from_gens(dihedral_gens(4));
    Subgroup z = center(d8);
    int zd = -1;
    for (int x : z.members)
      if (x != d8->identity) zd = x;
    GroupRef c4 = c(4);
    int z4 = -1;
    for (int x = 0; x < 4; ++x)
      if (element_order(*c4, x) == 2) z4 = x;
    g16.emplace_back("D8oC4", central_product_table(d8, c4, zd, z4));
  }

  printf("order 16 candidates: %zu\n", g16.size());
  for (size_t i = 0; i < g16.size(); ++i)
    for (size_t j = i + 1; j < g16.size(); ++j)
      if (is_isomorphic(g16[i].second, g16[j].second))
        printf("  ISO: %s == %s\n", g16[i].first.c_str(), g16[j].first.c_str());

  // order 24
  std::vector<std::pair<std::string, GroupRef>> g24;
  g24.emplace_back("C24", c(24));
  g24.emplace_back("C2xC12", prod(c(2), c(12)));
  g24.emplace_back("C2xC2xC6", prod(prod(c(2), c(2)), c(6)));
  g24.emplace_back("S4", from_gens(symmetric_gens(4)));
  g24.emplace_back("A4xC2", prod(from_gens(alternating_gens(4)), c(2)));
  {
    // SL(2,3) = Q8 x| C3 cycling i -> j -> k
    GroupRef q8 = dicyclic_table(2);
    int a = q8->generators[0], b = q8->generators[1];
    int ab = q8->mul(a, b);
    Permutation sigma;
    bool found = false;
    for (const Permutation& phi : automorphism_perms(q8))
      if (phi(a) == b && phi(b) == ab) {
        sigma = phi;
        found = true;
        break;
      }
    printf("Q8 triple automorphism found: %d\n", found ? 1 : 0);
    Action act = action_from_generator_images(c(3), q8, {sigma});
    g24.emplace_back("SL23", semidirect_table(act));
  }
  g24.emplace_back("D24", from_gens(dihedral_gens(12)));
  g24.emplace_back("Dic24", dicyclic_table(6));
  g24.emplace_back("C3:C8", semidirect_cyclic_table(3, 8, 2));
  g24.emplace_back("S3xC4", prod(from_gens(symmetric_gens(3)), c(4)));
  g24.emplace_back("D8xC3", prod(from_gens(dihedral_gens(4)), c(3)));
  g24.emplace_back("Q8xC3", prod(dicyclic_table(2), c(3)));
  g24.emplace_back("Dic12xC2", prod(dicyclic_table(3), c(2)));
  g24.emplace_back("D12xC2", prod(from_gens(dihedral_gens(6)), c(2)));
  // candidates for the 15th group
  g24.emplace_back("C12:C2_k5", semidirect_cyclic_table(12, 2, 5));
  g24.emplace_back("C12:C2_k7", semidirect_cyclic_table(12, 2, 7));

  printf("order 24 candidates: %zu\n", g24.size());
  for (size_t i = 0; i < g24.size(); ++i)
    for (size_t j = i + 1; j < g24.size(); ++j)
      if (is_isomorphic(g24[i].second, g24[j].second))
        printf("  ISO: %s == %s\n", g24[i].first.c_str(), g24[j].first.c_str());

  // order 18 and 20 sanity
  {
    AbTable e9 = ab_to_table(AbGroup::from_factors({3, 3}));
    Permutation inv;
    inv.images.resize(9);
    for (int x = 0; x < 9; ++x) inv.images[static_cast<size_t>(x)] = e9.table->inv(x);
    Action a = action_from_generator_images(c(2), e9.table, {inv});
    GroupRef e9c2 = semidirect_table(a);
    std::vector<std::pair<std::string, GroupRef>> g18;
    g18.emplace_back("C18", c(18));
    g18.emplace_back("C3xC6", prod(c(3), c(6)));
    g18.emplace_back("D18", from_gens(dihedral_gens(9)));
    g18.emplace_back("S3xC3", prod(from_gens(symmetric_gens(3)), c(3)));
    g18.emplace_back("E9:C2", e9c2);
    printf("order 18 candidates: %zu\n", g18.size());
    for (size_t i = 0; i < g18.size(); ++i)
      for (size_t j = i + 1; j < g18.size(); ++j)
        if (is_isomorphic(g18[i].second, g18[j].second))
          printf("  ISO: %s == %s\n", g18[i].first.c_str(), g18[j].first.c_str());
  }
  {
    std::vector<std::pair<std::string, GroupRef>> g20;
    g20.emplace_back("C20", c(20));
    g20.emplace_back("C2xC10", prod(c(2), c(10)));
    g20.emplace_back("D20", from_gens(dihedral_gens(10)));
    g20.emplace_back("Dic20", dicyclic_table(5));
    g20.emplace_back("F20", semidirect_cyclic_table(5, 4, 2));
    printf("order 20 candidates: %zu\n", g20.size());
    for (size_t i = 0; i < g20.size(); ++i)
      for (size_t j = i + 1; j < g20.size(); ++j)
        if (is_isomorphic(g20[i].second, g20[j].second))
          printf("  ISO: %s == %s\n", g20[i].first.c_str(), g20[j].first.c_str());
  }
  // check the planned taut-autV4 images satisfy the S3 relations
  {
    GroupRef s3 = from_gens(symmetric_gens(3));
    AbTable v4 = ab_to_table(AbGroup::from_factors({2, 2}));
    AbGroup sh = v4.shape;
    AbHom m0 = make_hom(sh, sh, {0, 1, 1, 0});
    AbHom m1 = make_hom(sh, sh, {0, 1, 1, 1});
    try {
      Action a = action_from_generator_images(
          s3, v4.table, {hom_to_perm(m0, v4), hom_to_perm(m1, v4)});
      printf("taut-autV4 images ok, faithful image order: ");
      Action f = faithful_image_action(a);
      printf("%d\n", f.actor->order);
    } catch (const Error& e) {
      printf("taut-autV4 images FAILED: %s\n", e.what());
      AbHom m1b = make_hom(sh, sh, {1, 1, 1, 0});
      try {
        Action a2 = action_from_generator_images(
            s3, v4.table, {hom_to_perm(m0, v4), hom_to_perm(m1b, v4)});
        printf("alternative image [1 1; 1 0] works, faithful order %d\n",
               faithful_image_action(a2).actor->order);
      } catch (const Error& e2) {
        printf("alternative also failed: %s\n", e2.what());
      }
    }
  }
  return 0;
}
