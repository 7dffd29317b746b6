"""Relative cofinality, Tukey morphisms, and the unbounded-counter lift.

A pair of subfamilies inside a finite preorder has a relative
cofinality: the least number of candidates dominating every obligation,
or UNDEFINED when some obligation is out of reach.  Morphisms that
preserve cofinal families are recognized by a polynomial criterion,
cross-checked against literal quantification.  Products with a counter
are handled two ways: bounded truncations (whose cofinality provably
stabilizes at the base value) and a symbolic lift (where only OMEGA or
UNDEFINED can answer, because fixed families go stale).
"""

from selgames import (
    brute_tukey_oracle,
    check_tukey_map,
    inclusion_pair,
    lift_omega_cof,
    relative_cofinality,
    truncate_product,
)
from selgames.orders import is_cofinal, projection_map

print("== relative cofinality under inclusion")
pairs_vs_singletons = inclusion_pair([0b011, 0b110, 0b101], [1, 2, 4])
print("pairs over singletons:", relative_cofinality(pairs_vs_singletons))
antichain = inclusion_pair([1, 2, 4], [1, 2, 4])
print("antichain over itself:", relative_cofinality(antichain))
unreachable = inclusion_pair([1], [0b11])
print("obligation above every candidate:", relative_cofinality(unreachable))

print("\n== the morphism criterion equals the brute oracle")
src = inclusion_pair([1, 3, 7], [1, 3])
phi = {a: a for a in src.sub_a}
print("identity map accepted:", check_tukey_map(phi, src, src),
      "| oracle:", brute_tukey_oracle(phi, src, src))

print("\n== truncated products stabilize at the base value")
base = inclusion_pair([1, 2, 4], [1, 2, 4])
for bound in (2, 3, 4):
    prod = truncate_product(base, bound)
    proj = projection_map(prod, base)
    print(f"counter bound {bound}: projection validates"
          f" {check_tukey_map(proj, prod, base)},"
          f" cofinality {relative_cofinality(prod)}")

print("\n== but any fixed family goes stale as the bound rises")
prod2 = truncate_product(base, 2)
prod3 = truncate_product(base, 3)
pos3 = {prod3.carrier[i]: i for i in prod3.sub_a}
embedded = [pos3[prod2.carrier[i]] for i in prod2.sub_a]
print("all bound-2 candidates dominate bound-2 obligations:",
      is_cofinal(prod2, prod2.sub_a))
print("the same candidates dominate bound-3 obligations:",
      is_cofinal(prod3, embedded))

print("\n== hence the symbolic lift")
print("base 3, obligations present ->",
      lift_omega_cof(relative_cofinality(base), b_empty=False))
print("no obligations ->", lift_omega_cof(relative_cofinality(base), b_empty=True))
print("undefined base ->",
      lift_omega_cof(relative_cofinality(unreachable), b_empty=False))
