"""Small facts checked with the exact oracles: the pathwidth of complete
binary trees with dominant vertices, the graph Q, the outerplanar doubling
family and certificates that a pattern is not a minor."""
import math

from circpw.gadgets import cbt_plus_dominants, named, outerplanar_family, proposition1_certificate
from circpw.graph import vertex_connectivity
from circpw.oracles import exact_pathwidth, minor_contains, transversal_number

# %% pathwidth of cbt(h) plus d dominants
print(f"{'h':>2} {'d':>2} {'n':>3} {'kappa':>5} {'pw':>3} {'ceil(h/2)+d':>12}")
for h in (1, 2, 3):
    for d in (0, 1, 2):
        g = cbt_plus_dominants(h, d)
        print(f"{h:>2} {d:>2} {g.n:>3} {vertex_connectivity(g):>5} {exact_pathwidth(g):>3} "
              f"{math.ceil(h / 2) + d:>12}")

# %% Q: transversal number 2, yet none of the usual minors
q = named("Q")
print("\ntau(Q) =", transversal_number(q))
for name in ("K4", "K23", "K3uK3"):
    print(f"  {name} minor in Q:", minor_contains(q, named(name)) is not None)

# %% the outerplanar family stays K4- and K23-free
for i in range(3):
    g = outerplanar_family(i)
    print(f"outerplanar({i}): n={g.n}",
          "K4" if minor_contains(g, named("K4")) else "no K4",
          "K23" if minor_contains(g, named("K23")) else "no K23")

# %% certificates
for name in ("K3uK3", "Q"):
    g, why = proposition1_certificate(named(name), 2)
    print(f"\n{name}: host with {g.n} vertices\n  {why}")
