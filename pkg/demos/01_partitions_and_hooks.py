"""Hook lengths, Frobenius coordinates and the two special families."""
from hooklab.partitions import (
    classify, conjugate, durfee, enumerate_partitions, frobenius,
    hook_multiset, make_partition, principal_hooks,
)

lam = make_partition([7, 5, 3, 2, 2, 1, 1])
print("lambda          ", lam)
print("conjugate       ", conjugate(lam))
print("self-conjugate? ", classify(lam)[0])
print("Frobenius       ", frobenius(lam))
print("principal hooks ", principal_hooks(lam))
print("Durfee, sign    ", durfee(lam))

# the sign attached to each box: -1 strictly below the diagonal
mu = make_partition([5, 3, 1, 1])
print("\nhooks of", mu, "with signs")
for b in hook_multiset(mu):
    print(f"  box ({b.row},{b.col})  hook {b.hook:2d}  eps {b.epsilon:+d}")

# small censuses
for kind in ("self_conjugate", "doubled_distinct"):
    counts = [sum(1 for _ in enumerate_partitions(kind, n)) for n in range(16)]
    print(f"\n{kind:17s}", counts)
