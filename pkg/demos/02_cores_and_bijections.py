"""t-cores as integer vectors, and pairs of cores as one vector."""
from hooklab.cores import (
    all_reductions, delta_profile, gks_phi, gks_phi_inv, make_pair,
    pair_to_dd, phi1, phi2, t_core_reduce, t_cores, varphi, varphi_inv,
)
from hooklab.partitions import make_partition

p = make_partition([7, 6, 4, 2, 2, 1])
print("3-core of", p, "is", t_core_reduce(p, 3))
print("removal orders agree:", len(all_reductions(p, 3)) == 1)

core = make_partition([7, 5, 3, 1, 1])
v = gks_phi(core, 3)
print("\nvector of", core, "=", v.entries, " back:", gks_phi_inv(v))
print("3-cores of weight <= 10:", [str(c) for c in t_cores(3, 10)])

sc, dd = make_partition([7, 5, 3, 2, 2, 1, 1]), make_partition([5, 3, 1, 1])
print("\nphi1", sc, "->", phi1(sc, 3).entries)
print("phi2", dd, "->", phi2(dd, 3).entries)

pair = make_pair(sc, dd, 3)
n = varphi(pair).entries
prof = delta_profile(pair)
print("pair ->", n, " Delta =", sorted(prof.delta, reverse=True))
print("Delta_i", prof.delta_i, "signs", prof.sigma_i)
print("inverse recovers pair:", varphi_inv(n) == pair)
print("doubled distinct partner:", pair_to_dd(pair))
