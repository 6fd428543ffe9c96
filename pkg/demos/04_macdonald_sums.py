"""Lattice sums that reproduce powers of the eta function."""
from hooklab.macdonald import (
    lattice_spec, lattice_terms, macdonald_constant, macdonald_series, minimal_vector, verify_macdonald,
)
from hooklab.series import eta_power

for family, t in (("A", 3), ("C", 2), ("B", 3), ("BC", 2)):
    spec = lattice_spec(family, t)
    print(f"{family:2s} t={t}: eta^{spec.eta_exponent}, constant {macdonald_constant(family, t)}, "
          f"minimal vector {minimal_vector(spec)}")

# a few lattice points for type C at t=2
spec = lattice_spec("C", 2)
for v, exp, w in sorted(lattice_terms(spec, 3), key=lambda r: r[1]):
    print(f"  v={v}  exponent {exp}  weight {w}")

s = macdonald_series("C", 2, 8)
print("type C, t=2:", [int(c) for c in s.coeffs])
print("eta^10     :", [int(c) for c in eta_power(10, 8).coeffs])
print(verify_macdonald("BC", 3, 12))
