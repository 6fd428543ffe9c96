"""Exact truncated series: eta powers two ways and the text format."""
from hooklab.series import eta_power, exp_cross_check, format_series, parse_series, power_product

e = eta_power(3, 10)
print("eta^3 offset", e.offset)
print("coefficients", [int(c) for c in e.coeffs])  # Jacobi: only triangular exponents survive

# the same product through the exponential of a divisor sum
for k in (-2, 1, 5):
    assert power_product(k, 12) == exp_cross_check(k, 12)
print("product and exponential forms agree for exponents -2, 1, 5")

# partition numbers are the coefficients of the inverse product
print("p(n):", [int(c) for c in power_product(-1, 12).coeffs])

text = format_series(eta_power(1, 4))
print(text, end="")
assert parse_series(text) == eta_power(1, 4)
