"""Exact arithmetic in cyclotomic fields.

Values are stored over the power basis of Q(zeta_n) with exact rational
coefficients, and every result is renormalised to its conductor: the
smallest field that actually contains it.
"""

from fractions import Fraction

from charcond import CycloNum, conductor, parse_cyclo

i = CycloNum.zeta(4)
print("i         =", i)
print("i^2       =", i * i)

# zeta_6 already lives in Q(zeta_3); the canonical order is never 2 mod 4
z6 = CycloNum.zeta(6)
print("zeta_6    =", z6, " (stored in Q(zeta_3), order", z6.order, ")")

# sqrt(5) as a Gauss sum over the 5th roots of unity
z = CycloNum.zeta(5)
sqrt5 = z - z.galois(2) - z.galois(3) + z.galois(4)
print("sqrt5^2   =", sqrt5 * sqrt5)
print("conductor of sqrt5:", conductor([sqrt5]))

# the golden ratio is an algebraic integer even with a denominator
phi = (CycloNum.from_rational(1) + sqrt5) * Fraction(1, 2)
print("(1+sqrt5)/2 integral?", phi.is_algebraic_integer())
print("1/2 integral?        ",
      CycloNum.from_rational(Fraction(1, 2)).is_algebraic_integer())

# the parser accepts the E(n) syntax used in the datasets
v = parse_cyclo("-E(5)-E(5)^4")
print("parse_cyclo('-E(5)-E(5)^4') =", v, " conductor", conductor([v]))
