"""Reduction of cyclotomic integers modulo a fixed prime ideal above p.

The target field F_{p^f} is realised as Z/p[x] modulo a deterministically
chosen irreducible polynomial, so that repeated runs always pick the same
ideal and hence the same block partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CycloError, CycloNum, p_part


class ResidueError(ValueError):
    pass


# -- polynomial helpers over Z/p (coefficient lists, ascending) -------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, mod, p)


def _poly_rem(a, mod, p):
    a = a[:]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return _poly_trim(a[:dm])

def _poly_powmod(a, e, mod, p):
    result = [1]
    base = _poly_rem(a[:], mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        a, b = b, _poly_rem(a, b, p)
        b = _poly_trim(b)
    return a


def _is_irreducible(g: list[int], p: int) -> bool:
    f = len(g) - 1
    x = [0, 1]
    # x^(p^f) = x mod g, and x^(p^(f/q)) - x coprime to g for prime q | f
    if _poly_powmod(x, p ** f, g, p) != _poly_rem(x[:], g, p):
        return False
    m = f
    q = 2
    while q * q <= m:
        while m % q == 0:
            m //= q
            xq = _poly_powmod(x, p ** (f // q), g, p)
            diff = _poly_trim([(a - b) % p for a, b in
                               zip(xq + [0] * len(x), [0, 1] + [0] * len(xq))])
            if len(_poly_gcd(g, diff, p)) != 1:
                return False
        q += 1
    if m > 1:
        xq = _poly_powmod(x, p ** (f // m), g, p)
        diff = _poly_trim([(a - b) % p for a, b in
                           zip(xq + [0] * len(x), [0, 1] + [0] * len(xq))])
        if len(_poly_gcd(g, diff, p)) != 1:
            return False
    return True


@dataclass(frozen=True)
class PrimeFieldElem:
    """Element of F_{p^f}: coefficient vector modulo the field's modulus."""

    field: "ResidueMap"
    coords: tuple[int, ...]

    def __add__(self, other: "PrimeFieldElem") -> "PrimeFieldElem":
        assert self.field is other.field
        p = self.field.p
        return PrimeFieldElem(self.field, tuple((a + b) % p for a, b in
                                                zip(self.coords, other.coords)))

    def __mul__(self, other: "PrimeFieldElem") -> "PrimeFieldElem":
        assert self.field is other.field
        m = self.field
        prod = _poly_mulmod(list(self.coords), list(other.coords), list(m.modulus), m.p)
        return m._elem(prod)

    def __pow__(self, e: int) -> "PrimeFieldElem":
        m = self.field
        return m._elem(_poly_powmod(list(self.coords), e, list(m.modulus), m.p))

    def __bool__(self) -> bool:
        return any(self.coords)

    def mult_order(self) -> int:
        if not self:
            raise ResidueError("zero has no multiplicative order")
        k, acc = 1, self
        one = self.field.one
        while acc != one:
            acc = acc * self
            k += 1
        return k


@dataclass(frozen=True, eq=False)
class ResidueMap:
    """Ring homomorphism Z[zeta_N] -> F_{p^f} with zeta_{p^a} -> 1."""

    ambient_order: int
    p: int
    field_degree: int
    modulus: tuple[int, ...]       # monic irreducible over Z/p, ascending coeffs
    root_image: "PrimeFieldElem"   # image of zeta_{n'}, n' the p'-part of N

    def _elem(self, coeffs: list[int]) -> PrimeFieldElem:
        coeffs = list(coeffs) + [0] * (self.field_degree - len(coeffs))
        return PrimeFieldElem(self, tuple(c % self.p for c in coeffs[: self.field_degree]))

    @property
    def one(self) -> PrimeFieldElem:
        return self._elem([1])

    @property
    def zero(self) -> PrimeFieldElem:
        return self._elem([])

    def from_int(self, n: int) -> PrimeFieldElem:
        return self._elem([n % self.p])


def _multiplicative_order(p: int, n: int) -> int:
    f, acc = 1, p % n
    while acc != 1:
        acc = acc * p % n
        f += 1
    return f


@lru_cache(maxsize=None)
def build_residue_map(N: int, p: int) -> ResidueMap:
    """Deterministic residue map for Q(zeta_N) at the prime p."""
    if N < 1:
        raise ResidueError(f"ambient order must be positive, got {N}")
    pa = p_part(N, p)
    nprime = N // pa
    f = 1 if nprime == 1 else _multiplicative_order(p, nprime)
    # lexicographic search for the modulus: low coefficients as base-p digits
    modulus = None
    for code in range(p ** f):
        coeffs = [(code // p ** i) % p for i in range(f)] + [1]
        if _is_irreducible(coeffs, p):
            modulus = tuple(coeffs)
            break
    assert modulus is not None
    m = ResidueMap(N, p, f, modulus, None)  # type: ignore[arg-type]
    # least primitive element in the same coefficient order
    size = p ** f
    primitive = None
    for code in range(1, size):
        cand = m._elem([(code // p ** i) % p for i in range(f)])
        if cand.mult_order() == size - 1:
            primitive = cand
            break
    assert primitive is not None
    root = primitive ** ((size - 1) // nprime)
    object.__setattr__(m, "root_image", root)
    return m


def reduce_cyclo(m: ResidueMap, a: CycloNum) -> PrimeFieldElem:
    """Image of an integral cyclotomic number under the residue map."""
    if not a.is_algebraic_integer():
        raise ResidueError(f"cannot reduce a non-integral value: {a}")
    N = m.ambient_order
    if N % a.order != 0:
        raise CycloError(
            f"value of order {a.order} does not embed in the ambient Q(zeta_{N})")
    pa = p_part(N, m.p)
    nprime = N // pa
    # zeta_N = zeta_{p^a}^c * zeta_{n'}^d with d * p^a = 1 mod n'
    if nprime == 1:
        zeta_n_image = m.one
    else:
        d = pow(pa, -1, nprime)
        zeta_n_image = m.root_image ** d
    base = zeta_n_image ** (N // a.order)  # image of zeta_{order(a)}
    out = m.zero
    power = m.one
    prev_e = 0
    for e, c in sorted(a.exponent_coeffs().items()):
        power = power * base ** (e - prev_e)
        prev_e = e
        out = out + m.from_int(int(c)) * power
    return out
