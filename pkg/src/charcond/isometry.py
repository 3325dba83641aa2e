"""Perfect isometries between blocks: checking, exhaustive search, and the
conductor / vanishing-lattice preservation consequences.

A candidate is a signed bijection between the irreducible characters of two
blocks.  Perfection is the two standard conditions on the associated
character mu(g, g') = sum chi(g) Phi(chi)(g'): integrality (mu divided by
either centralizer order is p-locally integral) and separation (mu vanishes
when exactly one argument is p-regular).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm

from .blocks import Block
from .cyclo import CycloNum, ZERO
from .tables import GroupDataset, char_conductor, virtual_character


class IsometryError(ValueError):
    pass


@dataclass(frozen=True)
class BlockRef:
    dataset: GroupDataset
    prime: int
    block: Block

    @property
    def irrs(self) -> tuple[int, ...]:
        return tuple(sorted(self.block.irr_indices))


@dataclass(frozen=True)
class IsometryCandidate:
    """Signed bijection: source character at position k maps to
    signs[k] times the target character at position permutation[k]."""

    source: BlockRef
    target: BlockRef
    permutation: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def matrix(self) -> list[list[int]]:
        """The map as an integer matrix: rows index the source block's
        characters, columns the target block's."""
        n = len(self.permutation)
        m = [[0] * n for _ in range(n)]
        for k in range(n):
            m[k][self.permutation[k]] = self.signs[k]
        return m

    def to_json(self) -> dict:
        return {
            "source": {"group": self.source.dataset.name,
                       "prime": self.source.prime, "block": self.source.block.id},
            "target": {"group": self.target.dataset.name,
                       "prime": self.target.prime, "block": self.target.block.id},
            "permutation": list(self.permutation),
            "signs": list(self.signs),
        }


@dataclass
class PerfectionReport:
    is_isometry: bool
    integrality_ok: bool
    separation_ok: bool
    conductor_preserved: bool | None = None
    l0_preserved: bool | None = None
    witnesses: list = field(default_factory=list)

    @property
    def perfect(self) -> bool:
        return self.is_isometry and self.integrality_ok and self.separation_ok


def gram_isometry(matrix) -> bool:
    """Gram identity for an integer matrix: the columns are orthonormal,
    so the map preserves the inner product on virtual characters."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        return False
    for i in range(n):
        for j in range(i, n):
            dot = sum(matrix[k][i] * matrix[k][j] for k in range(n))
            if dot != (1 if i == j else 0):
                return False
    return True


def check_isometry(cand: IsometryCandidate) -> bool:
    n = len(cand.source.irrs)
    if len(cand.target.irrs) != n:
        raise IsometryError("blocks have different numbers of characters")
    if len(cand.permutation) != n or len(cand.signs) != n \
            or any(not 0 <= x < n for x in cand.permutation):
        return False
    return gram_isometry(cand.matrix)


def _regular_flags(ds: GroupDataset, p: int) -> list[bool]:
    return [c.element_order % p != 0 for c in ds.table.classes]


def _p_locally_integral(x: CycloNum, p: int) -> bool:
    """True when x lies in the p-localisation of the cyclotomic integers:
    every coefficient denominator over the integral power basis is coprime
    to p (multiplying by a prime-to-p integer can clear such denominators)."""
    return all(f.denominator % p != 0 for f in x._vec)


def _value_products(src: BlockRef, tgt: BlockRef):
    """prod[k][j][g][g'] = chi_k(g) * chi'_j(g') over all class pairs."""
    s_tab, t_tab = src.dataset.table, tgt.dataset.table
    return [
        [
            [[s_tab.irreducibles[i][g] * t_tab.irreducibles[j][h]
              for h in range(t_tab.num_classes)]
             for g in range(s_tab.num_classes)]
            for j in tgt.irrs
        ]
        for i in src.irrs
    ]


def check_perfection(cand: IsometryCandidate, products=None,
                     collect_witnesses: bool = True) -> PerfectionReport:
    src, tgt = cand.source, cand.target
    report = PerfectionReport(check_isometry(cand), True, True)
    if not report.is_isometry:
        return report
    if products is None:
        products = _value_products(src, tgt)
    s_tab, t_tab = src.dataset.table, tgt.dataset.table
    s_reg = _regular_flags(src.dataset, src.prime)
    t_reg = _regular_flags(tgt.dataset, tgt.prime)
    n = len(cand.permutation)
    for g in range(s_tab.num_classes):
        cg = Fraction(1, s_tab.centralizer_order(g))
        for h in range(t_tab.num_classes):
            mu = ZERO
            for k in range(n):
                term = products[k][cand.permutation[k]][g][h]
                mu = mu + term if cand.signs[k] == 1 else mu - term
            if s_reg[g] != t_reg[h]:
                if mu:
                    report.separation_ok = False
                    if collect_witnesses:
                        report.witnesses.append(("separation", g, h, str(mu)))
                    else:
                        return report
                continue
            ch = Fraction(1, t_tab.centralizer_order(h))
            if not _p_locally_integral(cg * mu, src.prime) \
                    or not _p_locally_integral(ch * mu, tgt.prime):
                report.integrality_ok = False
                if collect_witnesses:
                    report.witnesses.append(("integrality", g, h, str(mu)))
                else:
                    return report
    if collect_witnesses:
        ok, wits = check_conductor_preservation(cand, src.prime)
        report.conductor_preserved = ok
        report.witnesses.extend(("conductor",) + w for w in wits)
        report.l0_preserved = check_l0_preservation(cand)
        if not report.l0_preserved:
            report.witnesses.append(("l0",))
    return report


def search_perfect_isometries(src: BlockRef, tgt: BlockRef,
                              bound: int = 6) -> list[IsometryCandidate]:
    """All signed bijections between the two blocks that are perfect
    isometries, in lexicographic (permutation, signs) order."""
    n = len(src.irrs)
    if len(tgt.irrs) != n:
        raise IsometryError(
            f"character counts differ: {n} vs {len(tgt.irrs)}")
    if n > bound:
        raise IsometryError(
            f"search size 2^{n} * {n}! = {2 ** n * factorial(n)} exceeds the "
            f"bound for {n} characters (bound {bound})")
    products = _value_products(src, tgt)
    found = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            cand = IsometryCandidate(src, tgt, perm, signs)
            if check_perfection(cand, products,
                                collect_witnesses=False).perfect:
                found.append(cand)
    return found


def check_conductor_preservation(cand: IsometryCandidate, p: int):
    """c(chi)_p = c(image of chi)_p for every chi in the source block."""
    src, tgt = cand.source, cand.target
    witnesses = []
    for k, i in enumerate(src.irrs):
        j = tgt.irrs[cand.permutation[k]]
        lhs = char_conductor(src.dataset.table.irreducible(i), p)
        rhs = char_conductor(tgt.dataset.table.irreducible(j), p)
        if lhs != rhs:
            witnesses.append((i, j, lhs, rhs))
    return not witnesses, witnesses


def _rational_nullspace(rows):
    """Basis of the right nullspace of a rational matrix, denominators
    cleared to integers."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [row[:] for row in rows]
    pivots = {}
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    basis = []
    for c in range(ncols):
        if c in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for pc, pr in pivots.items():
            v[pc] = -mat[pr][c]
        den = lcm(*[f.denominator for f in v])
        basis.append([int(f * den) for f in v])
    return basis


def l0_basis(ref: BlockRef) -> list[list[int]]:
    """Spanning set of L0(B): block virtual characters vanishing on the
    p-regular classes, as coordinate vectors over the block's characters."""
    table = ref.dataset.table
    rows = []
    for c, cls in enumerate(table.classes):
        if cls.element_order % ref.prime != 0:
            col = [table.irreducibles[i][c] for i in ref.irrs]
            n_max = lcm(*[v.order for v in col])
            vecs = [v._embedded(n_max) for v in col]
            for r in range(len(vecs[0])):
                row = [vecs[i][r] for i in range(len(col))]
                if any(row):
                    rows.append(row)
    return _rational_nullspace(rows)


def check_l0_preservation(cand: IsometryCandidate) -> bool:
    """The image of every element of L0(B) vanishes on the p-regular
    classes of the target group."""
    src, tgt = cand.source, cand.target
    t_tab = tgt.dataset.table
    t_reg = [c for c, cls in enumerate(t_tab.classes)
             if cls.element_order % tgt.prime != 0]
    for vec in l0_basis(src):
        coords = [0] * t_tab.num_classes
        for k, a in enumerate(vec):
            coords[tgt.irrs[cand.permutation[k]]] = cand.signs[k] * a
        image = virtual_character(t_tab, coords)
        if any(image.values[c] for c in t_reg):
            return False
    return True


def block_ref(ds: GroupDataset, p: int, block_id: str) -> BlockRef:
    from .blocks import partition_blocks
    for b in partition_blocks(ds, p):
        if b.id == block_id:
            return BlockRef(ds, p, b)
    raise IsometryError(f"{ds.name} has no block {block_id} at p={p}")


def candidate_from_json(data: dict, corpus: dict) -> IsometryCandidate:
    """Rebuild a candidate from its certificate, resolving group names
    against a loaded corpus."""
    def side(entry):
        if entry["group"] not in corpus:
            raise IsometryError(f"unknown group {entry['group']!r}")
        return block_ref(corpus[entry["group"]], entry["prime"], entry["block"])
    return IsometryCandidate(side(data["source"]), side(data["target"]),
                             tuple(data["permutation"]), tuple(data["signs"]))
