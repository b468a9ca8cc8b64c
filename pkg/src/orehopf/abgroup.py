"""Finitely generated abelian groups, characters, and subgroup lattices.

A group is Z^r x Z/n_1 x ... x Z/n_s in invariant-factor style coordinates
(free generators first).  Elements are exponent vectors with torsion
coordinates reduced.  Characters take values in a fixed cyclotomic field
Q(zeta_N) and are encoded by the exponent of zeta_N on each generator, so
every character has finite order by construction.

Subgroups are integer lattices between the torsion-relation lattice L and
Z^k, stored as a row-style Hermite normal form.  This gives exact
membership tests, finite-index detection, and canonical coset
representatives.
"""

from __future__ import annotations

from math import gcd

from .cyclotomic import Cyclotomic, root_of_unity


class AbelianGroup:
    """Z^free_rank x prod Z/n_i with generator order: free then torsion."""

    __slots__ = ("free_rank", "torsion_orders", "ngens")

    def __init__(self, free_rank: int, torsion_orders=()):
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        torsion = tuple(int(n) for n in torsion_orders)
        if any(n < 2 for n in torsion):
            raise ValueError("torsion orders must be >= 2")
        object.__setattr__(self, "free_rank", free_rank)
        object.__setattr__(self, "torsion_orders", torsion)
        object.__setattr__(self, "ngens", free_rank + len(torsion))

    def __setattr__(self, name, value):
        raise AttributeError("AbelianGroup is immutable")

    def __eq__(self, other):
        return (isinstance(other, AbelianGroup)
                and self.free_rank == other.free_rank
                and self.torsion_orders == other.torsion_orders)

    def __hash__(self):
        return hash((self.free_rank, self.torsion_orders))

    def __repr__(self):
        return f"AbelianGroup(free_rank={self.free_rank}, torsion={list(self.torsion_orders)})"

    def _reduce(self, exps):
        exps = list(exps)
        if len(exps) != self.ngens:
            raise ValueError(f"expected {self.ngens} exponents, got {len(exps)}")
        for i, n in enumerate(self.torsion_orders):
            exps[self.free_rank + i] %= n
        return tuple(exps)

    def element(self, exps) -> "GroupElement":
        return GroupElement(self, self._reduce(exps))

    def identity(self) -> "GroupElement":
        return self.element([0] * self.ngens)

    def generator(self, i: int) -> "GroupElement":
        exps = [0] * self.ngens
        exps[i] = 1
        return self.element(exps)

    def generators(self):
        return [self.generator(i) for i in range(self.ngens)]

    def relation_rows(self):
        """Generators of the torsion-relation lattice L in Z^ngens."""
        rows = []
        for i, n in enumerate(self.torsion_orders):
            row = [0] * self.ngens
            row[self.free_rank + i] = n
            rows.append(row)
        return rows

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for n in self.torsion_orders:
            out *= n
        return out

    def elements(self):
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        def rec(i, acc):
            if i == len(self.torsion_orders):
                yield self.element(acc)
                return
            for e in range(self.torsion_orders[i]):
                yield from rec(i + 1, acc + [e])
        yield from rec(0, [])


class GroupElement:
    __slots__ = ("group", "exps", "_hash")

    def __init__(self, group: AbelianGroup, exps: tuple):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash(exps))

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise ValueError("group elements belong to different groups")

    def __mul__(self, other):
        self._check(other)
        return self.group.element([a + b for a, b in zip(self.exps, other.exps)])

    def inverse(self):
        return self.group.element([-a for a in self.exps])

    def __pow__(self, k: int):
        return self.group.element([k * a for a in self.exps])

    def is_identity(self) -> bool:
        return all(a == 0 for a in self.exps)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.group == other.group
                and self.exps == other.exps)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"g{list(self.exps)}"


class Character:
    """Group character g_i -> zeta_N^exps[i]; finite order by construction."""

    __slots__ = ("group", "conductor", "exps")

    def __init__(self, group: AbelianGroup, conductor: int, exps):
        exps = list(int(e) for e in exps)
        if len(exps) != group.ngens:
            raise ValueError(f"expected {group.ngens} character exponents, got {len(exps)}")
        for i, n in enumerate(group.torsion_orders):
            k = exps[group.free_rank + i]
            if (n * k) % conductor != 0:
                raise ValueError(
                    f"character ill-defined on torsion generator of order {n}: "
                    f"{n}*{k} != 0 mod {conductor}")
        exps = [e % conductor for e in exps]
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "exps", tuple(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Character is immutable")

    def eval(self, g: GroupElement) -> Cyclotomic:
        k = sum(e * x for e, x in zip(self.exps, g.exps)) % self.conductor
        return root_of_unity(self.conductor, k)

    def eval_pow(self, g: GroupElement, t: int) -> Cyclotomic:
        k = (t * sum(e * x for e, x in zip(self.exps, g.exps))) % self.conductor
        return root_of_unity(self.conductor, k)

    def order(self) -> int:
        out = 1
        for e in self.exps:
            d = self.conductor // gcd(self.conductor, e)
            out = out * d // gcd(out, d)
        return out

    def is_trivial(self) -> bool:
        return all(e % self.conductor == 0 for e in self.exps)

    def __mul__(self, other: "Character") -> "Character":
        if other.group != self.group or other.conductor != self.conductor:
            raise ValueError("characters are not compatible")
        return Character(self.group, self.conductor,
                         [a + b for a, b in zip(self.exps, other.exps)])

    def __pow__(self, t: int) -> "Character":
        return Character(self.group, self.conductor, [t * e for e in self.exps])

    def inverse(self) -> "Character":
        return self ** (-1)

    def kernel(self) -> "Subgroup":
        return joint_kernel([self])

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and self.conductor == other.conductor and self.exps == other.exps)

    def __hash__(self):
        return hash((self.group, self.conductor, self.exps))

    def __repr__(self):
        return f"Character({list(self.exps)} / zeta_{self.conductor})"


# -- exact integer lattice routines --

def _exgcd(a: int, b: int):
    """Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(rows):
    """Row-style HNF of an integer matrix.

    Returns echelon rows with positive pivots, entries above each pivot
    reduced to [0, pivot).  Zero rows are dropped.
    """
    H, _ = hnf_with_transform(rows)
    return H


def hnf_with_transform(rows):
    """HNF plus a record of the full transformed matrix.

    Returns (H, U) where U is unimodular with U * M having the rows of H
    followed by zero rows.  H has zero rows removed.
    """
    M = [list(map(int, r)) for r in rows]
    m = len(M)
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    ncols = len(M[0]) if M else 0
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == m:
            break
        # eliminate below pivot_row via gcd cascades
        for r in range(pivot_row + 1, m):
            if M[r][col]:
                a, b = M[pivot_row][col], M[r][col]
                g, s, t = _exgcd(a, b)
                if g:
                    u, v = a // g, b // g
                    row_p = [s * x + t * y for x, y in zip(M[pivot_row], M[r])]
                    row_r = [-v * x + u * y for x, y in zip(M[pivot_row], M[r])]
                    M[pivot_row], M[r] = row_p, row_r
                    urow_p = [s * x + t * y for x, y in zip(U[pivot_row], U[r])]
                    urow_r = [-v * x + u * y for x, y in zip(U[pivot_row], U[r])]
                    U[pivot_row], U[r] = urow_p, urow_r
        if M[pivot_row][col]:
            if M[pivot_row][col] < 0:
                M[pivot_row] = [-x for x in M[pivot_row]]
                U[pivot_row] = [-x for x in U[pivot_row]]
            p = M[pivot_row][col]
            for r in range(pivot_row):
                q = M[r][col] // p
                if q:
                    M[r] = [x - q * y for x, y in zip(M[r], M[pivot_row])]
                    U[r] = [x - q * y for x, y in zip(U[r], U[pivot_row])]
            pivot_row += 1
    H = [r for r in M if any(r)]
    return H, U


def left_kernel(rows):
    """Basis of {v : v * M = 0} over Z for the integer matrix M."""
    M = [list(r) for r in rows]
    if not M:
        return []
    H, U = hnf_with_transform(M)
    rank = len(H)
    # rows of U beyond the echelon rank transform M to zero rows
    Mt = [list(r) for r in M]
    out = []
    for i in range(len(Mt)):
        reduced = [sum(U[i][j] * Mt[j][c] for j in range(len(Mt)))
                   for c in range(len(Mt[0]))]
        if not any(reduced):
            out.append(U[i])
    assert len(out) == len(Mt) - rank
    return out


class Subgroup:
    """A subgroup of G stored as the HNF of its lift lattice in Z^k.

    The lattice always contains the torsion-relation lattice, so membership
    of a group element can be tested on any exponent lift.
    """

    __slots__ = ("group", "rows", "_pivots")

    def __init__(self, group: AbelianGroup, generator_rows):
        k = group.ngens
        rows = [list(map(int, r)) for r in generator_rows]
        for r in rows:
            if len(r) != k:
                raise ValueError("generator row has wrong length")
        rows.extend(group.relation_rows())
        H = hermite_normal_form(rows) if rows else []
        pivots = []
        for r in H:
            col = next(i for i, x in enumerate(r) if x)
            pivots.append(col)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in H))
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subgroup is immutable")

    @staticmethod
    def from_elements(group: AbelianGroup, elements) -> "Subgroup":
        return Subgroup(group, [list(e.exps) for e in elements])

    def express(self, g: GroupElement):
        """Integer coefficients of a lift of g over the HNF rows, or None."""
        return self.express_lift(g.exps)

    def express_lift(self, vec):
        """Coefficients of a raw exponent vector over the HNF rows, or None.

        Unlike express, no torsion normalization is applied, so distinct
        lifts of one group element give distinct answers.
        """
        v = list(vec)
        coeffs = [0] * len(self.rows)
        for idx, (row, col) in enumerate(zip(self.rows, self._pivots)):
            q, rem = divmod(v[col], row[col])
            if rem != 0:
                return None
            coeffs[idx] = q
            v = [x - q * y for x, y in zip(v, row)]
        if any(v):
            return None
        return coeffs

    def contains(self, g: GroupElement) -> bool:
        return self.express(g) is not None

    def is_finite_index(self) -> bool:
        return len(self.rows) == self.group.ngens

    def index(self):
        """[G : N], or None when infinite."""
        if not self.is_finite_index():
            return None
        out = 1
        for row, col in zip(self.rows, self._pivots):
            out *= row[col]
        return out

    def coset_rep(self, g: GroupElement) -> GroupElement:
        """Canonical coset representative (box form under the HNF)."""
        if not self.is_finite_index():
            raise ValueError("subgroup has infinite index")
        v = list(g.exps)
        for i in range(len(self.rows) - 1, -1, -1):
            col = self._pivots[i]
            q = v[col] // self.rows[i][col]
            if q:
                v = [x - q * y for x, y in zip(v, self.rows[i])]
        return self.group.element(v)

    def cosets(self):
        """All canonical coset representatives, in lexicographic box order."""
        if not self.is_finite_index():
            raise ValueError("subgroup has infinite index")
        diag = [self.rows[i][self._pivots[i]] for i in range(len(self.rows))]
        reps = []
        def rec(i, acc):
            if i == len(diag):
                reps.append(self.coset_rep(self.group.element(acc)))
                return
            for e in range(diag[i]):
                rec(i + 1, acc + [e])
        rec(0, [])
        return reps

    def hermite_generators(self):
        """The HNF rows as group elements (the canonical generating set)."""
        return [self.group.element(list(r)) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.group == other.group
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.group, self.rows))

    def __repr__(self):
        return f"Subgroup(rows={[list(r) for r in self.rows]})"


def joint_kernel(chars) -> Subgroup:
    """Intersection of the kernels of the given characters of one group."""
    if not chars:
        raise ValueError("need at least one character")
    group = chars[0].group
    k = group.ngens
    if any(c.group != group for c in chars):
        raise ValueError("characters of different groups")
    # v in ker iff for each char: sum_i exps[i] v_i = 0 mod conductor;
    # encode as the left kernel of the (k + t) x t matrix [E; diag(N)]
    t = len(chars)
    M = [[chars[j].exps[i] for j in range(t)] for i in range(k)]
    for j in range(t):
        row = [0] * t
        row[j] = chars[j].conductor
        M.append(row)
    kern = left_kernel(M)
    rows = [v[:k] for v in kern]
    return Subgroup(group, rows)


def char_kernel(chi: Character) -> Subgroup:
    return joint_kernel([chi])


class SubgroupCharacter:
    """Character of a subgroup, given by zeta exponents on its HNF generators."""

    __slots__ = ("subgroup", "conductor", "exps")

    def __init__(self, subgroup: Subgroup, conductor: int, exps):
        exps = [int(e) % conductor for e in exps]
        if len(exps) != len(subgroup.rows):
            raise ValueError(
                f"expected {len(subgroup.rows)} exponents for the Hermite generators")
        object.__setattr__(self, "subgroup", subgroup)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "exps", tuple(exps))
        # well-definedness: must kill every torsion relation, checked on the
        # raw relation rows (their group elements normalize to the identity)
        for rel in subgroup.group.relation_rows():
            coeffs = subgroup.express_lift(rel)
            if coeffs is None:
                raise ValueError("torsion relation escapes the subgroup lattice")
            if sum(a * e for a, e in zip(coeffs, exps)) % conductor != 0:
                raise ValueError("subgroup character ill-defined on torsion")

    def __setattr__(self, name, value):
        raise AttributeError("SubgroupCharacter is immutable")

    @staticmethod
    def restrict(chi: Character, subgroup: Subgroup) -> "SubgroupCharacter":
        """The restriction of a character of G to the subgroup."""
        exps = []
        for row in subgroup.rows:
            exps.append(sum(e * x for e, x in zip(chi.exps, row)) % chi.conductor)
        return SubgroupCharacter(subgroup, chi.conductor, exps)

    def eval(self, g: GroupElement) -> Cyclotomic:
        coeffs = self.subgroup.express(g)
        if coeffs is None:
            raise ValueError(f"{g!r} is not in the subgroup")
        k = sum(a * e for a, e in zip(coeffs, self.exps)) % self.conductor
        return root_of_unity(self.conductor, k)

    def eval_zeta_exponent(self, g: GroupElement) -> int:
        coeffs = self.subgroup.express(g)
        if coeffs is None:
            raise ValueError(f"{g!r} is not in the subgroup")
        return sum(a * e for a, e in zip(coeffs, self.exps)) % self.conductor

    def __eq__(self, other):
        return (isinstance(other, SubgroupCharacter)
                and self.subgroup == other.subgroup
                and self.conductor == other.conductor
                and self.exps == other.exps)

    def __hash__(self):
        return hash((self.subgroup, self.conductor, self.exps))

    def __repr__(self):
        return f"SubgroupCharacter({list(self.exps)} / zeta_{self.conductor})"


def transversal(group: AbelianGroup, sub: Subgroup, c: GroupElement, n: int):
    """The transversal 1, c, ..., c^(n-1) of a cyclic quotient G/N of order n.

    Validates that the image of c generates G/N with order exactly n.
    """
    idx = sub.index()
    if idx != n:
        raise ValueError(f"subgroup index is {idx}, expected {n}")
    for i in range(1, n):
        if sub.contains(c ** i):
            raise ValueError(f"c^{i} lies in the subgroup; quotient not cyclic of order {n}")
    if not sub.contains(c ** n):
        raise ValueError("c^n is not in the subgroup")
    return [c ** i for i in range(n)]


def cocycle_gamma(i: int, j: int, c: GroupElement, n: int) -> GroupElement:
    """Representative-product 2-cocycle of the transversal 1, c, ..., c^(n-1)."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError("cocycle arguments must lie in [0, n)")
    if i + j < n:
        return c.group.identity()
    return c ** n
