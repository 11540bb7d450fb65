"""Per-class invariants: distance, enumerators, structure flags.

Everything here is computed exactly by enumeration over spans, centralizer
cosets, or small per-qubit search spaces.  Weight, distance, evenness,
decomposition length and the CSS / GF(4) flags are all invariant under the
local-Clifford + permutation action, which the test suite checks by acting
with random symmetries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .f2core import BitMatrix, _rank_of_rows, reduce_row, rref
from .pauli import StabGroup, centralizer, span_rows
from .transform import (
    LocalClifford,
    apply_local_clifford,
    apply_perm,
    rsf,
)

__all__ = [
    "WeightEnum",
    "GF4Vector",
    "DecompReport",
    "weight_enumerator",
    "distance",
    "is_degenerate",
    "is_even",
    "css_rank_test",
    "css_representative",
    "gf4_linear_test",
    "gf4_representative",
    "decompose",
    "is_decomposable",
    "gf4_image",
]


@dataclass(frozen=True)
class WeightEnum:
    """coeffs[w] counts the group elements of Pauli weight w."""

    coeffs: tuple

    def polynomial(self) -> str:
        terms = []
        for w, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if w == 0:
                terms.append(str(c))
            else:
                xs = "x" if w == 1 else f"x^{w}"
                terms.append(xs if c == 1 else f"{c}{xs}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class GF4Vector:
    """A length-n vector over GF(4) = {0, 1, w, w^2} with w^2 = w + 1.

    Entries are encoded as 0, 1, 2, 3 for 0, 1, w, w^2; addition is
    componentwise XOR of the codes (characteristic 2, basis {1, w}).
    """

    entries: tuple

    OMEGA = 2
    OMEGA2 = 3

    def __add__(self, other: "GF4Vector") -> "GF4Vector":
        if len(self.entries) != len(other.entries):
            raise ValueError("length mismatch")
        return GF4Vector(tuple(a ^ b for a, b in zip(self.entries, other.entries)))

    def __str__(self) -> str:
        sym = ("0", "1", "w", "w^2")
        return "(" + ", ".join(sym[e] for e in self.entries) + ")"


@dataclass(frozen=True)
class DecompReport:
    """Tensor decomposition of a stabilizer group.

    trivial_qubits lists qubits no generator touches; factors pairs each
    indecomposable tensor factor's qubit support (original indices,
    ascending) with the restricted group on those qubits; length counts the
    factors.
    """

    trivial_qubits: tuple
    factors: tuple

    @property
    def length(self) -> int:
        return len(self.factors)


def _weight(row: int, n: int, mask: int) -> int:
    return ((row | (row >> n)) & mask).bit_count()


def weight_enumerator(g: StabGroup) -> WeightEnum:
    """Exact weight distribution of all 2^r group elements."""
    n = g.n
    mask = (1 << n) - 1
    coeffs = [0] * (n + 1)
    for row in span_rows(g):
        coeffs[_weight(row, n, mask)] += 1
    return WeightEnum(tuple(coeffs))


def _logical_reps(g: StabGroup) -> list[int]:
    """2k packed rows completing the group to its centralizer."""
    reduced, pivots, _ = rref(g.gens)
    srows = reduced.rows[: len(pivots)]
    logicals = []
    lrows, lpivs = [], []
    for row in centralizer(g).rows:
        res = reduce_row(srows, pivots, row)
        res = reduce_row(lrows, lpivs, res)
        if res:
            logicals.append(res)
            lrows.append(res)
            lpivs.append((res & -res).bit_length() - 1)
    return logicals


def distance(g: StabGroup) -> int:
    """Code distance.

    For k > 0 this is the minimum weight over operators commuting with the
    group but outside it; for k = 0 the minimum nonzero weight inside the
    group; the trivial group gets distance 1.
    """
    n = g.n
    mask = (1 << n) - 1
    if g.r == 0:
        return 1
    span = span_rows(g)
    if g.k == 0:
        return min(_weight(row, n, mask) for row in span if row)
    logicals = _logical_reps(g)
    best = 2 * n
    cur = 0
    for t in range(1, 1 << len(logicals)):
        cur ^= logicals[(t & -t).bit_length() - 1]
        for s in span:
            w = _weight(cur ^ s, n, mask)
            if w < best:
                best = w
    return best


def is_degenerate(g: StabGroup) -> bool:
    """Whether some nonidentity group element weighs less than the distance.

    Only defined meaningfully for k > 0; k = 0 returns False.
    """
    if g.k == 0 or g.r == 0:
        return False
    n = g.n
    mask = (1 << n) - 1
    min_stab = min(_weight(row, n, mask) for row in span_rows(g) if row)
    return min_stab < distance(g)


def is_even(g: StabGroup) -> bool:
    """Whether the even-weight elements span the whole group.

    For commuting phase-free Paulis wt(ab) = wt(a) + wt(b) (mod 2), so the
    even elements form a subgroup; the group has an all-even generating set
    exactly when that subgroup is everything.
    """
    n = g.n
    mask = (1 << n) - 1
    even_rows = [row for row in span_rows(g) if _weight(row, n, mask) % 2 == 0]
    return _rank_of_rows(even_rows) == g.r


def css_rank_test(g: StabGroup) -> bool:
    """Whether the group is generated by X-type and Z-type operators.

    Holds iff rank of the X parts plus rank of the Z parts equals the
    number of generators (the sum can never be smaller); both ranks are
    invariant under change of generating set.
    """
    n = g.n
    mask = (1 << n) - 1
    x_rank = _rank_of_rows([row & mask for row in g.gens.rows])
    z_rank = _rank_of_rows([row >> n for row in g.gens.rows])
    return x_rank + z_rank == g.r


# per-gate column sources for the transformed X and Z blocks:
# 0 reads the x column, 1 the z column, 2 their sum
_GATE_T = (0, 1, 0, 2, 1, 2)
_GATE_U = (1, 0, 2, 0, 2, 1)


def _choice_rank_table(g: StabGroup) -> np.ndarray:
    """rank of the matrix whose column j is the chosen source column of
    qubit j, for all 3^n choice vectors (qubit 0 most significant)."""
    n, r = g.n, g.r
    cols = []
    for j in range(n):
        cx = 0
        cz = 0
        for i, row in enumerate(g.gens.rows):
            cx |= ((row >> j) & 1) << i
            cz |= ((row >> (n + j)) & 1) << i
        cols.append((cx, cz, cx ^ cz))
    table = np.empty(3**n, dtype=np.int8)
    for idx, choice in enumerate(itertools.product(range(3), repeat=n)):
        basis = []
        rk = 0
        for j, c in enumerate(choice):
            v = cols[j][c]
            for b in basis:
                low = b & -b
                if v & low:
                    v ^= b
            if v:
                basis.append(v)
                rk += 1
        table[idx] = rk
    return table


def _sweep_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """For every gate tuple in odometer order, the base-3 indices of its
    X-block and Z-block choice vectors."""
    gt = np.array(_GATE_T, dtype=np.int64)
    gu = np.array(_GATE_U, dtype=np.int64)
    t = np.zeros(1, dtype=np.int64)
    u = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        t = (np.repeat(t * 3, 6) + np.tile(gt, t.size))
        u = (np.repeat(u * 3, 6) + np.tile(gu, u.size))
    return t, u


def css_representative(g: StabGroup):
    """First letter-permutation witness whose image splits X/Z, or None.

    Sweeps all 6^n per-qubit letter permutations in odometer order (gate
    order I, H, S, R, Ri, V; qubit 0 most significant) and returns the
    first (LocalClifford, transformed group) passing the rank split test.
    Qubit permutations never help, so none are tried.
    """
    n = g.n
    if g.r == 0:
        w = LocalClifford.identity(n)
        return w, g
    table = _choice_rank_table(g)
    r = g.r
    # chunk the sweep so index arrays stay small for larger n
    tail = min(n, 7)
    head = n - tail
    t_tail, u_tail = _sweep_indices(tail)
    scale = 3**tail
    block = 6**tail
    for prefix_idx, prefix in enumerate(
        itertools.product(range(6), repeat=head) if head else [()]
    ):
        t0 = 0
        u0 = 0
        for d in prefix:
            t0 = t0 * 3 + _GATE_T[d]
            u0 = u0 * 3 + _GATE_U[d]
        hits = table[t0 * scale + t_tail] + table[u0 * scale + u_tail] == r
        pos = int(np.argmax(hits))
        if hits[pos]:
            combined = prefix_idx * block + pos
            digits = []
            for _ in range(n):
                combined, d = divmod(combined, 6)
                digits.append(d)
            w = LocalClifford(reversed(digits))
            return w, apply_local_clifford(g, w)
    return None


def gf4_linear_test(g: StabGroup) -> bool:
    """Whether the global letter cycle X->Y->Z->X maps the group to itself.

    The trivial group is reported as not linear: it carries no nonzero
    vectors over GF(4).
    """
    if g.r == 0:
        return False
    n = g.n
    mask = (1 << n) - 1
    reduced, pivots, _ = rref(g.gens)
    srows = reduced.rows[: len(pivots)]
    for row in g.gens.rows:
        x = row & mask
        z = row >> n
        image = (x ^ z) | (x << n)
        if reduce_row(srows, pivots, image):
            return False
    return True


def gf4_representative(g: StabGroup):
    """First letter-permutation witness with a GF(4)-linear image, or None.

    Conjugating the global letter cycle by a per-qubit permutation flips it
    to the inverse cycle exactly on qubits where the permutation is odd, so
    only the per-qubit parity pattern matters; the lexicographically first
    witness of the full 6^n sweep is therefore the I/H vector of the first
    passing parity pattern.  Groups with n - k odd can never pass and are
    rejected immediately.
    """
    n = g.n
    if g.r % 2 == 1 or g.r == 0:
        return None
    mask = (1 << n) - 1
    reduced, pivots, _ = rref(g.gens)
    srows = reduced.rows[: len(pivots)]
    for pattern in itertools.product((0, 1), repeat=n):
        m_cycle = 0
        m_inv = 0
        for j, p in enumerate(pattern):
            if p:
                m_inv |= 1 << j
            else:
                m_cycle |= 1 << j
        ok = True
        for row in g.gens.rows:
            x = row & mask
            z = row >> n
            nx = ((x ^ z) & m_cycle) | (z & m_inv)
            nz = (x & m_cycle) | ((x ^ z) & m_inv)
            if reduce_row(srows, pivots, nx | (nz << n)):
                ok = False
                break
        if ok:
            return LocalClifford(pattern)
    return None


def decompose(g: StabGroup) -> DecompReport:
    """Split the group into untouched qubits and indecomposable factors.

    The reduced standard form exposes every tensor factorization: qubits
    with empty columns are trivial, and the connected components of the
    support-intersection graph over the reduced rows are the factors.
    """
    n = g.n
    mask = (1 << n) - 1
    if g.r == 0:
        return DecompReport(tuple(range(n)), ())
    res = rsf(g)
    plain = apply_perm(StabGroup(n, res.matrix, validate=False), res.perm.inverse())
    rows = plain.gens.rows
    sups = [((row | (row >> n)) & mask) for row in rows]
    support = 0
    for s in sups:
        support |= s
    trivial = tuple(j for j in range(n) if not (support >> j) & 1)
    parent = list(range(len(rows)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if sups[i] & sups[j]:
                a, b = find(i), find(j)
                if a != b:
                    parent[a] = b
    comps = {}
    for i in range(len(rows)):
        comps.setdefault(find(i), []).append(i)
    factors = []
    for members in comps.values():
        qmask = 0
        for i in members:
            qmask |= sups[i]
        qubits = tuple(j for j in range(n) if (qmask >> j) & 1)
        sub_rows = []
        for i in members:
            fx = 0
            fz = 0
            for pos, q in enumerate(qubits):
                fx |= ((rows[i] >> q) & 1) << pos
                fz |= ((rows[i] >> (n + q)) & 1) << pos
            sub_rows.append(fx | (fz << len(qubits)))
        factors.append(
            (qubits, StabGroup(len(qubits), BitMatrix(2 * len(qubits), sub_rows)))
        )
    factors.sort(key=lambda f: f[0])
    return DecompReport(trivial, tuple(factors))


def is_decomposable(g: StabGroup) -> bool:
    """Whether the group splits across a nontrivial qubit bipartition.

    Single-qubit groups never do; otherwise any untouched qubit or a
    second factor suffices.
    """
    if g.n < 2:
        return False
    report = decompose(g)
    return bool(report.trivial_qubits) or report.length >= 2


def gf4_image(g: StabGroup) -> list[GF4Vector]:
    """The generators mapped entrywise by X -> 1, Z -> w, Y -> w^2."""
    n = g.n
    out = []
    for row in g.gens.rows:
        entries = tuple(
            ((row >> j) & 1) + 2 * ((row >> (n + j)) & 1) for j in range(n)
        )
        out.append(GF4Vector(entries))
    return out
