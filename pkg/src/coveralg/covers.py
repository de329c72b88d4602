"""k-covers of a simplicial complex and the graded pieces they span.

A k-cover of a complex on {1..n} is a nonzero vector c of nonnegative
integers with sum(c_i : i in F) >= k for every facet F.  Its order is
the largest such k.  Three ideals per degree matter here:

* jk: generated by all k-covers (so x^c lies in jk iff c has order >= k);
* lk_sq: generated by the squarefree k-covers;
* lk: generated by all products of squarefree covers whose degrees sum
  to k, i.e. the degree-k piece of the subalgebra the squarefree covers
  generate.

Always lk <= jk.  Equality for every k up to a bound, decomposability of
single covers, and the two standard-gradedness checks are decided here,
along with the skeleton duality identities tying lk_sq to Alexander
duals of skeleton facet ideals.
"""
from __future__ import annotations

import itertools as it
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import ideals
from .complexes import SimplicialComplex, face_mask, mask_face
from .errors import InputError, InternalCheckError

_ENUM_LIMIT = 20_000_000
_CHUNK = 1 << 18


def default_max_degree(sc):
    """Default degree bound for the A-side checks."""
    return sc.dimension + 2


def _clean_vector(sc, c):
    c = tuple(int(x) for x in c)
    if len(c) != sc.n:
        raise InputError(f"cover vector has {len(c)} entries, expected {sc.n}")
    if any(x < 0 for x in c):
        raise InputError("cover entries must be nonnegative")
    return c


def cover_order(sc, c):
    """Largest k for which c is a k-cover (0 when some facet is missed)."""
    c = _clean_vector(sc, c)
    if not any(c):
        raise InputError("the zero vector is not a cover")
    return min(sum(c[v - 1] for v in f) for f in sc.facets)


def is_k_cover(sc, c, k):
    return cover_order(sc, c) >= k


def minimal_vertex_covers(sc):
    """Minimal transversals of the facets, as faces, smallest first."""
    trans = ideals.minimal_transversals(sc.n, list(sc.facet_masks))
    return [mask_face(t) for t in trans]


def decompose_cover(sc, c, k):
    """Split c into an i-cover plus a j-cover with i + j = k, if possible.

    Returns (a, i, b, j) with a + b = c and both parts nonzero, or None
    when c is indecomposable as a k-cover.  Minimal vertex cover
    indicators are tried as the first summand before the exhaustive
    search, so decomposable covers of standard-graded complexes never
    reach the expensive path.
    """
    c = _clean_vector(sc, c)
    if not any(c):
        raise InputError("the zero vector is not a cover")
    if k < 0:
        raise InputError("k must be nonnegative")
    if cover_order(sc, c) < k:
        raise InputError(f"{c} is not a {k}-cover")
    if k == 0:
        if sum(c) < 2:
            return None
        i = next(i for i, x in enumerate(c) if x)
        a = tuple(1 if j == i else 0 for j in range(sc.n))
        return a, 0, _sub(c, a), 0
    for m in minimal_vertex_covers(sc):
        a = ideals.from_support(m, sc.n)
        if a != c and ideals.divides(a, c):
            b = _sub(c, a)
            if 1 + cover_order(sc, b) >= k:
                return a, 1, b, k - 1
    space = 1
    for x in c:
        space *= x + 1
        if space > _ENUM_LIMIT:
            raise InputError("decomposition search space too large")
    for a in it.product(*(range(x + 1) for x in c)):
        if not any(a) or a == c:
            continue
        b = _sub(c, a)
        oa = cover_order(sc, a)
        ob = cover_order(sc, b)
        if oa + ob >= k:
            i = min(oa, k)
            return a, i, b, k - i
    return None


def _sub(c, a):
    return tuple(x - y for x, y in zip(c, a))


def _incidence(sc):
    return np.array(
        [[1 if v in set(f) else 0 for v in range(1, sc.n + 1)] for f in sc.facets],
        dtype=np.int64,
    )


def _enumerate_vectors(sc, k, keep_fn):
    """Run keep_fn over all vectors with entries 0..k, in chunks.

    Vectors are generated in ascending lexicographic order (first entry
    most significant); keep_fn gets the decoded chunk and its facet sum
    matrix and returns a boolean mask of rows to collect.
    """
    n = sc.n
    base = k + 1
    total = base**n
    if total > _ENUM_LIMIT:
        raise InputError(
            f"cover enumeration space {base}^{n} too large; lower the degree bound"
        )
    inc = _incidence(sc)
    powers = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    out = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        V = (idx[:, None] // powers[None, :]) % base
        S = V @ inc.T
        mask = keep_fn(V, S)
        if mask.any():
            out.extend(tuple(int(x) for x in row) for row in V[mask])
    return out


def cover_candidates(sc, k):
    """All vectors with entries <= k and cover order exactly k, ascending."""
    return _enumerate_vectors(sc, k, lambda V, S: S.min(axis=1) == k)


def _indecomposable_at(sc, k, threads=1):
    cands = cover_candidates(sc, k)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            flags = list(
                ex.map(lambda c: decompose_cover(sc, c, k) is None, cands, chunksize=64)
            )
        yield from (c for c, f in zip(cands, flags) if f)
    else:
        for c in cands:
            if decompose_cover(sc, c, k) is None:
                yield c


def indecomposable_covers(sc, max_degree, threads=1):
    """All indecomposable k-covers with k <= max_degree.

    Each cover is listed once, at its maximal order k.  Entries of an
    indecomposable k-cover never exceed k (capping an entry at k
    preserves every facet sum bound and divides the original), so the
    bounded enumeration misses nothing.
    """
    if max_degree < 1:
        raise InputError("max_degree must be >= 1")
    out = []
    for k in range(1, max_degree + 1):
        out.extend((c, k) for c in _indecomposable_at(sc, k, threads))
    return out


def prime_power_ideal(n, face, k):
    """P_F^k: all degree-k monomials supported on the face F."""
    gens = []
    for combo in it.combinations_with_replacement(face, k):
        m = [0] * n
        for v in combo:
            m[v - 1] += 1
        gens.append(tuple(m))
    return ideals.MonomialIdeal(n, tuple(sorted(gens, key=ideals.canon_key)))


def jk(sc, k):
    """Ideal generated by all k-covers; intersection of facet prime powers.

    Small instances enumerate the minimal generators directly (vectors
    of order exactly k none of whose decrements is still a k-cover);
    larger ones intersect the P_F^k one at a time.  The two routes agree
    and the enumeration one is far cheaper at desk scale.
    """
    if k < 1:
        raise InputError("jk wants k >= 1")
    if (k + 1) ** sc.n <= 2_000_000:
        inc = _incidence(sc)
        cols = [np.flatnonzero(inc[:, i]) for i in range(sc.n)]

        def keep(V, S):
            mask = S.min(axis=1) >= k
            mask &= V.any(axis=1)
            for i in range(sc.n):
                if cols[i].size:
                    ok = (V[:, i] == 0) | (S[:, cols[i]].min(axis=1) == k)
                else:
                    ok = V[:, i] == 0
                mask &= ok
            return mask

        gens = _enumerate_vectors(sc, k, keep)
        return ideals.MonomialIdeal(sc.n, tuple(sorted(gens, key=ideals.canon_key)))
    return ideals.intersect_many(
        [prime_power_ideal(sc.n, f, k) for f in sc.facets]
    )


def lk_sq(sc, k):
    """Ideal of the squarefree k-covers.

    Computed two ways, by direct minimal-support search and as the
    intersection of the squarefree powers P_F^<k>; a mismatch raises.
    Zero when k exceeds the smallest facet size.
    """
    if k < 1:
        raise InputError("lk_sq wants k >= 1")
    r = min(len(f) for f in sc.facets)
    if k > r:
        return ideals.zero_ideal(sc.n)
    via_intersection = ideals.intersect_many(
        [
            ideals.MonomialIdeal(
                sc.n,
                tuple(
                    sorted(
                        (ideals.from_support(s, sc.n) for s in it.combinations(f, k)),
                        key=ideals.canon_key,
                    )
                ),
            )
            for f in sc.facets
        ]
    )
    if sc.n <= 20:
        direct = _squarefree_covers_direct(sc, k)
        if not ideals.equals_ideal(direct, via_intersection):
            raise InternalCheckError(
                f"squarefree {k}-cover routes disagree on {sc!r}"
            )
    return via_intersection


def _squarefree_covers_direct(sc, k):
    fmasks = sc.facet_masks
    minimal = []
    for mask in sorted(range(1, 1 << sc.n), key=lambda m: (bin(m).count("1"), m)):
        if any(o & mask == o for o in minimal):
            continue
        if all(bin(mask & f).count("1") >= k for f in fmasks):
            minimal.append(mask)
    gens = sorted(
        (ideals.from_support(mask_face(m), sc.n) for m in minimal),
        key=ideals.canon_key,
    )
    return ideals.MonomialIdeal(sc.n, tuple(gens))


def lk(sc, k):
    """Degree-k piece of the algebra generated by squarefree covers.

    Sum over all ways to write k = k_1 + ... + k_s of the products
    lk_sq(k_1) * ... * lk_sq(k_s), assembled by one-step recursion.
    """
    if k < 1:
        raise InputError("lk wants k >= 1")
    r = min(len(f) for f in sc.facets)
    sq = {j: lk_sq(sc, j) for j in range(1, min(k, r) + 1)}
    level = {1: sq[1]}
    for kk in range(2, k + 1):
        parts = []
        if kk <= r:
            parts.append(sq[kk])
        for j in range(max(1, kk - r), kk):
            parts.append(ideals.multiply(level[j], sq[kk - j]))
        level[kk] = ideals.sum_ideals(parts[0], *parts[1:])
    return level[k]


@dataclass(frozen=True)
class Witness:
    vector: tuple
    degree: int

    def to_dict(self):
        return {"vector": list(self.vector), "degree": self.degree}


@dataclass(frozen=True)
class GradedVerdict:
    prop: str
    holds: bool
    exact: bool
    bound: int | None
    witness: Witness | None

    def to_dict(self):
        return {
            "property": self.prop,
            "holds": self.holds,
            "verdict": "exact" if self.exact else "up-to-bound",
            "bound": self.bound,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def is_standard_graded_b(sc):
    """Whether the squarefree cover algebra is generated in degree one.

    The algebra is generated in degrees <= r (the smallest facet size),
    so checking lk_sq(k) == (dual ideal)^<k> for k = 2..r settles the
    question exactly, no degree bound needed.
    """
    r = min(len(f) for f in sc.facets)
    dual = ideals.alexander_dual(sc.facet_ideal())
    for k in range(2, r + 1):
        lhs = lk_sq(sc, k)
        rhs = ideals.squarefree_power(dual, k)
        if not rhs <= lhs:
            raise InternalCheckError("products of covers must be covers")
        for g in lhs.gens:
            if not rhs.contains(g):
                return GradedVerdict("B-standard-graded", False, True, None, Witness(g, k))
    return GradedVerdict("B-standard-graded", True, True, None, None)


def is_standard_graded_a(sc, max_degree=None, threads=1):
    """Whether every cover splits into 1-covers, up to a degree bound.

    A failure is exact (the witness is an indecomposable k-cover with
    2 <= k <= bound); a pass only certifies degrees up to the bound.
    """
    bound = default_max_degree(sc) if max_degree is None else max_degree
    for k in range(2, bound + 1):
        for c in _indecomposable_at(sc, k, threads):
            return GradedVerdict("A-standard-graded", False, True, None, Witness(c, k))
    return GradedVerdict("A-standard-graded", True, False, bound, None)


def equals_ab(sc, max_degree=None):
    """Whether jk == lk for every k up to the bound.

    False means some cover is not a combination of squarefree ones; the
    witness is the first minimal generator of jk outside lk.
    """
    bound = default_max_degree(sc) if max_degree is None else max_degree
    for k in range(1, bound + 1):
        J = jk(sc, k)
        L = lk(sc, k)
        if not L <= J:
            raise InternalCheckError("lk must sit inside jk")
        for g in J.gens:
            if not L.contains(g):
                return GradedVerdict("A-equals-B", False, True, None, Witness(g, k))
    return GradedVerdict("A-equals-B", True, False, bound, None)


def partition_into_vertex_covers(sc, cover_set, k):
    """Partition the set C into k disjoint vertex covers, if possible.

    C must be given as a set of vertices whose indicator is a k-cover.
    Returns the first partition found by the canonical backtracking
    (vertices ascending, parts filled smallest index first), or None.
    """
    cset = tuple(sorted({int(v) for v in cover_set}))
    if not cset:
        raise InputError("empty vertex set")
    ind = ideals.from_support(cset, sc.n)
    if cover_order(sc, ind) < k:
        raise InputError(f"{set(cset)} is not a {k}-cover")
    if k < 1:
        raise InputError("k must be >= 1")
    fmasks = sc.facet_masks
    parts = [0] * k

    def covers_all(mask):
        return all(mask & f for f in fmasks)

    def rec(pos):
        if pos == len(cset):
            return all(covers_all(p) for p in parts)
        rest = 0
        for v in cset[pos:]:
            rest |= 1 << (v - 1)
        for p in parts:
            if not covers_all(p | rest):
                return False
        bit = 1 << (cset[pos] - 1)
        used = k
        for j in range(k):
            if parts[j] == 0:
                used = j + 1
                break
        for j in range(min(used, k)):
            parts[j] |= bit
            if rec(pos + 1):
                return True
            parts[j] &= ~bit
        return False

    if rec(0):
        return [mask_face(p) for p in parts]
    return None


@dataclass(frozen=True)
class DualityReport:
    n: int
    d: int
    pure: bool
    equality_by_degree: tuple
    b_standard_graded: bool
    grid_checked: bool
    corollary_equalities: tuple | None

    def to_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "pure": self.pure,
            "equality_by_degree": list(self.equality_by_degree),
            "b_standard_graded": self.b_standard_graded,
            "grid_checked": self.grid_checked,
            "corollary_equalities": (
                None
                if self.corollary_equalities is None
                else list(self.corollary_equalities)
            ),
        }


def verify_duality(sc):
    """Check the skeleton duality identities on sc, raising on violation.

    (a) lk_sq(sc, k) sits inside the dual of the (d-k)-skeleton's facet
        ideal for k = 1..d, where d = dim + 1;
    (b) equality holds at k exactly when sc is pure or k = 1;
    (c) for pure sc the full grid identity
        lk_sq(skeleton(d-i), j) == lk_sq(skeleton(d-j), i) holds;
    (d) for pure sc, dual(skeleton(q)) == dual(sc)^<d-q> for every q
        exactly when the squarefree cover algebra is standard graded.

    Any failed assertion raises InternalCheckError; the returned report
    records what was computed.
    """
    d = sc.dimension + 1
    eq = []
    for k in range(1, d + 1):
        lhs = lk_sq(sc, k)
        rhs = ideals.alexander_dual(sc.skeleton(d - k).facet_ideal())
        if not lhs <= rhs:
            raise InternalCheckError(
                f"squarefree {k}-covers escape the skeleton dual on {sc!r}"
            )
        eq.append(ideals.equals_ideal(lhs, rhs))
    for k, e in enumerate(eq, start=1):
        if e != (sc.is_pure or k == 1):
            raise InternalCheckError(
                f"skeleton-dual equality at degree {k} contradicts purity on {sc!r}"
            )
    bsg = is_standard_graded_b(sc)
    grid_checked = False
    cor = None
    if sc.is_pure:
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                lhs = lk_sq(sc.skeleton(d - i), j)
                rhs = lk_sq(sc.skeleton(d - j), i)
                if not ideals.equals_ideal(lhs, rhs):
                    raise InternalCheckError(
                        f"duality grid fails at (i={i}, j={j}) on {sc!r}"
                    )
        grid_checked = True
        dual = ideals.alexander_dual(sc.facet_ideal())
        cor = tuple(
            ideals.equals_ideal(
                ideals.alexander_dual(sc.skeleton(q).facet_ideal()),
                ideals.squarefree_power(dual, d - q),
            )
            for q in range(0, d)
        )
        if all(cor) != bsg.holds:
            raise InternalCheckError(
                f"skeleton-dual powers disagree with the degree-one check on {sc!r}"
            )
    return DualityReport(
        n=sc.n,
        d=d,
        pure=sc.is_pure,
        equality_by_degree=tuple(eq),
        b_standard_graded=bsg.holds,
        grid_checked=grid_checked,
        corollary_equalities=cor,
    )
