"""Monomial ideals in Z[x1..xn], represented by exponent vectors.

A monomial is a tuple of n nonnegative exponents; an ideal is stored by
its unique minimal generating set, sorted by (total degree, then
descending lexicographic on exponents) so equal ideals compare equal.
The zero ideal is the one with no generators.

Divisibility is componentwise <=, lcm is componentwise max.  Squarefree
monomials are handled through bitmasks (bit i set means x_{i+1} occurs)
which keeps Alexander duals and squarefree powers cheap.
"""
from __future__ import annotations

import itertools as it
from dataclasses import dataclass

import numpy as np

from .errors import InputError

Monomial = tuple


def degree(m):
    return sum(m)


def divides(a, b):
    """True when x^a divides x^b."""
    return all(ai <= bi for ai, bi in zip(a, b))


def lcm(a, b):
    return tuple(max(ai, bi) for ai, bi in zip(a, b))


def mul(a, b):
    return tuple(ai + bi for ai, bi in zip(a, b))


def is_squarefree(m):
    return all(e <= 1 for e in m)


def support(m):
    """1-based labels of the variables occurring in m."""
    return tuple(i + 1 for i, e in enumerate(m) if e > 0)


def from_support(vertices, n):
    """Squarefree monomial with the given 1-based support."""
    m = [0] * n
    for v in vertices:
        m[v - 1] = 1
    return tuple(m)


def _mask_of(m):
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def _mask_to_monomial(mask, n):
    return tuple(1 if mask >> i & 1 else 0 for i in range(n))


def canon_key(m):
    # degree first, then descending lex, so e.g. x1*x2 sorts before x1*x3
    return (sum(m), tuple(-e for e in m))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its sorted minimal generators."""

    n: int
    gens: tuple

    @property
    def is_zero(self):
        return not self.gens

    def contains(self, m):
        if len(m) != self.n:
            raise InputError(f"monomial has {len(m)} exponents, expected {self.n}")
        return any(divides(g, m) for g in self.gens)

    def __le__(self, other):
        """Ideal containment: self is a subideal of other."""
        return all(other.contains(g) for g in self.gens)

    def __str__(self):
        return render_ideal(self)


def zero_ideal(n):
    return MonomialIdeal(n, ())


def _minimal_rows(rows):
    """Minimal elements of a set of exponent tuples under divisibility."""
    uniq = sorted(set(rows), key=canon_key)
    if not uniq:
        return []
    if all(e <= 1 for r in uniq for e in r):
        # squarefree: subset tests on bitmasks
        kept = []
        for r in uniq:
            rm = _mask_of(r)
            if not any(km & rm == km for km, _ in kept):
                kept.append((rm, r))
        return [r for _, r in kept]
    if len(uniq) > 200:
        n = len(uniq[0])
        arr = np.array(uniq, dtype=np.int64)
        kept_idx = []
        buf = np.empty((len(uniq), n), dtype=np.int64)
        cnt = 0
        for i in range(len(uniq)):
            if cnt == 0 or not (buf[:cnt] <= arr[i]).all(axis=1).any():
                buf[cnt] = arr[i]
                kept_idx.append(i)
                cnt += 1
        return [uniq[i] for i in kept_idx]
    kept = []
    for r in uniq:
        if not any(divides(k, r) for k in kept):
            kept.append(r)
    return kept


def minimalize(n, gens):
    """Build the ideal generated by ``gens``, reduced to minimal generators.

    Raises on an all-zero exponent vector (the monomial 1 is not a valid
    generator here) and on negative exponents.  An empty generator list
    gives the zero ideal.
    """
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise InputError(f"generator {g} has {len(g)} exponents, expected {n}")
        if any(e < 0 for e in g):
            raise InputError(f"negative exponent in generator {g}")
        if not any(g):
            raise InputError("the monomial 1 cannot be a generator")
    return MonomialIdeal(n, tuple(_minimal_rows(gens)))


def equals_ideal(I, J):
    return I.n == J.n and I.gens == J.gens


def sum_ideals(I, *rest):
    n = I.n
    gens = list(I.gens)
    for J in rest:
        if J.n != n:
            raise InputError("ideal sum needs a common ambient ring")
        gens.extend(J.gens)
    if not gens:
        return zero_ideal(n)
    return minimalize(n, gens)


def intersect(I, J):
    if I.n != J.n:
        raise InputError("ideal intersection needs a common ambient ring")
    if I.is_zero or J.is_zero:
        return zero_ideal(I.n)
    if len(I.gens) * len(J.gens) > 4000:
        A = np.array(I.gens, dtype=np.int64)
        B = np.array(J.gens, dtype=np.int64)
        prod = np.maximum(A[:, None, :], B[None, :, :]).reshape(-1, I.n)
        rows = [tuple(int(e) for e in row) for row in prod]
    else:
        rows = [lcm(a, b) for a in I.gens for b in J.gens]
    return MonomialIdeal(I.n, tuple(_minimal_rows(rows)))


def intersect_many(ideals):
    """Intersection of a nonempty list of ideals, one at a time."""
    ideals = list(ideals)
    if not ideals:
        raise InputError("need at least one ideal to intersect")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
        if acc.is_zero:
            break
    return acc


def multiply(I, J):
    if I.n != J.n:
        raise InputError("ideal product needs a common ambient ring")
    if I.is_zero or J.is_zero:
        return zero_ideal(I.n)
    rows = [mul(a, b) for a in I.gens for b in J.gens]
    return MonomialIdeal(I.n, tuple(_minimal_rows(rows)))


def power(I, k):
    if k < 1:
        raise InputError("power wants k >= 1")
    result = None
    square = I
    while k:
        if k & 1:
            result = square if result is None else multiply(result, square)
        k >>= 1
        if k:
            square = multiply(square, square)
    return result


def squarefree_part(I):
    """Subideal generated by the squarefree minimal generators.

    Any squarefree monomial of I is divisible by a squarefree generator,
    so this really is the squarefree part.
    """
    return MonomialIdeal(I.n, tuple(g for g in I.gens if is_squarefree(g)))


def squarefree_power(I, k):
    """Squarefree part of I^k.

    A squarefree monomial of I^k is divisible by a product of k
    generators which is then itself squarefree, so the minimal
    generators are exactly the minimal squarefree k-fold products.
    Computed levelwise on support masks; agrees with
    squarefree_part(power(I, k)) but skips the non-squarefree bulk.
    """
    if k < 1:
        raise InputError("squarefree power wants k >= 1")
    base = [_mask_of(g) for g in I.gens if is_squarefree(g)]
    base = _minimal_masks(base)
    level = base
    for _ in range(k - 1):
        nxt = set()
        for t in level:
            for g in base:
                if t & g == 0:
                    nxt.add(t | g)
        level = _minimal_masks(nxt)
        if not level:
            break
    return MonomialIdeal(
        I.n, tuple(sorted((_mask_to_monomial(m, I.n) for m in level), key=canon_key))
    )


def _minimal_masks(masks):
    out = []
    for m in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def alexander_dual(I):
    """Dual of a squarefree ideal: minimal transversals of the supports."""
    if I.is_zero:
        raise InputError("the zero ideal has no Alexander dual here")
    if not all(is_squarefree(g) for g in I.gens):
        raise InputError("Alexander dual wants a squarefree ideal")
    masks = [_mask_of(g) for g in I.gens]
    trans = minimal_transversals(I.n, masks)
    return MonomialIdeal(
        I.n, tuple(sorted((_mask_to_monomial(t, I.n) for t in trans), key=canon_key))
    )


def minimal_transversals(n, masks):
    """All minimal hitting sets of the given support masks.

    Branch on the vertices of the first unhit support, excluding each
    tried vertex from later branches of the same node; non-minimal
    leftovers are filtered by the private-support test.  Exponential in
    the worst case, fine at desk scale.
    """
    if not masks:
        raise InputError("need at least one support")
    if any(m == 0 for m in masks):
        raise InputError("empty support has no transversal")
    found = []

    def rec(chosen, banned):
        e = next((m for m in masks if not m & chosen), None)
        if e is None:
            found.append(chosen)
            return
        ban = banned
        rest = e & ~ban
        while rest:
            bit = rest & -rest
            rec(chosen | bit, ban)
            ban |= bit
            rest &= ~bit

    rec(0, 0)
    minimal = []
    seen = set()
    for t in found:
        if t in seen:
            continue
        seen.add(t)
        ok = True
        rest = t
        while rest:
            bit = rest & -rest
            if not any(e & t == bit for e in masks):
                ok = False
                break
            rest &= ~bit
        if ok:
            minimal.append(t)
    return sorted(set(minimal), key=lambda x: (bin(x).count("1"), _mask_sort_key(x)))


def _mask_sort_key(mask):
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def render_monomial(m, style="factored"):
    if style == "vector":
        return "[" + ",".join(str(e) for e in m) + "]"
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def render_ideal(I, style="factored"):
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(render_monomial(g, style) for g in I.gens) + ")"
