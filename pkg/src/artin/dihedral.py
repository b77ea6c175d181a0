"""Exact word engine for dihedral Artin groups A(m) = <a, b | aba.. = bab..>.

Elements are compared through the left-greedy Garside normal form
``Delta^k s_1 ... s_l``. Central quotients use fixed presentations:

* m odd:  A(m)/Z = <x, y | x^2, y^m>  with  x = Delta, y = ab,
  so a = y^-(m-1)/2 x  and  b = x y^-(m-1)/2;
* m even: A(m)/Z = <x, y | y^(m/2)>  with  x = a, y = ab,
  so b = x^-1 y.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .shapes import CentraliserShape

A, B = 1, 2
_NAMES = {1: "a", 2: "b", -1: "a^-1", -2: "b^-1"}
_COMPACT = {1: "a", 2: "b", -1: "A", -2: "B"}


class DihedralError(ValueError):
    pass


_WORD_TOKEN = re.compile(r"([abAB])(?:\^([+-]?\d+)|(⁻¹))?")


def parse_letters(text: str) -> tuple[int, ...]:
    """Parse ``"a b^-1"``, ``"aB"`` or ``"ab⁻¹"``; uppercase means inverse.

    A lone ``1`` token stands for the identity.
    """
    out: list[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        pos = 0
        while pos < len(tok):
            match = _WORD_TOKEN.match(tok, pos)
            if not match:
                raise DihedralError(f"bad word syntax near {tok[pos:]!r}")
            ch, power, sup = match.groups()
            letter = A if ch in "aA" else B
            if ch.isupper():
                letter = -letter
            exp = -1 if sup else int(power) if power is not None else 1
            out.extend([letter if exp > 0 else -letter] * abs(exp))
            pos = match.end()
    return tuple(out)


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class DihedralWord:
    m: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.m < 2:
            raise DihedralError(f"label must be >= 2, got {self.m}")
        letters = tuple(int(x) for x in self.letters)
        if any(x not in _NAMES for x in letters):
            raise DihedralError("letters must be in {1, 2, -1, -2}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, m: int, text: str) -> DihedralWord:
        return cls(m, parse_letters(text))

    @classmethod
    def delta(cls, m: int, power: int = 1) -> DihedralWord:
        return cls(m, alternating(A, m)) ** power

    def __mul__(self, other: DihedralWord) -> DihedralWord:
        _same_m(self, other)
        return DihedralWord(self.m, self.letters + other.letters)

    def __pow__(self, n: int) -> DihedralWord:
        base = self if n >= 0 else self.inverse()
        return DihedralWord(self.m, base.letters * abs(n))

    def inverse(self) -> DihedralWord:
        return DihedralWord(self.m, tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(_NAMES[x] for x in self.letters)

    def compact(self) -> str:
        return "".join(_COMPACT[x] for x in self.letters)


def _same_m(u: DihedralWord, v: DihedralWord) -> None:
    if u.m != v.m:
        raise DihedralError(f"label mismatch: {u.m} vs {v.m}")


def _need_large(m: int) -> None:
    if m < 3:
        raise DihedralError("centre and central quotient are only handled for m >= 3 (A(2) is abelian)")


def alternating(first: int, length: int) -> tuple[int, ...]:
    other = B if first == A else A
    return tuple((first, other)[i % 2] for i in range(length))


# -- simples and normal forms ----------------------------------------------


def simples(m: int) -> list[tuple[int, ...]]:
    """The 2m simple elements, as positive words: 1, the 2(m-1) proper
    alternating prefixes, and Delta."""
    if m < 2:
        raise DihedralError("m must be >= 2")
    out = [()]
    for first in (A, B):
        out += [alternating(first, n) for n in range(1, m)]
    out.append(alternating(A, m))
    return out


Simple = tuple[int, int]  # (start letter 0=a / 1=b, length)


def simple_letters(s: Simple) -> tuple[int, ...]:
    start, n = s
    return alternating(A if start == 0 else B, n)


@dataclass(frozen=True)
class GarsideNF:
    m: int
    delta_power: int
    factors: tuple[Simple, ...] = ()

    def is_left_greedy(self) -> bool:
        for (s1, n1), (s2, _) in zip(self.factors, self.factors[1:]):
            last = s1 if n1 % 2 else 1 - s1
            if last != s2:
                return False
        return all(1 <= n < self.m for _, n in self.factors)

    def to_word(self) -> DihedralWord:
        body = tuple(x for s in self.factors for x in simple_letters(s))
        return DihedralWord.delta(self.m, self.delta_power) * DihedralWord(self.m, body)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        parts = [f"D^{self.delta_power}"]
        parts += ["".join("ab"[x - 1] for x in simple_letters(s)) for s in self.factors]
        return " . ".join(parts)


def encode(words: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray]:
    width = max((len(w) for w in words), default=0)
    arr = np.zeros((len(words), max(width, 1)), dtype=np.int8)
    lengths = np.zeros(len(words), dtype=np.int64)
    for i, w in enumerate(words):
        arr[i, : len(w)] = w
        lengths[i] = len(w)
    return arr, lengths


def nf_many(m: int, words: Sequence[Sequence[int]]) -> list[GarsideNF]:
    """Normal forms of many letter sequences in one kernel call."""
    if m < 2:
        raise DihedralError("m must be >= 2")
    if not words:
        return []
    arr, lengths = encode(words)
    ks, starts, lens, counts = kernels.nf_batch(arr, lengths, m)
    return [
        GarsideNF(m, int(ks[i]), tuple(zip(starts[i, : counts[i]].tolist(), lens[i, : counts[i]].tolist())))
        for i in range(len(words))
    ]


def nf_keys(m: int, words: Sequence[Sequence[int]]) -> list[tuple]:
    """Hashable normal-form keys, equal exactly when the elements are."""
    return [(nf.delta_power, nf.factors) for nf in nf_many(m, words)]


def garside_nf(w: DihedralWord) -> GarsideNF:
    return nf_many(w.m, [w.letters])[0]


def words_equal(u: DihedralWord, v: DihedralWord) -> bool:
    _same_m(u, v)
    return garside_nf(u) == garside_nf(v)


def is_trivial(w: DihedralWord) -> bool:
    nf = garside_nf(w)
    return nf.delta_power == 0 and not nf.factors


def canonical_word(w: DihedralWord) -> DihedralWord:
    """The normal form rendered back as a word (a convenient canonical spelling)."""
    return garside_nf(w).to_word()


# -- centre ----------------------------------------------------------------


def is_central(w: DihedralWord) -> bool:
    """w in <Delta> (m even) or <Delta^2> (m odd)."""
    _need_large(w.m)
    nf = garside_nf(w)
    return not nf.factors and (w.m % 2 == 0 or nf.delta_power % 2 == 0)


def centre_generator(m: int) -> DihedralWord:
    _need_large(m)
    return DihedralWord.delta(m, 1 if m % 2 == 0 else 2)


# -- central quotient ------------------------------------------------------

Syllable = tuple[str, int]


@dataclass(frozen=True)
class FreeProductNF:
    """Reduced alternating word in the two cyclic factors x, y of A(m)/Z."""

    m: int
    syllables: tuple[Syllable, ...] = ()

    def order(self, factor: str) -> int:
        """Order of the factor; 0 for infinite."""
        return factor_order(self.m, factor)

    def __mul__(self, other: FreeProductNF) -> FreeProductNF:
        return FreeProductNF(self.m, _fp_mul(self.m, self.syllables, other.syllables))

    def inverse(self) -> FreeProductNF:
        return FreeProductNF(self.m, _fp_inv(self.m, self.syllables))

    def __pow__(self, n: int) -> FreeProductNF:
        base = self if n >= 0 else self.inverse()
        out = FreeProductNF(self.m)
        for _ in range(abs(n)):
            out = out * base
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        return " ".join(f"{f}^{e}" if e != 1 else f for f, e in self.syllables) or "1"


def factor_order(m: int, factor: str) -> int:
    if m % 2:
        return 2 if factor == "x" else m
    return 0 if factor == "x" else m // 2


def _norm(m: int, factor: str, e: int) -> int:
    q = factor_order(m, factor)
    return e % q if q else e


def _fp_mul(m: int, left: Sequence[Syllable], right: Sequence[Syllable]) -> tuple[Syllable, ...]:
    out = list(left)
    for f, e in right:
        e = _norm(m, f, e)
        if e == 0:
            continue
        if out and out[-1][0] == f:
            merged = _norm(m, f, out[-1][1] + e)
            if merged:
                out[-1] = (f, merged)
            else:
                out.pop()
        else:
            out.append((f, e))
    return tuple(out)


def _fp_inv(m: int, syl: Sequence[Syllable]) -> tuple[Syllable, ...]:
    return tuple((f, _norm(m, f, -e)) for f, e in reversed(syl))


def letter_images(m: int) -> dict[int, tuple[Syllable, ...]]:
    """Images of a, b and their inverses in the central quotient."""
    _need_large(m)
    if m % 2:
        k = (m - 1) // 2
        a = _fp_mul(m, (), [("y", -k), ("x", 1)])
        b = _fp_mul(m, (), [("x", 1), ("y", -k)])
    else:
        a = (("x", 1),)
        b = _fp_mul(m, (), [("x", -1), ("y", 1)])
    return {A: a, B: b, -A: _fp_inv(m, a), -B: _fp_inv(m, b)}


def central_quotient_image(w: DihedralWord) -> FreeProductNF:
    images = letter_images(w.m)
    syl: tuple[Syllable, ...] = ()
    for x in w.letters:
        syl = _fp_mul(w.m, syl, images[x])
    return FreeProductNF(w.m, syl)


def lift(q: FreeProductNF) -> DihedralWord:
    """A preimage in A(m) of a central-quotient element."""
    m = q.m
    xw = DihedralWord.delta(m) if m % 2 else DihedralWord(m, (A,))
    yw = DihedralWord(m, (A, B))
    out = DihedralWord(m)
    for f, e in q.syllables:
        out = out * ((xw if f == "x" else yw) ** e)
    return out


def cyclic_reduction(q: FreeProductNF) -> tuple[FreeProductNF, FreeProductNF]:
    """Return ``(c, s)`` with ``q = c s c^-1`` and ``s`` cyclically reduced."""
    m = q.m
    conj: tuple[Syllable, ...] = ()
    s = list(q.syllables)
    while len(s) >= 2 and s[0][0] == s[-1][0]:
        # s = p . mid . r with p, r in the same factor: s = p (mid r p) p^-1
        p = s[0]
        conj = _fp_mul(m, conj, [p])
        s = list(_fp_mul(m, s[1:], [p]))
    return FreeProductNF(m, conj), FreeProductNF(m, tuple(s))


def central_power_order(w: DihedralWord) -> int | None:
    """Least n >= 1 with w^n central, or None."""
    _need_large(w.m)
    _, core = cyclic_reduction(central_quotient_image(w))
    if core.is_trivial:
        return 1
    if len(core.syllables) != 1:
        return None
    f, e = core.syllables[0]
    q = factor_order(w.m, f)
    if q == 0:
        return None
    return q // gcd(q, e)


def has_central_power(w: DihedralWord) -> int | None:
    if is_trivial(w):
        raise DihedralError("the trivial element has no meaningful central power")
    return central_power_order(w)


def dihedral_centraliser_shape(w: DihedralWord) -> CentraliserShape:
    _need_large(w.m)
    if is_trivial(w):
        raise DihedralError("the centraliser of the identity is the whole group")
    if is_central(w):
        return CentraliserShape.dihedral(w.m, "central in A(m): centraliser is the whole dihedral Artin group")
    n = central_power_order(w)
    if n is not None:
        return CentraliserShape.cyclic(
            f"not central, but its {n}-th power is: centraliser is infinite cyclic"
        )
    return CentraliserShape.abelian_z2(
        "no non-trivial power is central: image acts hyperbolically on the Bass-Serre tree, centraliser is Z^2"
    )


# -- conjugacy to generator powers -----------------------------------------


@dataclass(frozen=True)
class ConjugacyWitness:
    """``w = conjugator . generator^power . conjugator^-1``."""

    generator: str
    power: int
    conjugator: DihedralWord

    def conjugate(self) -> DihedralWord:
        g = DihedralWord(self.conjugator.m, (A if self.generator == "a" else B,))
        c = self.conjugator
        return c * g ** self.power * c.inverse()


def _rotation(s: Sequence[Syllable], t: Sequence[Syllable]) -> int | None:
    """j with s == t[j:] + t[:j], if any."""
    if len(s) != len(t):
        return None
    for j in range(max(len(t), 1)):
        if tuple(t[j:]) + tuple(t[:j]) == tuple(s):
            return j
    return None


def is_conjugate_to_generator_power(w: DihedralWord) -> ConjugacyWitness | None:
    """Decide whether w = c g^n c^-1 for g in {a, b}, n != 0.

    Conjugacy is solved in the central quotient by rotating cyclically
    reduced free-product words; the lifted conjugator is then checked in
    A(m). Matching the exponent sums pins n, so the central defect of a
    quotient solution has exponent sum zero and is trivial.
    """
    m = w.m
    _need_large(m)
    if is_trivial(w):
        raise DihedralError("the trivial element is not a generator power")
    ea = sum(1 if x == A else -1 for x in w.letters if abs(x) == A)
    eb = sum(1 if x == B else -1 for x in w.letters if abs(x) == B)
    if m % 2:
        candidates = [("a", ea + eb), ("b", ea + eb)]
    elif eb == 0:
        candidates = [("a", ea)]
    elif ea == 0:
        candidates = [("b", eb)]
    else:
        candidates = []
    c_w, s_w = cyclic_reduction(central_quotient_image(w))
    for name, n in candidates:
        if n == 0:
            continue
        g = DihedralWord(m, (A if name == "a" else B,))
        c_t, s_t = cyclic_reduction(central_quotient_image(g ** n))
        j = _rotation(s_w.syllables, s_t.syllables)
        if j is None:
            continue
        u = FreeProductNF(m, s_t.syllables[:j])
        conj = lift(c_w * u.inverse() * c_t.inverse())
        witness = ConjugacyWitness(name, n, _shorten(conj, g))
        if words_equal(witness.conjugate(), w):
            return witness
    return None


def _shorten(c: DihedralWord, g: DihedralWord) -> DihedralWord:
    # c may be moved along its coset c.C(g) = c<g, centre>; keep the shortest spelling
    z = centre_generator(c.m)
    best = canonical_word(c)
    for i in (-1, 0, 1):
        for j in range(-c.m, c.m + 1):
            cand = canonical_word(c * g ** j * z ** i)
            if (len(cand), cand.compact()) < (len(best), best.compact()):
                best = cand
    return best
