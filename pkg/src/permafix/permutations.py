"""Permutations of [n] = {1, ..., n}.

A :class:`Permutation` stores its one-line form ``(pi(1), ..., pi(n))`` and
derives the canonical cycle decomposition on demand. Canonical cycle order
(each cycle rotated to start at its minimum, cycles sorted by length
descending then by minimum) fixes the cycle indices used by every downstream
table; for a standardized permutation it is the obvious left-to-right order.

Text grammar accepted by :func:`parse_permutation`::

    ONE_LINE := int (sep int)*
    CYCLES   := '(' int (sep int)* ')' +
    sep      := ',' | whitespace

A separator-free token such as ``246513`` or ``(1245)`` is read digit by
digit, which is only unambiguous for n <= 9.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _itertools_permutations
from typing import Iterator, NamedTuple, Optional, Sequence


class PermutationParseError(ValueError):
    def __init__(self, message: str, token: Optional[str] = None, position: Optional[int] = None):
        self.token = token
        self.position = position
        where = ""
        if token is not None:
            where = f" (token {token!r}"
            where += f" at position {position})" if position is not None else ")"
        super().__init__(message + where)


@dataclass(frozen=True)
class CycleType:
    """A partition l_1 >= ... >= l_m >= 1 of n."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(v) for v in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if not lengths:
            raise ValueError("cycle type must have at least one part")
        if any(v < 1 for v in lengths):
            raise ValueError(f"cycle lengths must be positive: {lengths}")
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"cycle lengths must be weakly decreasing: {lengths}")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> "CycleType":
        return cls(tuple(sorted((int(v) for v in lengths), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
        try:
            return cls.from_lengths([int(p) for p in parts])
        except ValueError as exc:
            raise PermutationParseError(f"bad cycle type {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def m(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self):
        return len(self.lengths)

    def __getitem__(self, i):
        return self.lengths[i]

    def __str__(self):
        return ",".join(map(str, self.lengths))


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n], stored in one-line notation (1-based values)."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        one_line = tuple(int(v) for v in self.one_line)
        object.__setattr__(self, "one_line", one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation of [n]: {one_line}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        image = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ValueError(f"element {a} out of range 1..{n}")
                if a in seen:
                    raise ValueError(f"element {a} repeated")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                image[a - 1] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(s * t)(i) == s(t(i))``."""
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.one_line[t - 1] for t in other.one_line))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            cycles.append(tuple(cyc))
        # starting each walk at the unvisited minimum already rotates to the minimum
        cycles.sort(key=lambda c: (-len(c), c[0]))
        return tuple(cycles)

    @property
    def m(self) -> int:
        return len(self.cycles)

    def cycle_index(self) -> tuple[int, ...]:
        """``cycle_index()[i - 1]`` is the canonical index of the cycle holding i."""
        idx = [0] * self.n
        for k, cyc in enumerate(self.cycles):
            for a in cyc:
                idx[a - 1] = k
        return tuple(idx)

    def is_standardized(self) -> bool:
        return self == standard_form(cycle_type(self))

    def __str__(self):
        return format_permutation(self)


def _split_tokens(body: str, offset: int) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + offset) for m in re.finditer(r"[^,\s]+", body)]


def _to_int(token: str, pos: int) -> int:
    if not token.isdigit():
        raise PermutationParseError("not a positive integer", token, pos)
    return int(token)


def _expand(tokens: list[tuple[str, int]], n: Optional[int]) -> list[tuple[int, str, int]]:
    """Turn tokens into elements, splitting a lone separator-free token into digits."""
    if len(tokens) == 1 and len(tokens[0][0]) > 1 and tokens[0][0].isdigit():
        tok, pos = tokens[0]
        if n is not None and n > 9:
            raise PermutationParseError(
                "separator-free multi-digit token is ambiguous for n > 9", tok, pos)
        return [(int(ch), ch, pos + i) for i, ch in enumerate(tok)]
    return [(_to_int(tok, pos), tok, pos) for tok, pos in tokens]


def parse_permutation(text: str, n: Optional[int] = None) -> Permutation:
    """Parse one-line or cycle notation.

    Cycle notation needs the degree ``n`` so omitted fixed points can be
    restored; ``"()"`` and ``"id"`` denote the identity.
    """
    s = text.strip()
    if not s:
        raise PermutationParseError("empty permutation text")
    if s.lower() in ("id", "e", "()"):
        if n is None:
            raise PermutationParseError("degree n is required for the identity")
        return Permutation.identity(n)

    if "(" in s or ")" in s:
        if n is None:
            raise PermutationParseError("degree n is required for cycle notation")
        cycles = []
        for m in re.finditer(r"\(([^()]*)\)|(\S)", s):
            if m.group(2) is not None:
                if m.group(2) == ",":
                    continue
                raise PermutationParseError("unexpected character", m.group(2), m.start())
            tokens = _split_tokens(m.group(1), m.start(1))
            if not tokens:
                continue
            cycles.append(_expand(tokens, n))
        seen = {}
        for cyc in cycles:
            for val, tok, p in cyc:
                if not 1 <= val <= n:
                    raise PermutationParseError(f"element out of range 1..{n}", tok, p)
                if val in seen:
                    raise PermutationParseError("repeated element", tok, p)
                seen[val] = p
        return Permutation.from_cycles([[v for v, _, _ in c] for c in cycles], n)

    elems = _expand(_split_tokens(s, 0), n)
    if n is not None and len(elems) != n:
        raise PermutationParseError(f"expected {n} entries, got {len(elems)}")
    size = len(elems)
    seen = set()
    for val, tok, p in elems:
        if not 1 <= val <= size:
            raise PermutationParseError(f"element out of range 1..{size}", tok, p)
        if val in seen:
            raise PermutationParseError("repeated element", tok, p)
        seen.add(val)
    return Permutation(tuple(v for v, _, _ in elems))


def format_permutation(p: Permutation, style: str = "cycles") -> str:
    """Render in cycle notation (fixed points omitted) or one-line notation.

    Separators are dropped only when n <= 9, mirroring the parser.
    """
    sep = "" if p.n <= 9 else ","
    if style == "one-line":
        return sep.join(map(str, p.one_line))
    if style != "cycles":
        raise ValueError(f"unknown style {style!r}")
    body = "".join("(" + sep.join(map(str, c)) + ")" for c in p.cycles if len(c) > 1)
    return body or "()"


def act(sigma: Permutation, x: Sequence) -> tuple:
    """Left action on points: ``(sigma . x)_i = x_{sigma^{-1}(i)}``."""
    if len(x) != sigma.n:
        raise ValueError(f"point has length {len(x)}, expected {sigma.n}")
    out = [None] * sigma.n
    for j, v in enumerate(x, start=1):
        out[sigma(j) - 1] = v
    return tuple(out)


def conjugate(tau: Permutation, sigma: Permutation) -> Permutation:
    """Return ``tau * sigma * tau^{-1}``."""
    return tau * sigma * tau.inverse()


def cycle_type(sigma: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in sigma.cycles))


def standard_form(cycle_type_: CycleType | Sequence[int]) -> Permutation:
    """The permutation (1 .. l_1)(l_1+1 .. l_1+l_2)... of the given cycle type."""
    ct = cycle_type_ if isinstance(cycle_type_, CycleType) else CycleType.from_lengths(cycle_type_)
    cycles = []
    start = 1
    for length in ct.lengths:
        cycles.append(list(range(start, start + length)))
        start += length
    return Permutation.from_cycles(cycles, ct.n)


def inversions(tau: Permutation) -> int:
    v = tau.one_line
    return sum(1 for a in range(len(v)) for b in range(a + 1, len(v)) if v[a] > v[b])


def inv_between(tau: Permutation, sigma: Permutation) -> list[list[int]]:
    """Cross-cycle inversion counts.

    Entry ``[j][k]`` (j < k, 0-based canonical cycle indices of sigma) counts
    positions a < b with a in cycle j, b in cycle k and tau(a) > tau(b).
    Entries on and below the diagonal are zero.
    """
    if tau.n != sigma.n:
        raise ValueError("degree mismatch")
    idx = sigma.cycle_index()
    m = sigma.m
    table = [[0] * m for _ in range(m)]
    v = tau.one_line
    for a in range(tau.n):
        for b in range(a + 1, tau.n):
            j, k = idx[a], idx[b]
            if j < k and v[a] > v[b]:
                table[j][k] += 1
    return table


class StandardPermutation(NamedTuple):
    order: tuple[int, ...]  # cycle indices, smallest first
    permutation: Permutation


def sigma_standard_permutations(sigma: Permutation) -> list[StandardPermutation]:
    """The m! permutations taking consecutive increasing values along each cycle.

    Each carries the linear order of the cycles it induces; cycles are read
    from their canonical starting point (the minimum element).
    """
    cycles = sigma.cycles
    result = []
    for order in _itertools_permutations(range(len(cycles))):
        values = [0] * sigma.n
        nxt = 1
        for k in order:
            for a in cycles[k]:
                values[a - 1] = nxt
                nxt += 1
        result.append(StandardPermutation(order, Permutation(tuple(values))))
    return result


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in _itertools_permutations(range(1, n + 1)):
        yield Permutation(p)


def integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[CycleType]:
    """All partitions of n as cycle types, in reverse lexicographic order."""
    if largest is None:
        largest = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, largest):
        yield CycleType(parts)
