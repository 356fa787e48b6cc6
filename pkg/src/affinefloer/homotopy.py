"""Free-group bookkeeping for the triangle-count derivation by boundary words.

Boundary loops of candidate triangles live in the free group on two
generators: `a` winds once around the cylinder fiber, `b` traverses the
middle section path upward.  A candidate is encoded by integers
(delta_0, ..., delta_k), and its boundary word is

    a^(i+j-h+k) * prod_{r=0..k} (a^r b)^(delta_r).

The triangle exists exactly when the word reduces to the identity.  Delta
sequences that kill all the b's are *admissible*: entries in {-1, 0, 1},
nonzero entries alternating in sign, first nonzero +1, last nonzero -1.
They biject with binary strings (s_0, ..., s_{k-1}) via
delta_r = s_r - s_{r-1} (with s_{-1} = s_k = 0), so there are 2^k of them,
and the output height satisfies h - (i+j) = k - sum(s_r).  Counting the
admissible sequences hitting a given h therefore reproduces the binomial
C(k, h-(i+j)) independently of both the section-count argument and the
ring oracle.

Words are stored run-length encoded so reduction is linear in the number of
runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

Run = tuple[str, int]  # (generator "a" or "b", nonzero exponent)
DeltaSequence = tuple[int, ...]


@dataclass(frozen=True)
class FreeWord:
    runs: tuple[Run, ...]

    def __post_init__(self):
        for gen, exp in self.runs:
            if gen not in ("a", "b") or exp == 0:
                raise ValueError(f"bad run ({gen}, {exp})")

    def is_identity(self) -> bool:
        return not self.runs

    def __repr__(self):
        if not self.runs:
            return "1"
        return "".join(f"{g}^{e}" if e != 1 else g for g, e in self.runs)


def word(runs: Iterable[tuple[str, int]]) -> FreeWord:
    """Build a word, dropping zero exponents but not merging or reducing."""
    return FreeWord(tuple((g, e) for g, e in runs if e != 0))


def concat(w1: FreeWord, w2: FreeWord) -> FreeWord:
    return FreeWord(w1.runs + w2.runs)


def inverse(w: FreeWord) -> FreeWord:
    return FreeWord(tuple((g, -e) for g, e in reversed(w.runs)))


def free_reduce(w: FreeWord) -> FreeWord:
    """Fully reduced form; the empty word is the identity."""
    stack: list[list] = []
    for gen, exp in w.runs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return FreeWord(tuple((g, e) for g, e in stack))


def triangle_word(i: int, j: int, h: int, k: int, deltas: Sequence[int]) -> FreeWord:
    """The (unreduced) boundary word of the candidate coded by deltas."""
    if len(deltas) != k + 1:
        raise ValueError(f"need {k + 1} deltas, got {len(deltas)}")
    runs: list[Run] = [("a", i + j - h + k)]
    for r, delta in enumerate(deltas):
        if delta >= 0:
            runs.extend([("a", r), ("b", 1)] * delta)
        else:
            runs.extend([("b", -1), ("a", -r)] * (-delta))
    return word(runs)


def is_admissible(deltas: Sequence[int]) -> bool:
    """Structural cancellation conditions on a delta sequence."""
    nonzero = [d for d in deltas if d != 0]
    if any(abs(d) > 1 for d in deltas):
        return False
    if not nonzero:
        return True
    if nonzero[0] != 1 or nonzero[-1] != -1:
        return False
    return all(u != v for u, v in zip(nonzero, nonzero[1:]))


def enumerate_admissible(k: int) -> list[DeltaSequence]:
    """All admissible sequences of length k+1, in lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sorted(
        deltas for deltas in product((-1, 0, 1), repeat=k + 1) if is_admissible(deltas)
    )


def delta_from_binary(s_seq: Sequence[int]) -> DeltaSequence:
    """delta_r = s_r - s_{r-1} with s_{-1} = s_k = 0 appended."""
    padded = [0] + list(s_seq) + [0]
    return tuple(padded[r + 1] - padded[r] for r in range(len(s_seq) + 1))


def binary_from_delta(deltas: Sequence[int]) -> tuple[int, ...]:
    """Partial sums of an admissible sequence; lands in {0,1}^k."""
    s, out = 0, []
    for d in deltas[:-1]:
        s += d
        out.append(s)
    return tuple(out)


def output_height(i: int, j: int, k: int, deltas: Sequence[int]) -> int:
    """The unique h the candidate can contribute to: i+j-h+k + sum(r*delta_r) = 0."""
    return i + j + k + sum(r * d for r, d in enumerate(deltas))


def homotopy_count(k: int, i: int, j: int, h: int) -> int:
    """Number of admissible candidates landing on output height h.

    Equals C(k, h-(i+j)) for 0 <= h-(i+j) <= k and 0 otherwise; computed by
    filtering the admissible sequences through h-(i+j) = k - sum(s_r).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    target = h - (i + j)
    return sum(
        1
        for deltas in enumerate_admissible(k)
        if k - sum(binary_from_delta(deltas)) == target
    )


def brute_force_admissible(k: int, bound: int) -> list[DeltaSequence]:
    """Oracle: search all delta in [-bound, bound]^(k+1) for trivial words.

    Each candidate is paired with its forced output height and kept iff the
    boundary word free-reduces to the identity.  Sequences whose entries do
    not sum to zero are skipped (nonzero abelianization already obstructs
    triviality); the free reduction is the deciding test for the rest.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    hits: list[DeltaSequence] = []
    for deltas in product(range(-bound, bound + 1), repeat=k + 1):
        if sum(deltas) != 0:
            continue
        h = output_height(0, 0, k, deltas)
        if free_reduce(triangle_word(0, 0, h, k, deltas)).is_identity():
            hits.append(deltas)
    return sorted(hits)
