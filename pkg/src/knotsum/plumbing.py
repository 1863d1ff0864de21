"""Linear plumbings of twisted annuli and their rewrite calculus.

A word S[a1,...,an] stands for n unknotted annuli plumbed in a row, the
i-th carrying ai half-twists (all ai even).  Three moves act on words:

  rule 1   S[a...] *4 S[b...] = S[a...,b...]      (4-gon plumbing sum)
  rule 2   S[a...] = S[a..., c, 0]                 (boundary unchanged)
  rule 3   S[..., x, 0, y, ...] = S[..., x+y, ...] (boundary unchanged)

Rules 2 and 3 run both ways and never change the boundary link; rule 1
genuinely sums two surfaces.  The surface is minimal genus exactly when
no entry is zero, so searches accept a word only in that form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .profiles import InvariantProfile, profile_of_seifert_matrix
from .seifert import seifert_matrix_of_plumbing

RULE_SUM = "1"
RULE_STABILIZE = "2"
RULE_MERGE = "3"
RULE_UNSTABILIZE = "2^-1"
RULE_SPLIT = "3^-1"


class PlumbingError(ValueError):
    """Malformed word or rule applied where its precondition fails."""


@dataclass(frozen=True)
class PlumbingWord:
    """Ordered even twist counts; the empty word is a disk."""

    twists: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for value in self.twists:
            if not isinstance(value, int) or isinstance(value, bool):
                raise PlumbingError(f"twist {value!r} is not an integer")
            if value % 2:
                raise PlumbingError(f"twist {value} is odd")

    @classmethod
    def parse(cls, text: str) -> PlumbingWord:
        """Read the literal "S[2,2,-2,0]" form; "S[]" is the empty word."""
        body = text.strip()
        if not body.startswith("S[") or not body.endswith("]"):
            raise PlumbingError(f"expected S[...], got {text!r}")
        inner = body[2:-1].strip()
        if not inner:
            return cls()
        try:
            return cls(tuple(int(part) for part in inner.split(",")))
        except ValueError as exc:
            raise PlumbingError(f"bad twist list in {text!r}") from exc

    def format(self) -> str:
        return "S[" + ",".join(str(v) for v in self.twists) + "]"

    def __str__(self) -> str:
        return self.format()

    @property
    def size(self) -> int:
        return len(self.twists)

    @property
    def is_minimal_genus(self) -> bool:
        """Zero-twist annuli are compressible; none present means minimal."""
        return all(v != 0 for v in self.twists)


def star4(left: PlumbingWord, right: PlumbingWord) -> PlumbingWord:
    """Plumb two linear plumbings end to end (a 4-gon Murasugi sum).

    Unlike rules 2 and 3 this changes the boundary link.
    """
    return PlumbingWord(left.twists + right.twists)


def apply_rule2(word: PlumbingWord, a: int, forward: bool = True) -> PlumbingWord:
    """Append (a, 0) when forward; strip a trailing (a, 0) otherwise.

    The backward direction checks that the removed entry really is `a`,
    so recorded steps replay only against the word they came from.
    """
    if a % 2:
        raise PlumbingError(f"twist {a} is odd")
    if forward:
        return PlumbingWord(word.twists + (a, 0))
    if word.size < 2 or word.twists[-1] != 0:
        raise PlumbingError(f"{word} does not end in a (c, 0) pair")
    if word.twists[-2] != a:
        raise PlumbingError(
            f"{word} ends in ({word.twists[-2]}, 0), not ({a}, 0)"
        )
    return PlumbingWord(word.twists[:-2])


def apply_rule3(word: PlumbingWord, zero_pos: int) -> PlumbingWord:
    """Dissolve the zero at index zero_pos, adding its two neighbours.

    The zero must be interior: both neighbours have to exist.
    """
    if not 1 <= zero_pos <= word.size - 2:
        raise PlumbingError(f"position {zero_pos} is not interior in {word}")
    if word.twists[zero_pos] != 0:
        raise PlumbingError(f"entry at {zero_pos} in {word} is not zero")
    merged = word.twists[zero_pos - 1] + word.twists[zero_pos + 1]
    return PlumbingWord(
        word.twists[: zero_pos - 1] + (merged,) + word.twists[zero_pos + 2 :]
    )


def apply_rule3_inverse(word: PlumbingWord, pos: int, x: int) -> PlumbingWord:
    """Split entry c at index pos into the triple (x, 0, c - x)."""
    if not 0 <= pos < word.size:
        raise PlumbingError(f"position {pos} out of range in {word}")
    if x % 2:
        raise PlumbingError(f"twist {x} is odd")
    c = word.twists[pos]
    return PlumbingWord(
        word.twists[:pos] + (x, 0, c - x) + word.twists[pos + 1 :]
    )


class RewriteStep(NamedTuple):
    rule: str
    position: int
    params: tuple[int, ...] = ()


def apply_step(word: PlumbingWord, step: RewriteStep) -> PlumbingWord:
    if step.rule == RULE_SUM:
        if step.position != word.size:
            raise PlumbingError("sum step must attach at the word's end")
        return PlumbingWord(word.twists + step.params)
    if step.rule == RULE_STABILIZE:
        return apply_rule2(word, step.params[0], forward=True)
    if step.rule == RULE_UNSTABILIZE:
        return apply_rule2(word, step.params[0], forward=False)
    if step.rule == RULE_MERGE:
        return apply_rule3(word, step.position)
    if step.rule == RULE_SPLIT:
        return apply_rule3_inverse(word, step.position, step.params[0])
    raise PlumbingError(f"unknown rule id {step.rule!r}")


@dataclass(frozen=True)
class RewriteTrace:
    """A replayable rule sequence from start to end.

    Steps from rules 2/3 and their inverses preserve the boundary's
    invariant profile; a sum step (rule 1) changes it by design.
    """

    start: PlumbingWord
    end: PlumbingWord
    steps: tuple[RewriteStep, ...]

    def replay(self) -> list[PlumbingWord]:
        """Every word along the trace, start and end included."""
        words = [self.start]
        for step in self.steps:
            words.append(apply_step(words[-1], step))
        if words[-1] != self.end:
            raise PlumbingError(
                f"trace replay ends at {words[-1]}, recorded end is {self.end}"
            )
        return words

    def check_profiles(self) -> bool:
        """True when every non-sum step kept the boundary invariants intact.

        Compared through link_key: the surface genus may drop along the
        way, the boundary link may not change.
        """
        words = self.replay()
        for step, before, after in zip(self.steps, words, words[1:]):
            if step.rule == RULE_SUM:
                continue
            if boundary_profile(before).link_key() != boundary_profile(after).link_key():
                return False
        return True


def boundary_profile(word: PlumbingWord) -> InvariantProfile:
    """Invariant profile of the plumbing's boundary link."""
    return profile_of_seifert_matrix(seifert_matrix_of_plumbing(word.twists))


def normalize(word: PlumbingWord) -> RewriteTrace:
    """Shrink a word to a fixpoint with no trailing (c, 0) pair and no
    interior zero, recording each rule application.

    Leading or lone zeros stay put: rule 3 needs both neighbours, and no
    rule removes them directly.
    """
    steps: list[RewriteStep] = []
    current = word
    while True:
        if current.size >= 2 and current.twists[-1] == 0:
            step = RewriteStep(RULE_UNSTABILIZE, current.size - 2,
                               (current.twists[-2],))
        else:
            zero = next(
                (j for j in range(1, current.size - 1) if current.twists[j] == 0),
                None,
            )
            if zero is None:
                break
            step = RewriteStep(RULE_MERGE, zero)
        steps.append(step)
        current = apply_step(current, step)
    return RewriteTrace(start=word, end=current, steps=tuple(steps))


@dataclass(frozen=True)
class SearchBudget:
    max_length: int = 10
    max_twist: int = 8
    max_states: int = 1_000_000

    def describe(self) -> str:
        return (f"length <= {self.max_length}, |twist| <= {self.max_twist}, "
                f"states <= {self.max_states}")


def _even_range(limit: int) -> range:
    return range(-limit, limit + 1, 2)


def _neighbors(word: PlumbingWord,
               budget: SearchBudget) -> Iterator[tuple[RewriteStep, PlumbingWord]]:
    twists = word.twists
    n = len(twists)
    if n >= 2 and twists[-1] == 0:
        step = RewriteStep(RULE_UNSTABILIZE, n - 2, (twists[-2],))
        yield step, PlumbingWord(twists[:-2])
    for j in range(1, n - 1):
        if twists[j] == 0:
            merged = twists[j - 1] + twists[j + 1]
            if abs(merged) <= budget.max_twist:
                yield RewriteStep(RULE_MERGE, j), apply_rule3(word, j)
    if n + 2 <= budget.max_length:
        for a in _even_range(budget.max_twist):
            yield (RewriteStep(RULE_STABILIZE, n, (a,)),
                   PlumbingWord(twists + (a, 0)))
        for j in range(n):
            c = twists[j]
            for x in _even_range(budget.max_twist):
                if abs(c - x) <= budget.max_twist:
                    yield (RewriteStep(RULE_SPLIT, j, (x,)),
                           apply_rule3_inverse(word, j, x))


def rewrite_search(start: PlumbingWord,
                   target: InvariantProfile,
                   budget: SearchBudget | None = None) -> RewriteTrace | None:
    """Breadth-first search through rules 2/3 for a minimal-genus word
    whose boundary matches the target profile (chirality-blind).

    Returns None when the budget runs out; rule applications preserve the
    boundary, so only targets matching the start's boundary are reachable.
    """
    budget = budget or SearchBudget()
    goal = target.fingerprint()

    def is_goal(word: PlumbingWord) -> bool:
        return word.is_minimal_genus and boundary_profile(word).fingerprint() == goal

    if is_goal(start):
        return RewriteTrace(start=start, end=start, steps=())

    visited = {start.twists}
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], RewriteStep]] = {}
    queue: deque[PlumbingWord] = deque([start])
    while queue:
        current = queue.popleft()
        for step, nxt in _neighbors(current, budget):
            if nxt.twists in visited:
                continue
            if len(visited) >= budget.max_states:
                return None
            visited.add(nxt.twists)
            parents[nxt.twists] = (current.twists, step)
            if is_goal(nxt):
                steps: list[RewriteStep] = []
                cursor = nxt.twists
                while cursor != start.twists:
                    prev, via = parents[cursor]
                    steps.append(via)
                    cursor = prev
                steps.reverse()
                return RewriteTrace(start=start, end=nxt, steps=tuple(steps))
            queue.append(nxt)
    return None


@dataclass(frozen=True)
class TwoBridgeFraction:
    """Continued-fraction class p/q of a plumbing boundary.

    |p| equals the boundary determinant; p odd means a knot, p even a
    2-component link, p = 0 the 2-component unlink.
    """

    p: int
    q: int

    @property
    def is_knot(self) -> bool:
        return self.p % 2 != 0

    @property
    def components(self) -> int:
        return 1 if self.is_knot else 2

    def schubert_class(self) -> frozenset[int]:
        """Residues q' with b(p, q') the same unoriented link up to mirror."""
        P = abs(self.p)
        if P == 0:
            return frozenset()
        q = self.q % P
        if P == 1:
            return frozenset({0})
        inv = pow(q, -1, P)
        return frozenset({q, P - q, inv, (P - inv) % P})

    def equivalent_to(self, other: TwoBridgeFraction) -> bool:
        if abs(self.p) != abs(other.p):
            return False
        if abs(self.p) == 0:
            return True
        return bool(self.schubert_class() & other.schubert_class())


def two_bridge_fraction(word: PlumbingWord) -> TwoBridgeFraction:
    """Fraction of the boundary via the twist continued fraction.

    Convention: multiply [[-a, -1], [1, 0]] over the entries; p and q are
    the first column.  Fixed so |p| matches the boundary determinant.
    """
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in word.twists:
        m00, m01, m10, m11 = (
            -a * m00 + m01, -m00,
            -a * m10 + m11, -m10,
        )
    p, q = m00, m10
    if p < 0:
        p, q = -p, -q
    return TwoBridgeFraction(p=p, q=q % p if p else (1 if q else 0))
