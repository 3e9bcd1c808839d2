"""Acyclic positive-dependency evaluations and their blocking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._mode import oracle_enabled
from .decisive import min_dec_masks
from .errors import CapExceededError, InstanceError
from .logic import Interpretation, Value, iter_bits
from .model import AdfInstance

DEFAULT_EVALUATION_LIMIT = 100_000


@dataclass(frozen=True)
class AcyclicPdEvaluation:
    """A pd-sequence, its blocking set, and the min_dec(in, .) choice made at each step."""

    sequence: tuple[str, ...]
    blocking_set: frozenset[str]
    steps: tuple[Interpretation, ...] = ()

    def __post_init__(self):
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError("pd-sequence members must be distinct")
        if self.steps:
            if len(self.steps) != len(self.sequence):
                raise ValueError("one step interpretation per sequence member")
            seen: set[str] = set()
            for a, w in zip(self.sequence, self.steps):
                if not w.true <= seen:
                    raise ValueError(f"step for {a} relies on statements not yet in the sequence")
                seen.add(a)
            if frozenset().union(*(w.false for w in self.steps)) != self.blocking_set:
                raise ValueError("blocking set must be the union of the steps' false parts")

    @property
    def target(self) -> str:
        return self.sequence[-1]

    def __str__(self) -> str:
        return f"(({','.join(self.sequence)}),{{{','.join(sorted(self.blocking_set))}}})"


def blocks(v: Interpretation, e: AcyclicPdEvaluation) -> bool:
    """True iff ``v`` accepts a blocking-set member or rejects a sequence member."""
    domain = set(v.domain)
    return (any(b in domain and v[b] is Value.T for b in e.blocking_set)
            or any(a in domain and v[a] is Value.F for a in e.sequence))


def _check_member(D: AdfInstance, amask: int, s: str) -> int:
    if s not in D.index:
        raise InstanceError(f"unknown statement {s!r}")
    i = D.index[s]
    if not amask >> i & 1:
        raise InstanceError(f"{s!r} is not a member of the evaluation base set")
    return i


def enumerate_masks(D: AdfInstance, amask: int, i: int, limit: int = DEFAULT_EVALUATION_LIMIT):
    """Depth-first enumeration of every acyclic pd-evaluation for ``i`` on ``amask``.

    Yields (sequence, steps) with sequence a tuple of indices and steps a
    tuple of (tmask, fmask) choices.
    """
    choices = {a: [w for w in min_dec_masks(D, True, a) if w[0] & ~amask == 0] for a in iter_bits(amask)}
    others = [a for a in iter_bits(amask) if a != i]
    found = 0

    def extend(seq: list[int], steps: list[tuple[int, int]], used: int):
        nonlocal found
        for wt, wf in choices[i]:
            if wt & ~used == 0:
                found += 1
                if found > limit:
                    raise CapExceededError(f"more than {limit} acyclic pd-evaluations")
                yield tuple(seq) + (i,), tuple(steps) + ((wt, wf),)
        for a in others:
            if used >> a & 1:
                continue
            for wt, wf in choices[a]:
                if wt & ~used == 0:
                    seq.append(a)
                    steps.append((wt, wf))
                    yield from extend(seq, steps, used | 1 << a)
                    seq.pop()
                    steps.pop()

    yield from extend([], [], 0)


def _irredundant(seq: tuple[int, ...], steps: tuple[tuple[int, int], ...]) -> bool:
    needed = 1 << seq[-1]
    for a, (wt, _) in zip(reversed(seq), reversed(steps)):
        if not needed >> a & 1:
            return False
        needed |= wt
    return True


def enumerate_acyclic_evaluations(D: AdfInstance, A: Iterable[str], s: str, *,
                                  limit: int = DEFAULT_EVALUATION_LIMIT,
                                  irredundant: bool = False) -> list[AcyclicPdEvaluation]:
    """All acyclic pd-evaluations of ``s`` on ``A``.

    With ``irredundant=True`` only sequences in which every member is
    (transitively) required by the target are kept.
    """
    amask = D.mask(A)
    i = _check_member(D, amask, s)
    out = []
    for seq, steps in enumerate_masks(D, amask, i, limit):
        if irredundant and not _irredundant(seq, steps):
            continue
        bmask = 0
        for _, wf in steps:
            bmask |= wf
        out.append(AcyclicPdEvaluation(
            sequence=tuple(D.statements[a] for a in seq),
            blocking_set=frozenset(D.names(bmask)),
            steps=tuple(Interpretation(D.statements, wt | wf, wt) for wt, wf in steps),
        ))
    return out


def derivable(D: AdfInstance, amask: int, *, rejected: int = 0, forbid: int = 0,
              confine: int | None = None) -> int:
    """Least fixpoint of statements reachable by an acyclic pd-sequence inside ``amask``.

    A statement outside ``rejected`` joins once one of its min_dec(in, .)
    choices has its true part already derived, its false part disjoint from
    ``forbid`` and (if given) contained in ``confine``.
    """
    candidates = amask & ~rejected
    options = {}
    for a in iter_bits(candidates):
        ok = [(wt, wf) for wt, wf in min_dec_masks(D, True, a)
              if wf & forbid == 0 and (confine is None or wf & ~confine == 0)]
        if ok:
            options[a] = ok
    delta = 0
    changed = True
    while changed:
        changed = False
        for a, ok in options.items():
            if delta >> a & 1:
                continue
            if any(wt & ~delta == 0 for wt, _ in ok):
                delta |= 1 << a
                changed = True
    return delta


def _blocked_mask(tmask: int, fmask: int, seq: tuple[int, ...], steps) -> bool:
    if any(fmask >> a & 1 for a in seq):
        return True
    return any(wf & tmask for _, wf in steps)


def unblocked_exists_masks(D: AdfInstance, amask: int, i: int, tmask: int, fmask: int) -> bool:
    if oracle_enabled():
        return any(not _blocked_mask(tmask, fmask, seq, steps)
                   for seq, steps in enumerate_masks(D, amask, i))
    return bool(derivable(D, amask, rejected=fmask, forbid=tmask) >> i & 1)


def exists_unblocked_evaluation(D: AdfInstance, A: Iterable[str], s: str, v: Interpretation) -> bool:
    amask = D.mask(A)
    i = _check_member(D, amask, s)
    v = D.align(v)
    return unblocked_exists_masks(D, amask, i, v.tmask, v.fmask)
