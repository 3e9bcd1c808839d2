"""Extension-based semantics: membership tests and brute-force enumeration."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from ._mode import oracle_enabled, oracle_paths
from .acyclic import derivable, enumerate_masks, unblocked_exists_masks
from .decisive import Decision, decide_masks
from .errors import CapExceededError
from .logic import iter_bits
from .model import AdfInstance
from .ranges import acyclic_range_masks, conflict_free_mask, range_masks

SEMANTICS = (
    "conflict-free", "pd-acyclic-conflict-free", "naive", "pd-acyclic-naive",
    "model", "stable", "grounded",
    "cc-admissible", "aa-admissible", "cc-complete", "aa-complete",
    "cc-preferred", "aa-preferred",
)

DEFAULT_MAX_STATEMENTS = 20


# mask-level tests -----------------------------------------------------------

def _all_decisively_in(D: AdfInstance, members: int, t: int, f: int) -> bool:
    return all(decide_masks(D, i, t, f) is Decision.IN for i in iter_bits(members))


def pd_acyclic_mask(D: AdfInstance, m: int) -> bool:
    if not conflict_free_mask(D, m):
        return False
    # members are all t, so only blocking-set members inside m can block
    if oracle_enabled():
        return all(unblocked_exists_masks(D, m, i, m, 0) for i in iter_bits(m))
    return derivable(D, m, forbid=m) == m


def model_mask(D: AdfInstance, m: int) -> bool:
    if not conflict_free_mask(D, m):
        return False
    return not any(D.cond[i](m) for i in iter_bits(D.full & ~m))


def stable_mask(D: AdfInstance, m: int) -> bool:
    return model_mask(D, m) and pd_acyclic_mask(D, m)


def cc_admissible_mask(D: AdfInstance, m: int) -> bool:
    if not conflict_free_mask(D, m):
        return False
    t, f = range_masks(D, m)
    return _all_decisively_in(D, m, t, f)


def _protected_evaluations(D: AdfInstance, m: int, f: int) -> bool:
    """Every member has an evaluation on ``m`` whose blocking set lies in ``f``."""
    if oracle_enabled():
        # sequence members lie in m (all t) and B within f, so such evaluations are unblocked
        return all(any(_union_f(steps) & ~f == 0 for _, steps in enumerate_masks(D, m, i))
                   for i in iter_bits(m))
    return derivable(D, m, confine=f) == m


def _union_f(steps) -> int:
    b = 0
    for _, wf in steps:
        b |= wf
    return b


def aa_admissible_mask(D: AdfInstance, m: int) -> bool:
    if not pd_acyclic_mask(D, m):
        return False
    t, f = acyclic_range_masks(D, m)
    return _all_decisively_in(D, m, t, f) and _protected_evaluations(D, m, f)


def cc_complete_mask(D: AdfInstance, m: int) -> bool:
    if not cc_admissible_mask(D, m):
        return False
    t, f = range_masks(D, m)
    return not any(decide_masks(D, i, t, f) is Decision.IN for i in iter_bits(D.full & ~m))


def aa_complete_mask(D: AdfInstance, m: int) -> bool:
    if not aa_admissible_mask(D, m):
        return False
    t, f = acyclic_range_masks(D, m)
    return not any(decide_masks(D, i, t, f) is Decision.IN for i in iter_bits(D.full & ~m))


def grounded_mask(D: AdfInstance) -> int:
    """Iterated decisiveness from the empty interpretation; returns the true mask."""
    t = f = 0
    while True:
        new_t = new_f = 0
        for i in iter_bits(D.full & ~(t | f)):
            d = decide_masks(D, i, t, f)
            if d is Decision.IN:
                new_t |= 1 << i
            elif d is Decision.OUT:
                new_f |= 1 << i
        if not (new_t | new_f):
            return t
        t |= new_t
        f |= new_f


_MEMBERSHIP: dict[str, Callable[[AdfInstance, int], bool]] = {
    "conflict-free": conflict_free_mask,
    "pd-acyclic-conflict-free": pd_acyclic_mask,
    "model": model_mask,
    "stable": stable_mask,
    "cc-admissible": cc_admissible_mask,
    "aa-admissible": aa_admissible_mask,
    "cc-complete": cc_complete_mask,
    "aa-complete": aa_complete_mask,
}

_MAXIMAL_OF = {
    "naive": "conflict-free",
    "pd-acyclic-naive": "pd-acyclic-conflict-free",
    "cc-preferred": "cc-admissible",
    "aa-preferred": "aa-admissible",
}


# public membership API ---------------------------------------------------------

def is_conflict_free(D: AdfInstance, E: Iterable[str]) -> bool:
    return conflict_free_mask(D, D.mask(E))


def is_pd_acyclic_conflict_free(D: AdfInstance, E: Iterable[str]) -> bool:
    return pd_acyclic_mask(D, D.mask(E))


def is_model(D: AdfInstance, E: Iterable[str]) -> bool:
    return model_mask(D, D.mask(E))


def is_stable(D: AdfInstance, E: Iterable[str]) -> bool:
    return stable_mask(D, D.mask(E))


def is_cc_admissible(D: AdfInstance, E: Iterable[str]) -> bool:
    return cc_admissible_mask(D, D.mask(E))


def is_aa_admissible(D: AdfInstance, E: Iterable[str]) -> bool:
    return aa_admissible_mask(D, D.mask(E))


def is_cc_complete(D: AdfInstance, E: Iterable[str]) -> bool:
    return cc_complete_mask(D, D.mask(E))


def is_aa_complete(D: AdfInstance, E: Iterable[str]) -> bool:
    return aa_complete_mask(D, D.mask(E))


def grounded_extension(D: AdfInstance) -> frozenset[str]:
    return frozenset(D.names(grounded_mask(D)))


def is_extension(D: AdfInstance, E: Iterable[str], name: str) -> bool:
    """Membership test for any semantics, maximality ones included."""
    m = D.mask(E)
    if name == "grounded":
        return m == grounded_mask(D)
    if name in _MAXIMAL_OF:
        base = _MEMBERSHIP[_MAXIMAL_OF[name]]
        if not base(D, m):
            return False
        return not _has_member_above(D, base, m)
    try:
        return _MEMBERSHIP[name](D, m)
    except KeyError:
        raise ValueError(f"unknown semantics {name!r}") from None


def _has_member_above(D: AdfInstance, base, m: int) -> bool:
    rest = D.full & ~m
    sub = rest
    while sub:
        if base(D, m | sub):
            return True
        sub = (sub - 1) & rest
    return False


# enumeration --------------------------------------------------------------------

def _canonical_key(m: int) -> tuple[int, tuple[int, ...]]:
    return bin(m).count("1"), tuple(iter_bits(m))


def maximal_masks(masks: Iterable[int]) -> list[int]:
    masks = list(masks)
    return [m for m in masks if not any(o != m and o & m == m for o in masks)]


def _scan(D: AdfInstance, name: str, lo: int, hi: int, oracle: bool) -> list[int]:
    test = _MEMBERSHIP[name]
    with oracle_paths(oracle):
        return [m for m in range(lo, hi) if test(D, m)]


def extension_masks(D: AdfInstance, name: str, *, max_statements: int = DEFAULT_MAX_STATEMENTS,
                    jobs: int = 1) -> list[int]:
    if name not in SEMANTICS:
        raise ValueError(f"unknown semantics {name!r}")
    if name == "grounded":
        return [grounded_mask(D)]
    if D.n > max_statements:
        raise CapExceededError(f"{D.n} statements exceed the subset-scan cap of {max_statements}")
    base = _MAXIMAL_OF.get(name, name)
    total = 1 << D.n
    if jobs > 1 and total >= 256:
        step = -(-total // (jobs * 4))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_scan, *zip(*[(D, base, lo, hi, oracle_enabled()) for lo, hi in bounds]))
            found = [m for part in parts for m in part]
    else:
        found = _scan(D, base, 0, total, oracle_enabled())
    if name in _MAXIMAL_OF:
        found = maximal_masks(found)
    return sorted(found, key=_canonical_key)


def enumerate_extensions(D: AdfInstance, name: str, *, max_statements: int = DEFAULT_MAX_STATEMENTS,
                         jobs: int = 1) -> list[tuple[str, ...]]:
    """All extensions of ``D`` under ``name``, sorted by size then declaration order."""
    return [D.names(m) for m in extension_masks(D, name, max_statements=max_statements, jobs=jobs)]
