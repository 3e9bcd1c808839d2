"""Propositional acceptance conditions and three-valued interpretations.

Formulas are immutable trees over statement names.  Interpretations are
stored as a pair of bit masks over an ordered domain: ``assigned`` marks the
statements mapped to a classical value and ``value`` marks those mapped to
``t``.  Unassigned statements read as ``u``, so partial two-valued and
three-valued interpretations share one type.
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import DomainMismatchError, PartialInterpretationError


# ---------------------------------------------------------------------------
# Formulas


class Formula:
    """Base class of the acceptance-condition AST."""

    __slots__ = ()

    def atoms(self) -> frozenset[str]:
        raise NotImplementedError

    def evaluate(self, true_atoms: Iterable[str]) -> bool:
        """Classical value with every atom outside ``true_atoms`` read as false."""
        truth = frozenset(true_atoms)
        return _eval(self, truth.__contains__)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def atoms(self) -> frozenset[str]:
        return frozenset((self.name,))


@dataclass(frozen=True)
class Top(Formula):
    def atoms(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True)
class Bottom(Formula):
    def atoms(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def atoms(self) -> frozenset[str]:
        return self.arg.atoms()


@dataclass(frozen=True)
class And(Formula):
    args: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.args) < 2:
            raise ValueError("And needs at least two operands")

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*(a.atoms() for a in self.args))


@dataclass(frozen=True)
class Or(Formula):
    args: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.args) < 2:
            raise ValueError("Or needs at least two operands")

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*(a.atoms() for a in self.args))


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


def _eval(f: Formula, is_true: Callable[[str], bool]) -> bool:
    if isinstance(f, Atom):
        return is_true(f.name)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not _eval(f.arg, is_true)
    if isinstance(f, And):
        return all(_eval(a, is_true) for a in f.args)
    if isinstance(f, Or):
        return any(_eval(a, is_true) for a in f.args)
    if isinstance(f, Imp):
        return (not _eval(f.left, is_true)) or _eval(f.right, is_true)
    if isinstance(f, Iff):
        return _eval(f.left, is_true) == _eval(f.right, is_true)
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace atoms by formulas; no simplification is performed."""
    if isinstance(f, Atom):
        return mapping.get(f.name, f)
    if isinstance(f, (Top, Bottom)):
        return f
    if isinstance(f, Not):
        return Not(substitute(f.arg, mapping))
    if isinstance(f, And):
        return And(tuple(substitute(a, mapping) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(substitute(a, mapping) for a in f.args))
    if isinstance(f, Imp):
        return Imp(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Iff):
        return Iff(substitute(f.left, mapping), substitute(f.right, mapping))
    raise TypeError(f"not a formula: {f!r}")


def compile_formula(f: Formula, index: Mapping[str, int]) -> Callable[[int], bool]:
    """Compile ``f`` into a predicate over a bit mask of true statements."""
    if isinstance(f, Atom):
        bit = 1 << index[f.name]
        return lambda m: bool(m & bit)
    if isinstance(f, Top):
        return lambda m: True
    if isinstance(f, Bottom):
        return lambda m: False
    if isinstance(f, Not):
        g = compile_formula(f.arg, index)
        return lambda m: not g(m)
    if isinstance(f, And):
        gs = tuple(compile_formula(a, index) for a in f.args)
        return lambda m: all(g(m) for g in gs)
    if isinstance(f, Or):
        gs = tuple(compile_formula(a, index) for a in f.args)
        return lambda m: any(g(m) for g in gs)
    if isinstance(f, Imp):
        l, r = compile_formula(f.left, index), compile_formula(f.right, index)
        return lambda m: (not l(m)) or r(m)
    if isinstance(f, Iff):
        l, r = compile_formula(f.left, index), compile_formula(f.right, index)
        return lambda m: l(m) == r(m)
    raise TypeError(f"not a formula: {f!r}")


def compile_kleene(f: Formula, index: Mapping[str, int]) -> Callable[[int, int], bool | None]:
    """Compile ``f`` into strong Kleene evaluation over (true mask, false mask).

    Returns True/False when the value is fixed by the assigned atoms under
    Kleene's connectives and None otherwise.  A definite answer is always
    sound w.r.t. every completion; None may still hide a decided value
    (e.g. ``a or not a``).
    """
    if isinstance(f, Atom):
        bit = 1 << index[f.name]

        def atom(t, fl):
            if t & bit:
                return True
            if fl & bit:
                return False
            return None
        return atom
    if isinstance(f, Top):
        return lambda t, fl: True
    if isinstance(f, Bottom):
        return lambda t, fl: False
    if isinstance(f, Not):
        g = compile_kleene(f.arg, index)

        def neg(t, fl):
            x = g(t, fl)
            return None if x is None else not x
        return neg
    if isinstance(f, (And, Or)):
        gs = tuple(compile_kleene(a, index) for a in f.args)
        dominant = isinstance(f, Or)

        def junction(t, fl):
            unknown = False
            for g in gs:
                x = g(t, fl)
                if x is None:
                    unknown = True
                elif x is dominant:
                    return dominant
            return None if unknown else not dominant
        return junction
    if isinstance(f, Imp):
        return compile_kleene(Or((Not(f.left), f.right)), index)
    if isinstance(f, Iff):
        l, r = compile_kleene(f.left, index), compile_kleene(f.right, index)

        def iff(t, fl):
            x, y = l(t, fl), r(t, fl)
            if x is None or y is None:
                return None
            return x == y
        return iff
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Interpretations


class Value(str, enum.Enum):
    T = "t"
    F = "f"
    U = "u"

    def __str__(self) -> str:
        return self.value


_VALUE_ALIASES = {
    True: Value.T, False: Value.F, None: Value.U,
    "t": Value.T, "f": Value.F, "u": Value.U,
    Value.T: Value.T, Value.F: Value.F, Value.U: Value.U,
}


@functools.lru_cache(maxsize=None)
def _index_of(domain: tuple[str, ...]) -> dict[str, int]:
    return {s: i for i, s in enumerate(domain)}


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Interpretation:
    domain: tuple[str, ...]
    assigned: int = 0
    value: int = 0

    def __post_init__(self):
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("duplicate statement in domain")
        full = (1 << len(self.domain)) - 1
        if self.assigned & ~full or self.value & ~self.assigned:
            raise ValueError("malformed interpretation masks")

    # construction ---------------------------------------------------------

    @classmethod
    def from_mapping(cls, domain: Iterable[str], mapping: Mapping[str, object]) -> "Interpretation":
        domain = tuple(domain)
        index = _index_of(domain)
        assigned = value = 0
        for s, x in mapping.items():
            if s not in index:
                raise DomainMismatchError(f"statement {s!r} not in domain")
            x = _VALUE_ALIASES[x]
            if x is Value.U:
                continue
            assigned |= 1 << index[s]
            if x is Value.T:
                value |= 1 << index[s]
        return cls(domain, assigned, value)

    @classmethod
    def from_sets(cls, domain: Iterable[str], true: Iterable[str] = (), false: Iterable[str] = ()) -> "Interpretation":
        mapping: dict[str, object] = {s: Value.T for s in true}
        for s in false:
            if s in mapping:
                raise ValueError(f"statement {s!r} both true and false")
            mapping[s] = Value.F
        return cls.from_mapping(domain, mapping)

    @classmethod
    def parse(cls, text: str, domain: Iterable[str] | None = None) -> "Interpretation":
        """Read ``{a:t, b:f}``; the domain defaults to the mentioned statements."""
        body = text.strip().strip("{}").strip()
        mapping = {}
        if body:
            for item in body.split(","):
                s, _, x = item.partition(":")
                mapping[s.strip()] = x.strip()
        return cls.from_mapping(tuple(domain) if domain is not None else tuple(mapping), mapping)

    # views ----------------------------------------------------------------

    @property
    def tmask(self) -> int:
        return self.value

    @property
    def fmask(self) -> int:
        return self.assigned & ~self.value

    @property
    def umask(self) -> int:
        return ((1 << len(self.domain)) - 1) & ~self.assigned

    def _names(self, mask: int) -> frozenset[str]:
        return frozenset(self.domain[i] for i in iter_bits(mask))

    @property
    def true(self) -> frozenset[str]:
        return self._names(self.tmask)

    @property
    def false(self) -> frozenset[str]:
        return self._names(self.fmask)

    @property
    def undecided(self) -> frozenset[str]:
        return self._names(self.umask)

    def __getitem__(self, s: str) -> Value:
        bit = 1 << _index_of(self.domain)[s]
        if not self.assigned & bit:
            return Value.U
        return Value.T if self.value & bit else Value.F

    def is_two_valued(self) -> bool:
        """True when no statement of the domain is left undecided."""
        return self.umask == 0

    def as_dict(self) -> dict[str, str]:
        return {s: self[s].value for s in self.domain}

    def __str__(self) -> str:
        return "{" + ",".join(f"{s}:{self[s].value}" for s in self.domain) + "}"

    def restricted(self, keep: Iterable[str]) -> "Interpretation":
        """Same domain, with every statement outside ``keep`` made undecided."""
        index = _index_of(self.domain)
        mask = 0
        for s in keep:
            mask |= 1 << index[s]
        return Interpretation(self.domain, self.assigned & mask, self.value & mask)

    def realign(self, domain: Sequence[str]) -> "Interpretation":
        """The same assignment over a (super)set domain in a different order."""
        domain = tuple(domain)
        if domain == self.domain:
            return self
        index = _index_of(domain)
        assigned = value = 0
        for i, s in enumerate(self.domain):
            bit = 1 << i
            if self.assigned & bit:
                if s not in index:
                    raise DomainMismatchError(f"statement {s!r} not in target domain")
                assigned |= 1 << index[s]
                if self.value & bit:
                    value |= 1 << index[s]
        return Interpretation(domain, assigned, value)


def _same_domain(v: Interpretation, w: Interpretation) -> None:
    if v.domain != w.domain:
        if set(v.domain) == set(w.domain):
            return
        raise DomainMismatchError("interpretations have different domains")


def leq_info(v: Interpretation, w: Interpretation) -> bool:
    """Information ordering: every value of ``v`` is u or equal to the one in ``w``."""
    _same_domain(v, w)
    w = w.realign(v.domain)
    if v.assigned & ~w.assigned:
        return False
    return (v.value ^ w.value) & v.assigned == 0


def meet(v: Interpretation, w: Interpretation) -> Interpretation:
    """Pointwise meet: t/t -> t, f/f -> f, anything else -> u."""
    _same_domain(v, w)
    w = w.realign(v.domain)
    agree = v.assigned & w.assigned & ~(v.value ^ w.value)
    return Interpretation(v.domain, agree, v.value & agree)


def _extended_domain(v: Interpretation, z: Iterable[str]) -> tuple[str, ...]:
    z = list(z)
    zs = set(z)
    missing = [s for s in v.domain if s not in zs]
    if missing:
        raise DomainMismatchError(f"completion target misses {sorted(missing)}")
    known = set(v.domain)
    return v.domain + tuple(s for s in z if s not in known)


def completions(v: Interpretation, z: Iterable[str] | None = None) -> list[Interpretation]:
    """All two-valued interpretations over ``z`` agreeing with the assigned part of ``v``."""
    domain = v.domain if z is None else _extended_domain(v, z)
    base = v.realign(domain)
    free = ((1 << len(domain)) - 1) & ~base.assigned
    full = (1 << len(domain)) - 1
    return [Interpretation(domain, full, base.value | sub) for sub in sorted(iter_submasks(free))]


def t_completion(v: Interpretation, z: Iterable[str] | None = None) -> Interpretation:
    domain = v.domain if z is None else _extended_domain(v, z)
    base = v.realign(domain)
    full = (1 << len(domain)) - 1
    return Interpretation(domain, full, base.value | (full & ~base.assigned))


def f_completion(v: Interpretation, z: Iterable[str] | None = None) -> Interpretation:
    domain = v.domain if z is None else _extended_domain(v, z)
    base = v.realign(domain)
    full = (1 << len(domain)) - 1
    return Interpretation(domain, full, base.value)


def two_valued_extensions(v: Interpretation) -> list[Interpretation]:
    """The set written [v]_2: every two-valued interpretation extending ``v``."""
    return completions(v)


def eval_formula(f: Formula, v: Interpretation) -> bool:
    """Classical value of ``f``; ``True`` is *in*, ``False`` is *out*."""
    atoms = f.atoms()
    missing = [s for s in atoms if s not in v.domain or v[s] is Value.U]
    if missing:
        raise PartialInterpretationError(
            f"partial interpretation where total required (unassigned: {sorted(missing)})")
    return f.evaluate(v.true & atoms)


def all_three_valued(domain: Sequence[str]) -> Iterator[Interpretation]:
    """Every interpretation over ``domain``, 3**n of them."""
    domain = tuple(domain)
    n = len(domain)
    for values in itertools.product((Value.T, Value.F, Value.U), repeat=n):
        assigned = value = 0
        for i, x in enumerate(values):
            if x is not Value.U:
                assigned |= 1 << i
                if x is Value.T:
                    value |= 1 << i
        yield Interpretation(domain, assigned, value)
