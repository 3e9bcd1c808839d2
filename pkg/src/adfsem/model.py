"""ADF instances, the instance file format, and Dung AF import."""
from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import InstanceError, ParseError
from .logic import (
    And, Atom, Bottom, Formula, Iff, Imp, Interpretation, Not, Or, Top,
    compile_formula, compile_kleene, iter_bits,
)


class AdfInstance:
    """Statements plus one acceptance condition per statement.

    Statements are interned to bit positions in declaration order; all
    solver internals work on masks over these positions.
    """

    def __init__(self, statements: Sequence[str], conditions: Mapping[str, Formula], name: str | None = None):
        statements = tuple(statements)
        if len(set(statements)) != len(statements):
            dup = sorted({s for s in statements if statements.count(s) > 1})
            raise InstanceError(f"duplicate statement(s): {', '.join(dup)}")
        declared = set(statements)
        extra = set(conditions) - declared
        if extra:
            raise InstanceError(f"condition for undeclared statement(s): {', '.join(sorted(extra))}")
        missing = [s for s in statements if s not in conditions]
        if missing:
            raise InstanceError(f"missing condition for statement(s): {', '.join(missing)}")
        for s in statements:
            undeclared = conditions[s].atoms() - declared
            if undeclared:
                raise InstanceError(
                    f"condition of {s} uses undeclared atom(s): {', '.join(sorted(undeclared))}")

        self.name = name
        self.statements = statements
        self.conditions = MappingProxyType({s: conditions[s] for s in statements})
        self.index = {s: i for i, s in enumerate(statements)}
        self.n = len(statements)
        self.full = (1 << self.n) - 1
        self.par_mask = tuple(self.mask(conditions[s].atoms()) for s in statements)
        self.cond = tuple(compile_formula(conditions[s], self.index) for s in statements)
        self.kleene = tuple(compile_kleene(conditions[s], self.index) for s in statements)
        # (x, statement index) -> tuple of (tmask, fmask); filled by decisive.min_dec
        self._min_dec: dict[tuple[bool, int], tuple[tuple[int, int], ...]] = {}

    def __reduce__(self):
        return (AdfInstance, (self.statements, dict(self.conditions), self.name))

    def __eq__(self, other):
        if not isinstance(other, AdfInstance):
            return NotImplemented
        return self.statements == other.statements and dict(self.conditions) == dict(other.conditions)

    def __hash__(self):
        return hash((self.statements, tuple(self.conditions.items())))

    def __repr__(self):
        conds = ", ".join(f"{s}: {format_formula(f)}" for s, f in self.conditions.items())
        return f"AdfInstance({conds})"

    # name <-> mask helpers -------------------------------------------------

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for s in names:
            try:
                m |= 1 << self.index[s]
            except KeyError:
                raise InstanceError(f"unknown statement {s!r}") from None
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.statements[i] for i in iter_bits(mask))

    def parents(self, s: str) -> frozenset[str]:
        if s not in self.index:
            raise InstanceError(f"unknown statement {s!r}")
        return self.conditions[s].atoms()

    def interpretation(self, mapping: Mapping[str, object] | None = None, *,
                       true: Iterable[str] = (), false: Iterable[str] = ()) -> Interpretation:
        if mapping is not None:
            return Interpretation.from_mapping(self.statements, mapping)
        return Interpretation.from_sets(self.statements, true, false)

    def align(self, v: Interpretation) -> Interpretation:
        """``v`` re-expressed over the statement order of this instance."""
        return v.realign(self.statements)


def parents(D: AdfInstance, s: str) -> frozenset[str]:
    return D.parents(s)


# ---------------------------------------------------------------------------
# Text format

_TOKEN = re.compile(r"\s*(?:(%[^\n]*)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Tokens:
    def __init__(self, text: str):
        self.items: list[tuple[str, str, int, int]] = []
        line_starts = [0] + [m.end() for m in re.finditer("\n", text)]
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            pos = m.end()
            if m.group(1) is not None:
                continue
            if m.group(2) is not None:
                kind, val, start = "id", m.group(2), m.start(2)
            elif m.group(3) is not None:
                kind, val, start = "sym", m.group(3), m.start(3)
            else:
                continue
            line = _bisect(line_starts, start)
            self.items.append((kind, val, line + 1, start - line_starts[line] + 1))
        self.pos = 0
        self.eof_line = len(line_starts)

    def peek(self, offset: int = 0):
        i = self.pos + offset
        return self.items[i] if i < len(self.items) else ("eof", "", self.eof_line, 1)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, line, col = self.next()
        if val != value or kind == "eof":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", line, col)

    def ident(self) -> tuple[str, int, int]:
        kind, val, line, col = self.next()
        if kind != "id":
            raise ParseError(f"expected identifier, found {val or 'end of input'!r}", line, col)
        return val, line, col

    def at_end(self) -> bool:
        return self.pos >= len(self.items)


def _bisect(starts: list[int], pos: int) -> int:
    lo, hi = 0, len(starts) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if starts[mid] <= pos:
            lo = mid
        else:
            hi = mid - 1
    return lo


_NARY = {"and": And, "or": Or}
_BINARY = {"imp": Imp, "iff": Iff}


def _formula(tokens: _Tokens) -> Formula:
    name, line, col = tokens.ident()
    if tokens.peek()[1] != "(":
        return Atom(name)
    tokens.next()
    if name == "c":
        const, cl, cc = tokens.ident()
        tokens.expect(")")
        if const == "v":
            return Top()
        if const == "f":
            return Bottom()
        raise ParseError(f"unknown constant c({const})", cl, cc)
    if name == "neg":
        arg = _formula(tokens)
        tokens.expect(")")
        return Not(arg)
    if name in _NARY or name in _BINARY:
        args = [_formula(tokens)]
        while tokens.peek()[1] == ",":
            tokens.next()
            args.append(_formula(tokens))
        tokens.expect(")")
        if name in _BINARY:
            if len(args) != 2:
                raise ParseError(f"{name} takes exactly two operands", line, col)
            return _BINARY[name](args[0], args[1])
        if len(args) < 2:
            raise ParseError(f"{name} needs at least two operands", line, col)
        cls = _NARY[name]
        flat: list[Formula] = []
        for a in args:
            flat.extend(a.args if isinstance(a, cls) else (a,))
        return cls(tuple(flat))
    raise ParseError(f"unknown connective {name!r}", line, col)


def parse_adf(text: str, name: str | None = None) -> AdfInstance:
    """Parse the ``s(..). ac(.., formula).`` instance format."""
    tokens = _Tokens(text)
    statements: list[str] = []
    conditions: dict[str, Formula] = {}
    where: dict[str, tuple[int, int]] = {}
    if tokens.at_end():
        raise ParseError("empty instance", 1, 1)
    while not tokens.at_end():
        kw, line, col = tokens.ident()
        tokens.expect("(")
        if kw == "s":
            s, sl, sc = tokens.ident()
            tokens.expect(")")
            if s in where:
                raise ParseError(f"statement {s!r} declared twice", sl, sc)
            where[s] = (sl, sc)
            statements.append(s)
        elif kw == "ac":
            s, sl, sc = tokens.ident()
            tokens.expect(",")
            f = _formula(tokens)
            tokens.expect(")")
            if s in conditions:
                raise ParseError(f"duplicate acceptance condition for {s!r}", sl, sc)
            conditions[s] = f
        else:
            raise ParseError(f"unknown declaration {kw!r}", line, col)
        tokens.expect(".")
    try:
        return AdfInstance(statements, conditions, name=name)
    except InstanceError as exc:
        raise ParseError(str(exc)) from None


def format_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "c(v)"
    if isinstance(f, Bottom):
        return "c(f)"
    if isinstance(f, Not):
        return f"neg({format_formula(f.arg)})"
    if isinstance(f, (And, Or)):
        op = "and" if isinstance(f, And) else "or"
        return f"{op}({','.join(format_formula(a) for a in f.args)})"
    if isinstance(f, (Imp, Iff)):
        op = "imp" if isinstance(f, Imp) else "iff"
        return f"{op}({format_formula(f.left)},{format_formula(f.right)})"
    raise TypeError(f"not a formula: {f!r}")


def format_adf(D: AdfInstance) -> str:
    lines = [f"s({s})." for s in D.statements]
    lines += [f"ac({s},{format_formula(D.conditions[s])})." for s in D.statements]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Dung argumentation frameworks


@dataclass(frozen=True)
class DungAf:
    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]

    def __post_init__(self):
        args = set(self.arguments)
        if len(args) != len(self.arguments):
            raise InstanceError("duplicate argument")
        for a, b in self.attacks:
            if a not in args or b not in args:
                raise InstanceError(f"attack ({a},{b}) mentions an undeclared argument")

    def attackers(self, a: str) -> tuple[str, ...]:
        return tuple(b for b in self.arguments if (b, a) in self.attacks)


def parse_af(text: str) -> DungAf:
    """Parse ``arg(a).`` / ``att(a,b).`` lines."""
    tokens = _Tokens(text)
    arguments: list[str] = []
    attacks: set[tuple[str, str]] = set()
    while not tokens.at_end():
        kw, line, col = tokens.ident()
        tokens.expect("(")
        if kw == "arg":
            a, _, _ = tokens.ident()
            if a not in arguments:
                arguments.append(a)
        elif kw == "att":
            a, _, _ = tokens.ident()
            tokens.expect(",")
            b, _, _ = tokens.ident()
            attacks.add((a, b))
        else:
            raise ParseError(f"unknown declaration {kw!r}", line, col)
        tokens.expect(")")
        tokens.expect(".")
    try:
        return DungAf(tuple(arguments), frozenset(attacks))
    except InstanceError as exc:
        raise ParseError(str(exc)) from None


def from_dung_af(af: DungAf, name: str | None = None) -> AdfInstance:
    """Each argument is accepted iff none of its attackers is."""
    conditions: dict[str, Formula] = {}
    for a in af.arguments:
        negs = tuple(Not(Atom(b)) for b in af.attackers(a))
        if not negs:
            conditions[a] = Top()
        elif len(negs) == 1:
            conditions[a] = negs[0]
        else:
            conditions[a] = And(negs)
    return AdfInstance(af.arguments, conditions, name=name)
