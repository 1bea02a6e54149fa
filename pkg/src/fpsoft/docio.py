"""Line-oriented text format for contexts, sets, topologies, mappings, covers.

Grammar ('#' starts a comment, entries inside a block separated by ';'):

    context { universe: x1 x2 ; parameters: e1 e2 }
    set NAME { e1: P/Q { x1 x3 } ; e2: P/Q { } }
    topology NAME { SETNAME SETNAME ... }
    mapping NAME { target_universe: y1 ... ; target_parameters: k1 ... ;
                   u: x1->y2 x2->y1 ... ; p: e1->k2 ... }
    cover NAME { of: SETNAME ; members: SETNAME ... }

A set block whose parameters are not the document context's is resolved
against the target context of a declared mapping (it must match exactly
one); this lets a single document carry both sides of a continuity check.
Printed fractions are always reduced; parsing accepts unreduced input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .compactness import CoverFamily
from .mapping import FPSoftMapping
from .model import Context
from .sets import FPSoftSet

_TOKEN = re.compile(r"[{};:]|[^\s{};:#]+")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class Document:
    context: Context
    sets: dict[str, FPSoftSet] = field(default_factory=dict)
    topologies: dict[str, tuple[str, ...]] = field(default_factory=dict)
    mappings: dict[str, FPSoftMapping] = field(default_factory=dict)
    covers: dict[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)

    def set_names(self) -> dict[FPSoftSet, str]:
        out: dict[FPSoftSet, str] = {}
        for name, f in self.sets.items():
            out.setdefault(f, name)
        return out

    def topology_sets(self, name: str) -> list[FPSoftSet]:
        if name not in self.topologies:
            raise KeyError(f"unknown topology {name!r}")
        return [self.sets[n] for n in self.topologies[name]]

    def cover_of(self, name: str) -> CoverFamily:
        if name not in self.covers:
            raise KeyError(f"unknown cover {name!r}")
        target_name, member_names = self.covers[name]
        return CoverFamily.of([self.sets[n] for n in member_names],
                              self.sets[target_name])


class _Tokens:
    def __init__(self, text: str):
        self.items: list[tuple[str, int]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0]
            for tok in _TOKEN.findall(line):
                self.items.append((tok, lineno))
        self.pos = 0

    @property
    def line(self) -> int:
        if self.pos < len(self.items):
            return self.items[self.pos][1]
        return self.items[-1][1] if self.items else 1

    def peek(self) -> str | None:
        return self.items[self.pos][0] if self.pos < len(self.items) else None

    def next(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(self.line, f"unexpected end of input"
                             + (f", expected {expected!r}" if expected else ""))
        self.pos += 1
        if expected is not None and tok != expected:
            raise ParseError(self.line, f"expected {expected!r}, found {tok!r}")
        return tok

    def word(self, what: str) -> str:
        tok = self.next(None)
        if tok in "{};:":
            raise ParseError(self.line, f"expected {what}, found {tok!r}")
        return tok


def _parse_keyed_words(toks: _Tokens, key: str) -> list[str]:
    toks.next(key)
    toks.next(":")
    out = []
    while toks.peek() not in (";", "}", None):
        out.append(toks.word("a symbol"))
    if toks.peek() == ";":
        toks.next()
    return out


def _parse_fraction(toks: _Tokens) -> Fraction:
    tok = toks.word("a fraction P/Q")
    m = re.fullmatch(r"(\d+)/(\d+)", tok)
    if not m:
        raise ParseError(toks.line, f"expected a fraction P/Q, found {tok!r}")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise ParseError(toks.line, "fraction denominator must be nonzero")
    if num > den:
        raise ParseError(toks.line, f"grade {tok} out of range [0, 1]")
    return Fraction(num, den)


def _parse_set_block(toks: _Tokens):
    """Returns a list of (param, grade, symbols, line)."""
    entries = []
    toks.next("{")
    while toks.peek() != "}":
        line = toks.line
        param = toks.word("a parameter name")
        toks.next(":")
        g = _parse_fraction(toks)
        toks.next("{")
        symbols = []
        while toks.peek() != "}":
            symbols.append(toks.word("a universe symbol"))
        toks.next("}")
        if toks.peek() == ";":
            toks.next()
        entries.append((param, g, symbols, line))
    toks.next("}")
    return entries


def _parse_arrow_pairs(toks: _Tokens, key: str) -> dict[str, str]:
    out = {}
    for tok in _parse_keyed_words(toks, key):
        if "->" not in tok:
            raise ParseError(toks.line, f"expected SYMBOL->SYMBOL, found {tok!r}")
        src, dst = tok.split("->", 1)
        if not src or not dst:
            raise ParseError(toks.line, f"expected SYMBOL->SYMBOL, found {tok!r}")
        if src in out:
            raise ParseError(toks.line, f"duplicate source symbol {src!r} in {key}")
        out[src] = dst
    return out


def _resolve_set(name: str, entries, context: Context,
                 mappings: dict[str, FPSoftMapping]) -> FPSoftSet:
    params = [e for e, _, _, _ in entries]
    first_line = entries[0][3] if entries else 0
    if set(params) == set(context.parameters):
        ctx = context
    else:
        candidates = {m.target for m in mappings.values()
                      if set(m.target.parameters) == set(params)}
        if len(candidates) != 1:
            raise ParseError(
                first_line,
                f"set {name!r}: parameters do not match the context or exactly "
                f"one mapping target")
        ctx = next(iter(candidates))
    seen = set()
    pairs = {}
    for param, g, symbols, line in entries:
        if param in seen:
            raise ParseError(line, f"duplicate parameter {param!r} in set {name!r}")
        seen.add(param)
        for s in symbols:
            if s not in ctx.universe:
                raise ParseError(line, f"{s} not in universe")
        pairs[param] = (g, symbols)
    if seen != set(ctx.parameters):
        missing = sorted(set(ctx.parameters) - seen)
        raise ParseError(first_line,
                         f"set {name!r}: missing parameters {missing}")
    return FPSoftSet.of(ctx, pairs)


def parse_document(text: str) -> Document:
    toks = _Tokens(text)
    context: Context | None = None
    context_line = 0
    raw_sets: list[tuple[str, list, int]] = []
    raw_mappings: list[tuple[str, dict, int]] = []
    topologies: dict[str, tuple[str, ...]] = {}
    covers: dict[str, tuple[str, tuple[str, ...]]] = {}
    set_names: list[str] = []

    while toks.peek() is not None:
        line = toks.line
        kw = toks.word("a block keyword")
        if kw == "context":
            if context is not None:
                raise ParseError(line, "duplicate context block")
            toks.next("{")
            universe = _parse_keyed_words(toks, "universe")
            parameters = _parse_keyed_words(toks, "parameters")
            toks.next("}")
            if not universe:
                raise ParseError(line, "universe must be nonempty")
            if not parameters:
                raise ParseError(line, "parameters must be nonempty")
            try:
                context = Context(tuple(universe), tuple(parameters))
            except ValueError as exc:
                raise ParseError(line, str(exc)) from None
            context_line = line
        elif kw == "set":
            name = toks.word("a set name")
            if name in set_names:
                raise ParseError(line, f"duplicate set name {name!r}")
            set_names.append(name)
            raw_sets.append((name, _parse_set_block(toks), line))
        elif kw == "topology":
            name = toks.word("a topology name")
            if name in topologies:
                raise ParseError(line, f"duplicate topology name {name!r}")
            toks.next("{")
            members = []
            while toks.peek() != "}":
                members.append(toks.word("a set name"))
            toks.next("}")
            topologies[name] = tuple(members)
        elif kw == "mapping":
            name = toks.word("a mapping name")
            if any(n == name for n, _, _ in raw_mappings):
                raise ParseError(line, f"duplicate mapping name {name!r}")
            toks.next("{")
            tu = _parse_keyed_words(toks, "target_universe")
            tp = _parse_keyed_words(toks, "target_parameters")
            u = _parse_arrow_pairs(toks, "u")
            p = _parse_arrow_pairs(toks, "p")
            toks.next("}")
            raw_mappings.append((name, {"tu": tu, "tp": tp, "u": u, "p": p}, line))
        elif kw == "cover":
            name = toks.word("a cover name")
            if name in covers:
                raise ParseError(line, f"duplicate cover name {name!r}")
            toks.next("{")
            of = _parse_keyed_words(toks, "of")
            if len(of) != 1:
                raise ParseError(line, "cover 'of' takes exactly one set name")
            members = _parse_keyed_words(toks, "members")
            if not members:
                raise ParseError(line, "cover members must be nonempty")
            toks.next("}")
            covers[name] = (of[0], tuple(members))
        else:
            raise ParseError(
                line, f"expected one of context/set/topology/mapping/cover, "
                      f"found {kw!r}")

    if context is None:
        raise ParseError(1, "context required")

    mappings: dict[str, FPSoftMapping] = {}
    for name, parts, line in raw_mappings:
        try:
            target = Context(tuple(parts["tu"]), tuple(parts["tp"]))
            mappings[name] = FPSoftMapping.of(context, target, parts["u"], parts["p"])
        except ValueError as exc:
            raise ParseError(line, f"mapping {name!r}: {exc}") from None

    doc = Document(context, mappings=mappings, topologies=topologies, covers=covers)
    for name, entries, line in raw_sets:
        doc.sets[name] = _resolve_set(name, entries, context, mappings)

    for name, member_names in topologies.items():
        contexts = set()
        for n in member_names:
            if n not in doc.sets:
                raise ParseError(context_line, f"topology {name!r}: unknown set {n!r}")
            contexts.add(doc.sets[n].context)
        if len(contexts) != 1:
            raise ParseError(context_line,
                             f"topology {name!r}: members over different contexts")
    for name, (target, member_names) in covers.items():
        for n in (target, *member_names):
            if n not in doc.sets:
                raise ParseError(context_line, f"cover {name!r}: unknown set {n!r}")
    return doc


# ------------------------------------------------------------- formatting

def format_fraction(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


def format_set(name: str, f: FPSoftSet) -> str:
    parts = []
    for e, g, m in f.items():
        symbols = " ".join(f.context.symbols_of(m))
        inner = f"{{ {symbols} }}" if symbols else "{ }"
        parts.append(f"{e}: {format_fraction(g)} {inner}")
    return f"set {name} {{ " + " ; ".join(parts) + " }"


def format_mapping(name: str, m: FPSoftMapping) -> str:
    u = " ".join(f"{x}->{y}" for x, y in zip(m.source.universe, m.u_values))
    p = " ".join(f"{e}->{k}" for e, k in zip(m.source.parameters, m.p_values))
    return (f"mapping {name} {{ "
            f"target_universe: {' '.join(m.target.universe)} ; "
            f"target_parameters: {' '.join(m.target.parameters)} ; "
            f"u: {u} ; p: {p} }}")


def format_document(doc: Document) -> str:
    lines = [
        f"context {{ universe: {' '.join(doc.context.universe)} ; "
        f"parameters: {' '.join(doc.context.parameters)} }}"
    ]
    for name, f in doc.sets.items():
        lines.append(format_set(name, f))
    for name, m in doc.mappings.items():
        lines.append(format_mapping(name, m))
    for name, members in doc.topologies.items():
        lines.append(f"topology {name} {{ {' '.join(members)} }}")
    for name, (target, members) in doc.covers.items():
        lines.append(f"cover {name} {{ of: {target} ; members: {' '.join(members)} }}")
    return "\n".join(lines) + "\n"
