"""Command line front end: context files, word arguments, subcommands.

A context file declares the vertex monoids, the graph and optional
named words:

    monoid U { elements: 1 a ; identity: 1 ; table:
      1 a
      a a
    }
    monoid F free { alphabet: x y }
    graph { vertices: A:U B:F ; edges: A-B }
    word u = A.a B.xy

Sections inside braces are separated by ";".  A multiplication table is
written one row per line, or flat row-major on a single line.  "#"
starts a comment.  Word arguments on the command line use the same
VERTEX.element letter syntax; the empty word is the single token "e"
and a named word from the file may stand in for its letters.

Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .core import (
    FiniteMonoid,
    FreeMonoid,
    GPContext,
    GPInternalError,
    GPPreconditionError,
    GPValidationError,
    Letter,
    Word,
    make_graph,
)
from .normalform import (
    CanonicalForm,
    canonical,
    canonical_word,
    equal,
    multiply,
    reduce_word,
)
from .ideals import accpl_report, leq_principal
from .howson import intersect_principal
from .annihilator import annihilator_generators, fle_report
from .structure import (
    coherency_report,
    decide_wln,
    direct4_partition,
    is_relatively_complete,
)
from .oracle import (
    oracle_annihilator_pairs,
    oracle_equal,
    oracle_intersection_elements,
    oracle_leq_principal,
)


class ParseError(GPValidationError):
    """Context-file or word syntax error with a source position."""

    def __init__(self, message: str, line: Optional[int] = None,
                 col: Optional[int] = None):
        self.line = line
        self.col = col
        if line is not None:
            message = "line %d, col %d: %s" % (line, col, message)
        super().__init__(message)


# ---------------------------------------------------------------------------
# context files


class Token(NamedTuple):
    text: str
    line: int
    col: int


_PUNCT = "{}:;=-"


def _tokenize(text: str):
    toks = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            if ch in _PUNCT:
                toks.append(Token(ch, ln, i + 1))
                i += 1
                continue
            j = i
            while (j < len(line) and not line[j].isspace()
                   and line[j] not in _PUNCT):
                j += 1
            toks.append(Token(line[i:j], ln, i + 1))
            i = j
    return toks


class _TokenStream:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self, expect: Optional[str] = None) -> Token:
        t = self.peek()
        if t is None:
            what = " (expected %r)" % expect if expect else ""
            raise ParseError("unexpected end of input%s" % what)
        self.i += 1
        if expect is not None and t.text != expect:
            raise ParseError("expected %r, got %r" % (expect, t.text),
                             t.line, t.col)
        return t


@dataclass
class ContextFile:
    """Parsed context: the product itself plus named monoids and words."""

    context: GPContext
    monoids: dict = field(default_factory=dict)
    words: dict = field(default_factory=dict)


def _read_sections(ts: _TokenStream):
    """Body of a brace block as an ordered dict key -> value tokens."""
    ts.next(expect="{")
    sections = {}
    while True:
        t = ts.next()
        if t.text == "}":
            return sections
        if t.text in _PUNCT:
            raise ParseError("expected a section name, got %r" % t.text,
                             t.line, t.col)
        if t.text in sections:
            raise ParseError("duplicate section %r" % t.text, t.line, t.col)
        ts.next(expect=":")
        vals = []
        while ts.peek() is not None and ts.peek().text not in (";", "}"):
            vals.append(ts.next())
        if ts.peek() is not None and ts.peek().text == ";":
            ts.next()
        sections[t.text] = vals
    return sections


def _only_sections(kind: str, name_tok: Token, sections, allowed):
    for key in sections:
        if key not in allowed:
            raise ParseError("%s %r has no %r section"
                             % (kind, name_tok.text, key))
    for key in allowed:
        if key not in sections:
            raise ParseError("%s %r is missing the %r section"
                             % (kind, name_tok.text, key),
                             name_tok.line, name_tok.col)


def _parse_monoid(ts: _TokenStream, monoids: dict) -> None:
    name_tok = ts.next()
    name = name_tok.text
    if name in monoids:
        raise ParseError("duplicate monoid %r" % name,
                         name_tok.line, name_tok.col)
    free = ts.peek() is not None and ts.peek().text == "free"
    if free:
        ts.next()
    sections = _read_sections(ts)
    if free:
        _only_sections("monoid", name_tok, sections, ("alphabet",))
        for t in sections["alphabet"]:
            if len(t.text) != 1:
                raise ParseError(
                    "alphabet symbols are single characters, got %r"
                    % t.text, t.line, t.col)
        try:
            monoids[name] = FreeMonoid(
                tuple(t.text for t in sections["alphabet"]))
        except GPValidationError as exc:
            raise ParseError(str(exc), name_tok.line, name_tok.col) from None
        return
    _only_sections("monoid", name_tok, sections, ("elements", "identity",
                                                  "table"))
    names = []
    for t in sections["elements"]:
        if t.text in names:
            raise ParseError("duplicate element %r" % t.text, t.line, t.col)
        names.append(t.text)
    if len(sections["identity"]) != 1:
        raise ParseError("identity takes exactly one element",
                         name_tok.line, name_tok.col)
    ident_tok = sections["identity"][0]
    if ident_tok.text not in names:
        raise ParseError("unknown element %r" % ident_tok.text,
                         ident_tok.line, ident_tok.col)
    n = len(names)
    rows: list = []
    for t in sections["table"]:
        if rows and rows[-1][0].line == t.line:
            rows[-1].append(t)
        else:
            rows.append([t])
    if len(rows) == 1 and len(rows[0]) == n * n:
        flat = rows[0]
        rows = [flat[k * n:(k + 1) * n] for k in range(n)]
    if len(rows) != n:
        raise ParseError("table needs %d rows, got %d" % (n, len(rows)),
                         name_tok.line, name_tok.col)
    table = []
    for row in rows:
        if len(row) != n:
            raise ParseError(
                "table row has %d entries, expected %d" % (len(row), n),
                row[0].line, row[0].col)
        idx_row = []
        for t in row:
            if t.text not in names:
                raise ParseError("unknown element %r" % t.text,
                                 t.line, t.col)
            idx_row.append(names.index(t.text))
        table.append(tuple(idx_row))
    try:
        monoids[name] = FiniteMonoid(tuple(names), names.index(ident_tok.text),
                                     tuple(table))
    except GPValidationError as exc:
        raise ParseError(str(exc), name_tok.line, name_tok.col) from None


def _parse_graph(ts: _TokenStream, monoids: dict, graph_tok: Token):
    sections = _read_sections(ts)
    for key in sections:
        if key not in ("vertices", "edges"):
            raise ParseError("graph has no %r section" % key)
    if "vertices" not in sections:
        raise ParseError("graph is missing the 'vertices' section",
                         graph_tok.line, graph_tok.col)
    vals = sections["vertices"]
    vertex_names: list = []
    vertex_monoids = []
    i = 0
    while i < len(vals):
        if i + 2 >= len(vals) or vals[i + 1].text != ":":
            raise ParseError("vertices are written NAME:MONOID",
                             vals[i].line, vals[i].col)
        vtok, mtok = vals[i], vals[i + 2]
        if vtok.text in vertex_names:
            raise ParseError("duplicate vertex %r" % vtok.text,
                             vtok.line, vtok.col)
        if mtok.text not in monoids:
            raise ParseError("unknown monoid %r" % mtok.text,
                             mtok.line, mtok.col)
        vertex_names.append(vtok.text)
        vertex_monoids.append(monoids[mtok.text])
        i += 3
    edges = []
    vals = sections.get("edges", [])
    i = 0
    while i < len(vals):
        if i + 2 >= len(vals) or vals[i + 1].text != "-":
            raise ParseError("edges are written NAME-NAME",
                             vals[i].line, vals[i].col)
        utok, wtok = vals[i], vals[i + 2]
        for t in (utok, wtok):
            if t.text not in vertex_names:
                raise ParseError("unknown vertex %r" % t.text, t.line, t.col)
        if utok.text == wtok.text:
            raise ParseError("loop edge %s-%s" % (utok.text, wtok.text),
                             utok.line, utok.col)
        edges.append((vertex_names.index(utok.text),
                      vertex_names.index(wtok.text)))
        i += 3
    try:
        return GPContext(graph=make_graph(len(vertex_names), edges),
                         monoids=tuple(vertex_monoids),
                         vertex_names=tuple(vertex_names))
    except GPValidationError as exc:
        raise ParseError(str(exc), graph_tok.line, graph_tok.col) from None


def _parse_letter_token(ctx: GPContext, text: str, line=None, col=None):
    if "." not in text:
        raise ParseError("letter %r needs the form VERTEX.element" % text,
                         line, col)
    vname, _, etext = text.partition(".")
    try:
        v = ctx.vertex_index(vname)
    except GPValidationError:
        raise ParseError("unknown vertex %r" % vname, line, col) from None
    try:
        el = ctx.monoids[v].parse_element(etext)
    except GPValidationError as exc:
        raise ParseError(str(exc), line, col) from None
    return Letter(v, el)


def _parse_word_def(ts: _TokenStream, ctx: Optional[GPContext], words: dict):
    name_tok = ts.next()
    if ctx is None:
        raise ParseError("word %r defined before the graph" % name_tok.text,
                         name_tok.line, name_tok.col)
    if name_tok.text in words:
        raise ParseError("duplicate word %r" % name_tok.text,
                         name_tok.line, name_tok.col)
    eq_tok = ts.next(expect="=")
    toks = []
    while ts.peek() is not None and (ts.peek().text == "e"
                                     or "." in ts.peek().text):
        toks.append(ts.next())
    if not toks:
        raise ParseError("empty word definition; write 'e' for the identity",
                         eq_tok.line, eq_tok.col)
    if len(toks) == 1 and toks[0].text == "e":
        words[name_tok.text] = ()
        return
    letters = []
    for t in toks:
        if t.text == "e":
            raise ParseError("'e' must stand alone", t.line, t.col)
        letters.append(_parse_letter_token(ctx, t.text, t.line, t.col))
    words[name_tok.text] = tuple(letters)


def parse_context_file(text: str) -> ContextFile:
    """Parse monoid, graph and word declarations into a ContextFile."""
    ts = _TokenStream(_tokenize(text))
    monoids: dict = {}
    words: dict = {}
    ctx: Optional[GPContext] = None
    while ts.peek() is not None:
        t = ts.next()
        if t.text == "monoid":
            _parse_monoid(ts, monoids)
        elif t.text == "graph":
            if ctx is not None:
                raise ParseError("duplicate graph block", t.line, t.col)
            ctx = _parse_graph(ts, monoids, t)
        elif t.text == "word":
            _parse_word_def(ts, ctx, words)
        else:
            raise ParseError("expected 'monoid', 'graph' or 'word', got %r"
                             % t.text, t.line, t.col)
    if ctx is None:
        raise ParseError("no graph block")
    return ContextFile(context=ctx, monoids=monoids, words=words)


def parse_context(text: str) -> GPContext:
    return parse_context_file(text).context


def parse_word(cf: ContextFile, text: str) -> Word:
    """A command line word: 'e', a named word, or VERTEX.element letters."""
    toks = text.split()
    if not toks:
        raise ParseError("empty word argument; write 'e' for the identity")
    if len(toks) == 1 and toks[0] == "e":
        return ()
    if len(toks) == 1 and toks[0] in cf.words:
        return cf.words[toks[0]]
    letters = []
    for t in toks:
        if t == "e":
            raise ParseError("'e' must stand alone")
        letters.append(_parse_letter_token(cf.context, t))
    return tuple(letters)


def format_canonical(ctx: GPContext, form: CanonicalForm) -> str:
    """Bracketed block rendering, injective on canonical forms."""
    if not form.blocks:
        return "e"
    return "".join("[%s]" % " ".join(ctx.format_letter(l) for l in b)
                   for b in form.blocks)


def print_context(cf: ContextFile) -> str:
    """Render a ContextFile back to the file grammar (round trips)."""
    out = []
    ctx = cf.context
    for name, m in cf.monoids.items():
        if isinstance(m, FreeMonoid):
            out.append("monoid %s free { alphabet: %s }"
                       % (name, " ".join(m.alphabet)))
            continue
        out.append("monoid %s {" % name)
        out.append("  elements: %s ;" % " ".join(m.element_names))
        out.append("  identity: %s ;" % m.element_names[m.identity])
        out.append("  table:")
        for row in m.table:
            out.append("    " + " ".join(m.element_names[x] for x in row))
        out.append("}")
    by_monoid = {id(m): name for name, m in cf.monoids.items()}
    verts = " ".join("%s:%s" % (ctx.vertex_names[v], by_monoid[id(ctx.monoids[v])])
                     for v in range(ctx.graph.n))
    edges = " ".join("%s-%s" % (ctx.vertex_names[u], ctx.vertex_names[v])
                     for u, v in sorted(ctx.graph.edges))
    out.append("graph { vertices: %s ; edges: %s }" % (verts, edges))
    for name, wrd in cf.words.items():
        out.append("word %s = %s" % (name, ctx.format_word(wrd)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# commands


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _ArgumentParser:
    ap = _ArgumentParser(
        prog="gpmonoid",
        description="Compute in a graph product of monoids.")
    ap.add_argument("-c", "--context", metavar="FILE",
                    help="context file declaring monoids, graph and words")
    ap.add_argument("--json", action="store_true",
                    help="emit one JSON object instead of text lines")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("normalize", help="reduced canonical word")
    p.add_argument("word")
    for name, help_ in (("eq", "are the two words the same element"),
                        ("mul", "canonical form of the product"),
                        ("divides", "is WORD1 in the principal left ideal of WORD2"),
                        ("witness", "left factor taking WORD2 to WORD1"),
                        ("intersect", "generators of the ideal intersection")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("left", metavar="WORD1")
        p.add_argument("right", metavar="WORD2")
    p = sub.add_parser("foata", help="canonical form, bracketed blocks")
    p.add_argument("word")
    p = sub.add_parser("annihilator",
                       help="generating pairs of the left annihilator")
    p.add_argument("word")
    p.add_argument("--verify-bound", metavar="L,S",
                   help="also verify against the brute-force annihilator "
                        "(congruence search length L, at most S states)")
    p = sub.add_parser("check", help="decision procedures")
    p.add_argument("what", choices=("accpl", "wln", "relcomplete", "coherent"))
    sub.add_parser("decompose", help="three-way direct product partition")
    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("which", choices=("eq", "leq", "intersect", "ann"))
    p.add_argument("words", nargs="+", metavar="WORD")
    p.add_argument("--bound", type=int, default=None)
    p = sub.add_parser("report", help="write csv tables and figures")
    p.add_argument("outdir")
    return ap


def _b(flag: bool) -> str:
    return "true" if flag else "false"


def _cmd_normalize(cf, args):
    out = cf.context.format_word(canonical_word(cf.context,
                                                parse_word(cf, args.word)))
    return 0, [out], {"command": "normalize", "result": out}


def _cmd_eq(cf, args):
    res = equal(cf.context, parse_word(cf, args.left),
                parse_word(cf, args.right))
    return (0 if res else 1), [_b(res)], {"command": "eq", "equal": res}


def _cmd_mul(cf, args):
    form = multiply(cf.context, parse_word(cf, args.left),
                    parse_word(cf, args.right))
    s = format_canonical(cf.context, form)
    return 0, [s], {"command": "mul", "product": s}


def _cmd_foata(cf, args):
    s = format_canonical(cf.context,
                         canonical(cf.context, parse_word(cf, args.word)))
    return 0, [s], {"command": "foata", "form": s}


def _cmd_divides(cf, args):
    wit = leq_principal(cf.context, parse_word(cf, args.left),
                        parse_word(cf, args.right))
    res = wit is not None
    return (0 if res else 1), [_b(res)], {"command": "divides",
                                          "divides": res}


def _cmd_witness(cf, args):
    wit = leq_principal(cf.context, parse_word(cf, args.left),
                        parse_word(cf, args.right))
    if wit is None:
        return 0, ["none"], {"command": "witness", "witness": None}
    s = cf.context.format_word(wit)
    return 0, [s], {"command": "witness", "witness": s}


def _cmd_intersect(cf, args):
    ctx = cf.context
    a = reduce_word(ctx, parse_word(cf, args.left))
    b = reduce_word(ctx, parse_word(cf, args.right))
    gens = intersect_principal(ctx, a, b)
    lines = [format_canonical(ctx, g) for g in gens.generators]
    return 0, lines, {"command": "intersect", "generators": lines}


def _parse_verify_bound(text: str):
    parts = text.split(",")
    try:
        length, states = (int(p) for p in parts)
    except ValueError:
        raise _UsageError("--verify-bound takes L,S (two integers), got %r"
                          % text) from None
    return length, states


def _cmd_annihilator(cf, args):
    ctx = cf.context
    a = reduce_word(ctx, parse_word(cf, args.word))
    pairs = annihilator_generators(ctx, a)
    rendered = [[format_canonical(ctx, s), format_canonical(ctx, t)]
                for s, t in pairs.pairs]
    lines = ["%s ~ %s" % (s, t) for s, t in rendered]
    payload = {"command": "annihilator", "pairs": rendered}
    if args.verify_bound is not None:
        length, states = _parse_verify_bound(args.verify_bound)
        rep = fle_report(ctx, sample_targets=(a,), max_len=length,
                         max_states=states)
        tr = rep.targets[0]
        lines += ["verified: %s" % _b(tr.verified),
                  "oracle_pairs: %d" % tr.oracle_pairs,
                  "connected: %d" % tr.connected,
                  "completeness: %.3f" % tr.completeness]
        payload.update(verified=tr.verified, oracle_pairs=tr.oracle_pairs,
                       connected=tr.connected, completeness=tr.completeness)
    return 0, lines, payload


def _cmd_check(cf, args):
    ctx = cf.context
    names = ctx.vertex_names
    if args.what == "accpl":
        r = accpl_report(ctx)
        lines = ["accpl: %s" % _b(r.overall)]
        per = []
        for v, (flag, cnt) in enumerate(zip(r.per_vertex, r.ideal_counts)):
            if cnt is None:
                lines.append("vertex %s: %s" % (names[v], _b(flag)))
            else:
                lines.append("vertex %s: %s (principal left ideals: %d)"
                             % (names[v], _b(flag), cnt))
            per.append({"vertex": names[v], "ok": flag,
                        "principal_left_ideals": cnt})
        payload = {"command": "check", "what": "accpl",
                   "overall": r.overall, "per_vertex": per}
        return (0 if r.overall else 1), lines, payload
    if args.what in ("wln", "relcomplete"):
        r = decide_wln(ctx)
        pair = (None if r.special_pair is None else
                [names[r.special_pair[0]], names[r.special_pair[1]]])
        viols = [{"pair": [names[a], names[b]], "reason": why}
                 for (a, b), why in r.violations]
        if args.what == "relcomplete":
            lines = ["relatively_complete: %s" % _b(r.relatively_complete)]
            ok = r.relatively_complete
        else:
            lines = ["wln: %s" % _b(r.overall),
                     "relatively_complete: %s" % _b(r.relatively_complete)]
            ok = r.overall
        lines.append("special_pair: %s"
                     % ("none" if pair is None else "%s,%s" % tuple(pair)))
        for v in viols:
            lines.append("violation (%s,%s): %s"
                         % (v["pair"][0], v["pair"][1], v["reason"]))
        lines.append("non_group_vertices: %s"
                     % (" ".join(names[v] for v in r.non_group_vertices)
                        or "-"))
        payload = {"command": "check", "what": args.what,
                   "relatively_complete": r.relatively_complete,
                   "special_pair": pair, "violations": viols,
                   "non_group_vertices":
                       [names[v] for v in r.non_group_vertices]}
        if args.what == "wln":
            for v, flag in enumerate(r.vertex_wln):
                lines.append("vertex %s: %s" % (names[v], _b(flag)))
            payload["overall"] = r.overall
            payload["vertex_wln"] = {names[v]: flag
                                     for v, flag in enumerate(r.vertex_wln)}
        return (0 if ok else 1), lines, payload
    rep = coherency_report(ctx, sample_words=list(cf.words.values()))
    lines = ["coherent: %s" % _b(rep.overall)]
    per = []
    for pc in rep.per_vertex:
        lines.append("vertex %s: howson=%s fle=%s"
                     % (names[pc.vertex], _b(pc.howson), _b(pc.fle)))
        per.append({"vertex": names[pc.vertex], "howson": pc.howson,
                    "fle": pc.fle})
    samples = []
    for ev in rep.evidence:
        lines.append("sample %s ~ %s: generators %d, annihilator pairs %d/%d"
                     % (ctx.format_word(ev.left), ctx.format_word(ev.right),
                        len(ev.intersection.generators),
                        len(ev.left_annihilator.pairs),
                        len(ev.right_annihilator.pairs)))
        samples.append({"left": ctx.format_word(ev.left),
                        "right": ctx.format_word(ev.right),
                        "generators": [format_canonical(ctx, g)
                                       for g in ev.intersection.generators],
                        "left_pairs": len(ev.left_annihilator.pairs),
                        "right_pairs": len(ev.right_annihilator.pairs)})
    payload = {"command": "check", "what": "coherent",
               "overall": rep.overall, "per_vertex": per, "samples": samples}
    return (0 if rep.overall else 1), lines, payload


def _cmd_decompose(cf, args):
    ctx = cf.context
    rep = direct4_partition(ctx)
    lines = []
    parts = []
    for part, kind in zip(rep.parts, rep.kinds):
        named = [ctx.vertex_names[v] for v in part]
        lines.append("%s: %s" % (kind, " ".join(named) or "-"))
        parts.append({"kind": kind, "vertices": named})
    return 0, lines, {"command": "decompose", "parts": parts}


def _cmd_oracle(cf, args):
    ctx = cf.context
    need = {"eq": 2, "leq": 2, "intersect": 2, "ann": 1}[args.which]
    if len(args.words) != need:
        raise _UsageError("oracle %s takes %d word argument(s), got %d"
                          % (args.which, need, len(args.words)))
    ws = [parse_word(cf, t) for t in args.words]
    if args.which == "eq":
        res = oracle_equal(ctx, ws[0], ws[1], args.bound)
        return (0 if res else 1), [_b(res)], {"command": "oracle",
                                              "which": "eq", "equal": res}
    if args.which == "leq":
        u = reduce_word(ctx, ws[0])
        bound = args.bound if args.bound is not None else len(u)
        wit = oracle_leq_principal(ctx, u, reduce_word(ctx, ws[1]), bound)
        s = None if wit is None else ctx.format_word(wit)
        return 0, [s if s is not None else "none"], {
            "command": "oracle", "which": "leq", "witness": s}
    if args.which == "intersect":
        a, b = reduce_word(ctx, ws[0]), reduce_word(ctx, ws[1])
        bound = args.bound if args.bound is not None else len(a) + len(b) + 2
        forms = oracle_intersection_elements(ctx, a, b, bound)
        lines = [format_canonical(ctx, f) for f in forms]
        return 0, lines, {"command": "oracle", "which": "intersect",
                          "bound": bound, "elements": lines}
    a = reduce_word(ctx, ws[0])
    bound = args.bound if args.bound is not None else 3
    pairs = oracle_annihilator_pairs(ctx, a, bound)
    rendered = [[format_canonical(ctx, s), format_canonical(ctx, t)]
                for s, t in pairs]
    return 0, ["%s ~ %s" % (s, t) for s, t in rendered], {
        "command": "oracle", "which": "ann", "bound": bound,
        "pairs": rendered}


def _cmd_report(cf, args):
    from .report import render_report
    paths = render_report(cf, args.outdir)
    return 0, list(paths), {"command": "report", "files": list(paths)}


_HANDLERS = {
    "normalize": _cmd_normalize,
    "eq": _cmd_eq,
    "mul": _cmd_mul,
    "foata": _cmd_foata,
    "divides": _cmd_divides,
    "witness": _cmd_witness,
    "intersect": _cmd_intersect,
    "annihilator": _cmd_annihilator,
    "check": _cmd_check,
    "decompose": _cmd_decompose,
    "oracle": _cmd_oracle,
    "report": _cmd_report,
}


def run_command(argv):
    """Run one command line; returns (exit code, output text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        return 2, "error: %s" % exc
    except SystemExit as exc:  # --help prints and exits
        return int(exc.code or 0), ""
    if not args.command:
        return 2, "error: no command given; see --help"
    if args.context is None:
        return 2, "error: a context file is required (-c FILE)"
    try:
        with open(args.context, "r", encoding="utf-8") as fh:
            cf = parse_context_file(fh.read())
        code, lines, payload = _HANDLERS[args.command](cf, args)
    except _UsageError as exc:
        return 2, "error: %s" % exc
    except GPPreconditionError as exc:
        return 1, "error: %s" % exc
    except GPValidationError as exc:  # includes ParseError
        return 2, "error: %s" % exc
    except GPInternalError as exc:
        return 3, "internal error: %s" % exc
    except OSError as exc:
        return 2, "error: %s" % exc
    if args.json:
        return code, json.dumps(payload, sort_keys=True)
    return code, "\n".join(lines)


def main(argv=None):
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
