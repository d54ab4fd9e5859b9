"""Quiver-with-relations presentations: parsing, serialization, path bases.

Paths are composed left to right: ``a*b`` means "a, then b", so it is
nonzero only when the target of ``a`` is the source of ``b``.

Grammar::

    algebra <ident> over GF(<p>)
    vertices: <ident> ( <ident> )*
    arrows: <ident> : <ident> -> <ident> ( ; <ident> : <ident> -> <ident> )*
    relations: <lincomb> ( ; <lincomb> )*      # optional
    lincomb := [-] <term> ( (+|-) <term> )*
    term    := [ <int> * ] <ident> ( * <ident> )*
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .algebra import BasedAlgebra

SECTIONS = ("vertices", "arrows", "relations")
DEFAULT_MAX_PATH_LENGTH = 64
MAX_PATHS = 50_000

Term = tuple[int, tuple[str, ...]]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message, self.line, self.col = message, line, col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + message)


class BuildError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # word, int, sym, eof
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<word>[A-Za-z0-9_]+)|(?P<sym>->|[:;*+\-()])")


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "word":
            toks.append(Token("int" if chunk.isdigit() else "word", chunk, line, col))
        elif kind == "sym":
            toks.append(Token("sym", chunk, line, col))
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    toks.append(Token("eof", "", line, pos - line_start + 1))
    return toks


@dataclass
class QuiverPresentation:
    name: str
    p: int
    vertices: list[str]
    arrows: list[tuple[str, str, str]]
    relations: list[list[Term]] = field(default_factory=list)

    def arrow_map(self) -> dict[str, tuple[str, str]]:
        return {a: (s, t) for a, s, t in self.arrows}

    def validate(self) -> None:
        la.check_prime(self.p)
        if not self.vertices:
            raise ParseError("at least one vertex is required")
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex")
        labels = [a for a, _, _ in self.arrows]
        if len(set(labels)) != len(labels):
            raise ParseError("duplicate arrow label")
        vs = set(self.vertices)
        for a, s, t in self.arrows:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", a) or a in SECTIONS:
                raise ParseError(f"invalid arrow label {a!r}")
            if s not in vs or t not in vs:
                raise ParseError(f"arrow {a} uses an undeclared vertex")
        for rel in self.relations:
            _check_relation(rel, self.arrow_map(), self.p)


def _path_ends(path: tuple[str, ...], amap) -> tuple[str, str] | str:
    for a in path:
        if a not in amap:
            return f"undeclared arrow {a!r}"
    for a, b in zip(path, path[1:]):
        if amap[a][1] != amap[b][0]:
            return f"path {'*'.join(path)} is not composable ({a} ends at {amap[a][1]}, {b} starts at {amap[b][0]})"
    return amap[path[0]][0], amap[path[-1]][1]


def _check_relation(rel: list[Term], amap, p: int, where=(0, 0)) -> None:
    ends = None
    if not rel:
        raise ParseError("empty relation", *where)
    for c, path in rel:
        if not 0 < c < p:
            raise ParseError("coefficient not reduced mod p", *where)
        if len(path) < 2:
            raise ParseError(f"relation term {'*'.join(path)} has path length < 2", *where)
        e = _path_ends(path, amap)
        if isinstance(e, str):
            raise ParseError(e, *where)
        if ends is None:
            ends = e
        elif e != ends:
            raise ParseError("relation mixes paths with different endpoints", *where)


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def err(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.cur
        return ParseError(msg, tok.line, tok.col)

    def next(self) -> Token:
        t = self.cur
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.cur
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "eof" else "end of input"
            raise self.err(f"expected {want}, found {got}")
        return self.next()

    def at_section(self) -> bool:
        t = self.cur
        return t.kind == "word" and t.text in SECTIONS and self.peek().text == ":"

    def ident(self, what: str) -> Token:
        if self.cur.kind not in ("word", "int") or self.at_section():
            raise self.err(f"expected {what}")
        return self.next()

    def parse(self) -> QuiverPresentation:
        self.expect("word", "algebra")
        name = self.ident("algebra name").text
        self.expect("word", "over")
        self.expect("word", "GF")
        self.expect("sym", "(")
        ptok = self.expect("int")
        self.expect("sym", ")")
        p = int(ptok.text)
        try:
            la.check_prime(p)
        except ValueError as exc:
            raise self.err(str(exc), ptok) from None
        vertices: list[str] = []
        arrows: list[tuple[str, str, str]] = []
        relations: list[list[Term]] = []
        seen: set[str] = set()
        while self.cur.kind != "eof":
            if not self.at_section():
                raise self.err(f"expected a section header, found {self.cur.text!r}")
            sec = self.next().text
            if sec in seen:
                raise self.err(f"duplicate section {sec!r}", self.toks[self.i - 1])
            seen.add(sec)
            if sec == "arrows" and "vertices" not in seen:
                raise self.err("arrows section before vertices", self.toks[self.i - 1])
            self.expect("sym", ":")
            if sec == "vertices":
                self.parse_vertices(vertices)
            elif sec == "arrows":
                self.parse_arrows(arrows, set(vertices))
            else:
                self.parse_relations(relations, {a: (s, t) for a, s, t in arrows}, p)
        if "vertices" not in seen or not vertices:
            raise self.err("missing vertices section")
        return QuiverPresentation(name, p, vertices, arrows, relations)

    def parse_vertices(self, out: list[str]) -> None:
        while self.cur.kind in ("word", "int") and not self.at_section():
            t = self.next()
            if t.text in out:
                raise self.err(f"duplicate vertex {t.text!r}", t)
            out.append(t.text)
        if not out:
            raise self.err("expected a vertex name")

    def parse_arrows(self, out: list[tuple[str, str, str]], vertices: set[str]) -> None:
        labels = {a for a, _, _ in out}
        while not self.at_section() and self.cur.kind != "eof":
            lab = self.cur
            if lab.kind != "word" or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", lab.text):
                raise self.err("arrow labels must start with a letter or underscore")
            self.next()
            if lab.text in labels:
                raise self.err(f"duplicate arrow {lab.text!r}", lab)
            self.expect("sym", ":")
            s = self.ident("source vertex")
            self.expect("sym", "->")
            t = self.ident("target vertex")
            for v in (s, t):
                if v.text not in vertices:
                    raise self.err(f"undeclared vertex {v.text!r}", v)
            out.append((lab.text, s.text, t.text))
            labels.add(lab.text)
            if self.cur.text == ";" and self.cur.kind == "sym":
                self.next()
            elif not (self.at_section() or self.cur.kind == "eof"):
                raise self.err("expected ';' or a new section")

    def parse_relations(self, out: list[list[Term]], amap, p: int) -> None:
        while not self.at_section() and self.cur.kind != "eof":
            start = self.cur
            rel = self.parse_lincomb(amap, p)
            if rel:
                _check_relation(rel, amap, p, (start.line, start.col))
                out.append(rel)
            if self.cur.kind == "sym" and self.cur.text == ";":
                self.next()
            elif not (self.at_section() or self.cur.kind == "eof"):
                raise self.err("expected ';', '+', '-' or a new section")

    def parse_lincomb(self, amap, p: int) -> list[Term]:
        acc: dict[tuple[str, ...], int] = {}
        sign = 1
        if self.cur.kind == "sym" and self.cur.text == "-":
            self.next()
            sign = -1
        while True:
            coef, path, tok = self.parse_term()
            for a in path:
                if a not in amap:
                    raise self.err(f"undeclared arrow {a!r}", tok)
            acc[path] = (acc.get(path, 0) + sign * coef) % p
            if self.cur.kind == "sym" and self.cur.text in "+-":
                sign = 1 if self.next().text == "+" else -1
            else:
                break
        return [(c, path) for path, c in acc.items() if c]

    def parse_term(self) -> tuple[int, tuple[str, ...], Token]:
        tok = self.cur
        coef = 1
        if tok.kind == "int":
            coef = int(self.next().text)
            self.expect("sym", "*")
        if self.cur.kind != "word" or self.at_section():
            raise self.err("expected an arrow label")
        path = [self.next().text]
        while self.cur.kind == "sym" and self.cur.text == "*":
            self.next()
            if self.cur.kind != "word":
                raise self.err("expected an arrow label after '*'")
            path.append(self.next().text)
        return coef, tuple(path), tok


def parse(text: str) -> QuiverPresentation:
    """Parse DSL source; raises ParseError with line and column on failure."""
    return _Parser(text).parse()


def serialize(P: QuiverPresentation) -> str:
    lines = [f"algebra {P.name} over GF({P.p})", "vertices: " + " ".join(P.vertices)]
    if P.arrows:
        lines.append("arrows: " + "; ".join(f"{a}: {s} -> {t}" for a, s, t in P.arrows))
    if P.relations:
        rels = []
        for rel in P.relations:
            terms = [("" if c == 1 else f"{c}*") + "*".join(path) for c, path in rel]
            rels.append(" + ".join(terms))
        lines.append("relations: " + "; ".join(rels))
    return "\n".join(lines) + "\n"


def _paths_by_length(P: QuiverPresentation, L: int) -> list[list[tuple[int, ...]]]:
    """Paths (tuples of arrow indices) of lengths 1..L-1; index 0 is unused."""
    vid = {v: i for i, v in enumerate(P.vertices)}
    asrc = [vid[s] for _, s, _ in P.arrows]
    atgt = [vid[t] for _, _, t in P.arrows]
    out: list[list[tuple[int, ...]]] = [[]]
    cur = [(a,) for a in range(len(P.arrows))]
    total = 0
    for _ in range(1, L):
        out.append(cur)
        total += len(cur)
        if total > MAX_PATHS:
            raise BuildError("not finite dimensional within budget (too many paths)")
        cur = [q + (a,) for q in cur for a in range(len(P.arrows)) if atgt[q[-1]] == asrc[a]]
    return out


def build_algebra(P: QuiverPresentation, max_path_length: int = DEFAULT_MAX_PATH_LENGTH) -> BasedAlgebra:
    """Path basis of KQ/I with normal forms chosen by degreewise echelonization.

    At length bound ``L = K + 1`` the ideal generated by the relations is
    computed modulo paths of length >= L; the search stops at the first ``K``
    for which every path of length ``K`` lies in it.
    """
    P.validate()
    p = P.p
    vid = {v: i for i, v in enumerate(P.vertices)}
    aid = {a: i for i, (a, _, _) in enumerate(P.arrows)}
    asrc = [vid[s] for _, s, _ in P.arrows]
    atgt = [vid[t] for _, _, t in P.arrows]
    rels = [[(c, tuple(aid[a] for a in path)) for c, path in rel] for rel in P.relations]
    nv = len(P.vertices)

    def ends(path):
        return asrc[path[0]], atgt[path[-1]]

    result = None
    for K in range(1, max_path_length + 1):
        L = K + 1
        by_len = _paths_by_length(P, L)
        if K == 1:
            if not by_len[1]:
                result = (K, L, by_len, None, [], {})
                break
            continue
        # columns: longest paths first
        cols = [q for k in range(L - 1, 0, -1) for q in by_len[k]]
        col_of = {q: i for i, q in enumerate(cols)}
        starting = {v: [()] for v in range(nv)}
        ending = {v: [()] for v in range(nv)}
        for k in range(1, L):
            for q in by_len[k]:
                s, t = ends(q)
                starting[s].append(q)
                ending[t].append(q)
        rows = []
        for rel in rels:
            rs, rt = ends(rel[0][1])
            minlen = min(len(q) for _, q in rel)
            for u in ending[rs]:
                if len(u) + minlen >= L:
                    continue
                for v in starting[rt]:
                    if len(u) + len(v) + minlen >= L:
                        continue
                    row = {}
                    for c, q in rel:
                        w = u + q + v
                        if len(w) < L:
                            row[col_of[w]] = (row.get(col_of[w], 0) + c) % p
                    if any(row.values()):
                        rows.append(row)
        if rows:
            J = np.zeros((len(rows), len(cols)), dtype=np.int64)
            for r, row in enumerate(rows):
                for c, val in row.items():
                    J[r, c] = val
            R, piv = la.row_basis(J, p)
        else:
            R, piv = np.zeros((0, len(cols)), dtype=np.int64), []
        if any(len(cols[c]) == 1 for c in piv):
            raise BuildError("relation ideal is not admissible (an arrow becomes zero)")
        pivset = set(piv)
        if all(col_of[q] in pivset for q in by_len[K]):
            result = (K, L, by_len, R, list(piv), col_of)
            break
    if result is None:
        raise BuildError(f"not finite dimensional within budget (max_path_length={max_path_length})")
    K, L, by_len, R, piv, col_of = result
    return _assemble(P, K, by_len, R, piv, col_of, asrc, atgt)


def _assemble(P, K, by_len, R, piv, col_of, asrc, atgt) -> BasedAlgebra:
    p = P.p
    nv = len(P.vertices)
    pivset = set(piv)
    normal = [q for k in range(1, min(K, len(by_len))) for q in by_len[k] if col_of.get(q, -1) not in pivset]
    basis: list[tuple] = [("e", v) for v in range(nv)] + [("p", q) for q in normal]
    index = {b: i for i, b in enumerate(basis)}
    d = len(basis)
    pivot_row = {c: r for r, c in enumerate(piv)}
    cols_inv = {i: q for q, i in col_of.items()}

    def reduce_path(w: tuple[int, ...]) -> dict[int, int]:
        if len(w) >= K:
            return {}
        key = ("p", w)
        if key in index:
            return {index[key]: 1}
        row = R[pivot_row[col_of[w]]]
        out = {}
        for c in np.flatnonzero(row):
            if c in pivset:
                continue
            out[index[("p", cols_inv[c])]] = (-int(row[c])) % p
        return out

    def ends(b):
        if b[0] == "e":
            return b[1], b[1]
        return asrc[b[1][0]], atgt[b[1][-1]]

    src = [ends(b)[0] for b in basis]
    tgt = [ends(b)[1] for b in basis]
    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            if tgt[i] != src[j]:
                continue
            if bi[0] == "e":
                mult[i, j, j] = 1
            elif bj[0] == "e":
                mult[i, j, i] = 1
            else:
                for k, c in reduce_path(bi[1] + bj[1]).items():
                    mult[i, j, k] = c
    labels = [f"e{P.vertices[b[1]]}" if b[0] == "e" else "*".join(P.arrows[a][0] for a in b[1]) for b in basis]
    return BasedAlgebra(
        p,
        mult,
        src,
        tgt,
        [(v,) for v in range(nv)],
        list(range(nv, d)),
        labels,
        name=P.name,
        meta={"presentation": P, "vertex_names": list(P.vertices)},
    )
