"""Line-oriented text format for pairs, with optional involution and module blocks.

See docs/pair_format.md for the grammar.  ``serialize`` is canonical:
entries are sorted and values printed in normal form, so
parse(serialize(parse(t))) == parse(t) and serialize is idempotent.
"""

from __future__ import annotations

import hashlib
from typing import NamedTuple, Optional

from .errors import AxiomError, ParseError
from .fields import field_from_name
from .involutions import Involution
from .pair import MINUS, PLUS, SIGNS, AssocPair, check_pair_axioms
from .structure import PairModuleRep

HEADER = "pairforge-pair 1"
_SIGN_TOKENS = {"+": PLUS, "-": MINUS}


class ParsedPair(NamedTuple):
    pair: AssocPair
    involution: Optional[Involution] = None
    module: Optional[PairModuleRep] = None


def _tokens(line: str):
    """(token, 1-based column) pairs."""
    out, i, n = [], 0, len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def parse_pair_file(text: str, check_axioms: bool = True) -> ParsedPair:
    field = None
    dims = None
    products = {PLUS: {}, MINUS: {}}
    star = None
    module = None
    actions = {PLUS: {}, MINUS: {}}
    seen_header = False
    ended = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        if ended:
            raise ParseError("content after 'end'", lineno, toks[0][1])
        key, col = toks[0]

        def err(msg, at=col):
            return ParseError(msg, lineno, at)

        def count(n):
            if len(toks) != n:
                raise err(f"'{key}' expects {n - 1} argument(s), got {len(toks) - 1}")

        def integer(idx, lo, hi, what):
            tok, c = toks[idx]
            try:
                v = int(tok)
            except ValueError:
                raise err(f"{what} must be an integer, got {tok!r}", c) from None
            if not lo <= v < hi:
                raise err(f"{what} {v} out of range [{lo}, {hi})", c)
            return v

        def sign(idx):
            tok, c = toks[idx]
            if tok not in _SIGN_TOKENS:
                raise err(f"sign must be '+' or '-', got {tok!r}", c)
            return _SIGN_TOKENS[tok]

        def value(idx):
            tok, c = toks[idx]
            try:
                return field.parse(tok)
            except ParseError as exc:
                raise err(str(exc), c) from None

        if not seen_header:
            if " ".join(t for t, _ in toks) != HEADER:
                raise err(f"expected header {HEADER!r}")
            seen_header = True
            continue
        if key == "field":
            if field is not None:
                raise err("duplicate field declaration")
            try:
                field = field_from_name(" ".join(t for t, _ in toks[1:]))
            except ParseError as exc:
                raise err(str(exc), toks[1][1] if len(toks) > 1 else col) from None
        elif key == "dims":
            if field is None:
                raise err("'dims' before 'field'")
            if dims is not None:
                raise err("duplicate dims declaration")
            count(3)
            dims = {PLUS: integer(1, 0, 10 ** 6, "dim+"), MINUS: integer(2, 0, 10 ** 6, "dim-")}
        elif key == "product":
            if dims is None:
                raise err("'product' before 'dims'")
            count(7)
            s = sign(1)
            i = integer(2, 0, dims[s], "index i")
            j = integer(3, 0, dims[-s], "index j")
            k = integer(4, 0, dims[s], "index k")
            l = integer(5, 0, dims[s], "index l")
            v = value(6)
            slot = products[s].setdefault((i, j, k), {})
            if l in slot:
                raise err("duplicate product entry")
            slot[l] = v
        elif key == "involution":
            if dims is None:
                raise err("'involution' before 'dims'")
            if star is not None:
                raise err("duplicate involution block")
            count(1)
            star = {PLUS: {}, MINUS: {}}
        elif key == "star":
            if star is None:
                raise err("'star' outside an involution block")
            count(5)
            s = sign(1)
            r = integer(2, 0, dims[s], "row")
            c = integer(3, 0, dims[s], "column")
            if (r, c) in star[s]:
                raise err("duplicate star entry")
            star[s][(r, c)] = value(4)
        elif key == "module":
            if dims is None:
                raise err("'module' before 'dims'")
            if module is not None:
                raise err("duplicate module block")
            count(4)
            module = (integer(1, 0, 10 ** 6, "m+"), integer(2, 0, 10 ** 6, "m-"), integer(3, 1, 10 ** 6, "delta"))
        elif key == "action":
            if module is None:
                raise err("'action' outside a module block")
            count(6)
            s = sign(1)
            mdims = {PLUS: module[0], MINUS: module[1]}
            i = integer(2, 0, mdims[s], "module index")
            j = integer(3, 0, dims[-s], "pair index")
            k = integer(4, 0, mdims[-s], "output index")
            slot = actions[s].setdefault((i, j), {})
            if k in slot:
                raise err("duplicate action entry")
            slot[k] = value(5)
        elif key == "end":
            count(1)
            ended = True
        else:
            raise err(f"unknown keyword {key!r}")

    if not seen_header:
        raise ParseError("empty input: missing header", 1, 1)
    if field is None or dims is None:
        raise ParseError("missing 'field' or 'dims' declaration")

    tables = {s: {ijk: tuple(sorted(row.items())) for ijk, row in products[s].items()} for s in SIGNS}
    A = AssocPair(field, dims[PLUS], dims[MINUS], tables)
    if check_axioms:
        res = check_pair_axioms(A)
        if not res.ok:
            raise AxiomError(f"pair axioms fail at {format_witness(res.witness)}", res.witness)
    inv = None
    if star is not None:
        mats = {}
        for s in SIGNS:
            n = dims[s]
            mats[s] = tuple(tuple(field(star[s].get((r, c), 0)) for c in range(n)) for r in range(n))
        inv = Involution(mats[PLUS], mats[MINUS])
    rep = None
    if module is not None:
        acts = {s: {ij: tuple(sorted(row.items())) for ij, row in actions[s].items()} for s in SIGNS}
        rep = PairModuleRep(A, module[0], module[1], acts, module[2])
    return ParsedPair(A, inv, rep)


def format_witness(w) -> str:
    if w is None:
        return "none"
    s, idx = w
    return f"({'+' if s == PLUS else '-'}, {', '.join(str(i) for i in idx)})"


def serialize(A: AssocPair, involution: Optional[Involution] = None,
              module: Optional[PairModuleRep] = None) -> str:
    f = A.field
    lines = [HEADER, f"field {'Q' if f.kind == 'Q' else f'GF {f.characteristic}'}", f"dims {A.dim_plus} {A.dim_minus}"]
    for s in SIGNS:
        tag = "+" if s == PLUS else "-"
        for (i, j, k), terms in sorted(A.tables[s].items()):
            for l, v in terms:
                lines.append(f"product {tag} {i} {j} {k} {l} {f.format(v)}")
    if involution is not None:
        lines.append("involution")
        for s in SIGNS:
            tag = "+" if s == PLUS else "-"
            for r, row in enumerate(involution.matrix(s)):
                for c, v in enumerate(row):
                    if v:
                        lines.append(f"star {tag} {r} {c} {f.format(v)}")
    if module is not None:
        lines.append(f"module {module.m_plus} {module.m_minus} {module.delta_dim}")
        for s in SIGNS:
            tag = "+" if s == PLUS else "-"
            for (i, j), terms in sorted(module.actions[s].items()):
                for k, v in terms:
                    if v:
                        lines.append(f"action {tag} {i} {j} {k} {f.format(v)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def digest(A: AssocPair, involution=None, module=None) -> str:
    return "sha256:" + hashlib.sha256(serialize(A, involution, module).encode()).hexdigest()
