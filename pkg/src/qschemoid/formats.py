"""Line-oriented text formats for schemoids, association schemes and groups.

Schemoid files::

    #qschemoid v1
    objects <n>
    mor <id> <src> <tgt> [id]
    comp <g> <f> <gf>
    block <name> <id> ...
    invol <object images> / <morphism images>

``mor`` lines must list ids ``0..m-1`` in order; the trailing ``id`` marks the
identity of its object. Composites with an identity factor may be omitted.
Without ``block`` lines the partition is discrete. Canonical output lists
only composites of two non-identities, sorted, and blocks sorted by least
member. Blank lines and ``#`` comments after the header are ignored.

Scheme files (``#ascheme v1``) and group files (``#group v1``) carry ``n``
followed by ``n`` rows of ``n`` integers.
"""

from __future__ import annotations

import re

from .aschemoid import ASchemoid, validate_aschemoid
from .errors import ParseError
from .fincat import FinGroup, validate_category, validate_group
from .schemoid import AssocScheme, QSchemoid, make_partition, validate_scheme, validate_schemoid

SCHEMOID_HEADER = "#qschemoid v1"
SCHEME_HEADER = "#ascheme v1"
GROUP_HEADER = "#group v1"

_WS = re.compile(r"\S+")


def _lines(text: str):
    """Yield ``(line_number, [(column, token), ...])`` for content lines after the header."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if lineno == 1:
            continue
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, [(m.start() + 1, m.group()) for m in _WS.finditer(raw)]


def _check_header(text: str, header: str) -> None:
    first = text.splitlines()[0].strip() if text.strip() else ""
    if first != header:
        raise ParseError(1, f"expected header {header!r}, found {first!r}", column=1)


def _int(tok: tuple[int, str], lineno: int) -> int:
    col, word = tok
    try:
        return int(word)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, found {word!r}", column=col) from None


def sniff(text: str) -> str:
    """Return ``"schemoid"``, ``"scheme"`` or ``"group"`` from the header line."""
    first = text.splitlines()[0].strip() if text.strip() else ""
    kinds = {SCHEMOID_HEADER: "schemoid", SCHEME_HEADER: "scheme", GROUP_HEADER: "group"}
    if first not in kinds:
        raise ParseError(1, f"unknown header {first!r}", column=1)
    return kinds[first]


# -- schemoids ----------------------------------------------------------------------

def load_schemoid(text: str) -> tuple[QSchemoid, ASchemoid | None]:
    """Parse a schemoid file; the second item is set when an ``invol`` line is present."""
    _check_header(text, SCHEMOID_HEADER)
    n_objects = None
    morphisms: list[tuple[int, int]] = []
    identity: dict[int, int] = {}
    comp: list[tuple[int, int, int]] = []
    blocks: list[list[int]] = []
    names: list[str] = []
    invol = None
    for lineno, toks in _lines(text):
        key = toks[0][1]
        args = toks[1:]
        if key == "objects":
            if n_objects is not None:
                raise ParseError(lineno, "duplicate 'objects' line", column=toks[0][0])
            if len(args) != 1:
                raise ParseError(lineno, "'objects' takes one integer")
            n_objects = _int(args[0], lineno)
        elif key == "mor":
            if n_objects is None:
                raise ParseError(lineno, "'mor' before 'objects'", column=toks[0][0])
            if len(args) not in (3, 4) or (len(args) == 4 and args[3][1] != "id"):
                raise ParseError(lineno, "expected 'mor <id> <src> <tgt> [id]'")
            mid, s, t = (_int(a, lineno) for a in args[:3])
            if mid != len(morphisms):
                raise ParseError(lineno, f"morphism ids must be consecutive: expected {len(morphisms)}",
                                 column=args[0][0])
            for tok, end in ((args[1], s), (args[2], t)):
                if not 0 <= end < n_objects:
                    raise ParseError(lineno, f"object {end} out of range", column=tok[0])
            morphisms.append((s, t))
            if len(args) == 4:
                if s != t:
                    raise ParseError(lineno, "an identity must be an endomorphism", column=args[3][0])
                if s in identity:
                    raise ParseError(lineno, f"object {s} already has an identity", column=args[3][0])
                identity[s] = mid
        elif key == "comp":
            if len(args) != 3:
                raise ParseError(lineno, "expected 'comp <g> <f> <gf>'")
            vals = [_int(a, lineno) for a in args]
            for tok, v in zip(args, vals):
                if not 0 <= v < len(morphisms):
                    raise ParseError(lineno, f"morphism {v} is not declared", column=tok[0])
            comp.append(tuple(vals))
        elif key == "block":
            if len(args) < 2:
                raise ParseError(lineno, "expected 'block <name> <id> ...'")
            members = [_int(a, lineno) for a in args[1:]]
            for tok, v in zip(args[1:], members):
                if not 0 <= v < len(morphisms):
                    raise ParseError(lineno, f"morphism {v} is not declared", column=tok[0])
            names.append(args[0][1])
            blocks.append(members)
        elif key == "invol":
            if invol is not None:
                raise ParseError(lineno, "duplicate 'invol' line", column=toks[0][0])
            words = [w for _, w in args]
            if words.count("/") != 1:
                raise ParseError(lineno, "expected 'invol <objects> / <morphisms>'")
            cut = words.index("/")
            invol = ([_int(a, lineno) for a in args[:cut]],
                     [_int(a, lineno) for a in args[cut + 1:]])
        else:
            raise ParseError(lineno, f"unknown keyword {key!r}", column=toks[0][0])
    if n_objects is None:
        raise ParseError(1, "missing 'objects' line")
    missing = [x for x in range(n_objects) if x not in identity]
    if missing:
        raise ParseError(1, f"object {missing[0]} has no identity morphism")
    cat = validate_category(n_objects, morphisms, [identity[x] for x in range(n_objects)], comp)
    if blocks:
        part = make_partition(cat.n_morphisms, blocks, names=names)
    else:
        part = make_partition(cat.n_morphisms, [[m] for m in range(cat.n_morphisms)])
    q = validate_schemoid(cat, part)
    a = validate_aschemoid(q, *invol) if invol is not None else None
    return q, a


def parse_schemoid(text: str) -> QSchemoid:
    return load_schemoid(text)[0]


def parse_aschemoid(text: str) -> ASchemoid:
    q, a = load_schemoid(text)
    if a is None:
        raise ParseError(1, "file has no 'invol' line")
    return a


def _token(name: str) -> str:
    return re.sub(r"\s+", "_", name) or "_"


def emit_schemoid(q: QSchemoid | ASchemoid) -> str:
    a = q if isinstance(q, ASchemoid) else None
    if a is not None:
        q = a.base
    cat = q.cat
    ident = cat.identity_set
    lines = [SCHEMOID_HEADER, f"objects {cat.n_objects}"]
    for m in range(cat.n_morphisms):
        line = f"mor {m} {cat.src[m]} {cat.tgt[m]}"
        lines.append(line + " id" if m in ident else line)
    for (g, f), h in sorted(cat.comp.items()):
        if g not in ident and f not in ident:
            lines.append(f"comp {g} {f} {h}")
    order = sorted(range(q.n_blocks), key=lambda b: q.partition.blocks[b][0])
    for b in order:
        name = _token(q.partition.name(b)) if q.partition.names else f"b{b}"
        lines.append(f"block {name} " + " ".join(map(str, q.partition.blocks[b])))
    if a is not None:
        lines.append("invol " + " ".join(map(str, a.t_obj)) + " / " + " ".join(map(str, a.t_mor)))
    return "\n".join(lines) + "\n"


# -- square tables ---------------------------------------------------------------------

def _parse_square(text: str, header: str) -> tuple[list[list[int]], list[int]]:
    _check_header(text, header)
    rows: list[list[int]] = []
    row_lines: list[int] = []
    n = None
    for lineno, toks in _lines(text):
        if n is None:
            if len(toks) != 1:
                raise ParseError(lineno, "expected the size on its own line")
            n = _int(toks[0], lineno)
            if n < 1:
                raise ParseError(lineno, "size must be positive", column=toks[0][0])
            continue
        if len(rows) == n:
            raise ParseError(lineno, f"more than {n} rows", column=toks[0][0])
        if len(toks) != n:
            raise ParseError(lineno, f"row {len(rows)} has {len(toks)} entries, expected {n}")
        rows.append([_int(t, lineno) for t in toks])
        row_lines.append(lineno)
    if n is None:
        raise ParseError(1, "missing size line")
    if len(rows) != n:
        raise ParseError(len(text.splitlines()), f"expected {n} rows, found {len(rows)}")
    return rows, row_lines


def _emit_square(header: str, rows) -> str:
    return "\n".join([header, str(len(rows))] + [" ".join(map(str, r)) for r in rows]) + "\n"


def parse_scheme(text: str) -> AssocScheme:
    rows, row_lines = _parse_square(text, SCHEME_HEADER)
    for i, (row, lineno) in enumerate(zip(rows, row_lines)):
        if row[i] != 0:
            raise ParseError(lineno, f"row {i}: diagonal entry is {row[i]}, must be 0")
    return validate_scheme(rows)


def emit_scheme(a: AssocScheme) -> str:
    return _emit_square(SCHEME_HEADER, a.relation)


def parse_group(text: str) -> FinGroup:
    rows, _ = _parse_square(text, GROUP_HEADER)
    return validate_group(rows)


def emit_group(g: FinGroup) -> str:
    return _emit_square(GROUP_HEADER, g.cayley)
