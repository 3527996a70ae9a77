"""Command-line front end.

Exit codes: 0 success or "true", 1 bad input or failed validation, 2 the
computed answer is "false" or "none". Diagnostics go to stderr.

Morphism arguments accept ``id``, ``const:<y>``, ``u:<k>`` (index into the
sorted universe of all morphisms), ``obj:<y0>,<y1>,...`` (the unique morphism
with that object map) or ``map:<objs>/<mors>`` (full maps, comma separated).
"""

from __future__ import annotations

import argparse
import json
import sys

from .aschemoid import (
    ASchemoid,
    asmd_elementary_homotopy,
    transpose_involution,
    validate_amorphism,
)
from .constructors import discrete_k, find_isomorphism, iota, jmath, product_schemoid, scheme_of_group, stilde
from .errors import QSchemoidError
from .formats import (
    emit_scheme,
    emit_schemoid,
    load_schemoid,
    parse_group,
    parse_scheme,
    sniff,
)
from .haut import haut_group, identify_group
from .homotopy import (
    HomotopyGraph,
    collapse_obstruction,
    contraction,
    enumerate_morphisms,
    homotopy_classes,
)
from .schemoid import QSchemoid, SchemoidMorphism, schemoid_morphism, trivial_scheme
from .search import SearchLimits, default_threads


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> tuple[QSchemoid, ASchemoid | None]:
    """A schemoid file, or a scheme file read through jmath (with its transpose involution)."""
    text = _read(path)
    kind = sniff(text)
    if kind == "schemoid":
        return load_schemoid(text)
    if kind == "scheme":
        q = jmath(parse_scheme(text))
        return q, transpose_involution(q)
    raise UsageError(f"{path}: a group file is not a schemoid; use 'build s-group' or 'build stilde'")


def _ints(s: str) -> list[int]:
    try:
        return [int(v) for v in s.split(",") if v != ""]
    except ValueError:
        raise UsageError(f"bad integer list {s!r}") from None


def _morphism(spec: str, a: QSchemoid, b: QSchemoid, universe_fn) -> SchemoidMorphism:
    if spec == "id":
        if a != b:
            raise UsageError("'id' needs source == target")
        return schemoid_morphism(a, b, range(a.cat.n_objects), range(a.cat.n_morphisms))
    kind, _, rest = spec.partition(":")
    if kind == "const":
        y = _ints(rest)
        if len(y) != 1 or not 0 <= y[0] < b.cat.n_objects:
            raise UsageError(f"bad constant {spec!r}")
        ident = b.cat.identity[y[0]]
        return schemoid_morphism(a, b, [y[0]] * a.cat.n_objects, [ident] * a.cat.n_morphisms)
    if kind == "u":
        universe = universe_fn()
        k = _ints(rest)
        if len(k) != 1 or not 0 <= k[0] < len(universe):
            raise UsageError(f"universe index out of range in {spec!r} (size {len(universe)})")
        return universe[k[0]]
    if kind == "obj":
        objs = tuple(_ints(rest))
        hits = [f for f in universe_fn() if f.obj_map == objs]
        if len(hits) != 1:
            raise UsageError(f"{len(hits)} morphisms have object map {spec!r}; use map: or u:")
        return hits[0]
    if kind == "map":
        objs, sep, mors = rest.partition("/")
        if not sep:
            raise UsageError(f"expected map:<objs>/<mors>, got {spec!r}")
        return schemoid_morphism(a, b, _ints(objs), _ints(mors))
    raise UsageError(f"unknown morphism syntax {spec!r}")


def _fmt_map(f: SchemoidMorphism) -> str:
    return "map:" + ",".join(map(str, f.obj_map)) + "/" + ",".join(map(str, f.mor_map))


class Report:
    def __init__(self, args):
        self.as_json = args.json
        self.out_path = args.out
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str) -> None:
        self.lines.append(text)

    def flush(self) -> None:
        if self.as_json:
            text = json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        else:
            text = "".join(l + "\n" for l in self.lines)
        if self.out_path:
            with open(self.out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------------

def cmd_validate(args, rep: Report, limits) -> int:
    q, a = _load(args.file)
    rep.line(f"valid: {q.describe()}" + (", with involution" if a is not None else ""))
    rep.data.update(valid=True, objects=q.cat.n_objects, morphisms=q.cat.n_morphisms,
                    blocks=q.n_blocks, involution=a is not None)
    return 0


def cmd_constants(args, rep: Report, limits) -> int:
    q, _ = _load(args.file)
    names = [q.partition.name(b) for b in range(q.n_blocks)]
    entries = []
    for mu in range(q.n_blocks):
        for s in range(q.n_blocks):
            for t in range(q.n_blocks):
                v = q.p(s, t, mu)
                rep.line(f"p^{names[mu]}_({names[s]},{names[t]}) = {v}")
                entries.append({"mu": names[mu], "sigma": names[s], "tau": names[t], "value": v})
    rep.data["constants"] = entries
    return 0


def cmd_build(args, rep: Report, limits) -> int:
    what, params = args.what, args.params
    arity = {"trivial-scheme": 1, "s-group": 1, "jmath": 1, "stilde": 1, "k": 1, "product": 2}
    if what not in arity:
        raise UsageError(f"unknown build target {what!r}; choose from {', '.join(arity)}")
    if len(params) != arity[what]:
        raise UsageError(f"build {what} takes {arity[what]} argument(s)")
    if what == "trivial-scheme":
        try:
            n = int(params[0])
        except ValueError:
            raise UsageError("trivial-scheme needs an integer") from None
        if n < 1:
            raise UsageError("trivial-scheme needs n >= 1")
        text = emit_scheme(trivial_scheme(n))
    elif what == "s-group":
        text = emit_scheme(scheme_of_group(parse_group(_read(params[0]))))
    elif what == "jmath":
        text = emit_schemoid(jmath(parse_scheme(_read(params[0]))))
    elif what == "stilde":
        text = emit_schemoid(stilde(iota(parse_group(_read(params[0])))))
    elif what == "k":
        text = emit_schemoid(discrete_k(_load(params[0])[0].cat))
    else:
        text = emit_schemoid(product_schemoid(_load(params[0])[0], _load(params[1])[0]))
    rep.lines.append(text.rstrip("\n"))
    rep.data["text"] = text
    return 0


def _pair(args, limits):
    a, aa = _load(args.file)
    b, bb = (_load(args.target) if args.target else (a, aa))
    cache = {}

    def universe():
        if "u" not in cache:
            cache["u"] = enumerate_morphisms(a, b, limits)
        return cache["u"]

    return a, b, aa, bb, universe


def cmd_homotopic(args, rep: Report, limits) -> int:
    a, b, _, _, universe = _pair(args, limits)
    f = _morphism(args.f, a, b, universe)
    g = _morphism(args.g, a, b, universe)
    graph = HomotopyGraph(universe())
    chain = graph.chain(f, g)
    rep.data.update(homotopic=chain is not None, universe=len(universe()))
    if chain is None:
        rep.line("homotopic: false")
        return 2
    rep.line(f"homotopic: true (chain of {len(chain)} elementary step(s))")
    steps = []
    for k, step in enumerate(chain.steps):
        arrow = "=>" if step.forward else "<="
        rep.line(f"  {_fmt_map(chain.morphisms[k])} {arrow} {_fmt_map(chain.morphisms[k + 1])}"
                 f"  diagonal {list(step.homotopy.diag)}")
        steps.append({"from": _fmt_map(chain.morphisms[k]), "to": _fmt_map(chain.morphisms[k + 1]),
                      "forward": step.forward, "diagonal": list(step.homotopy.diag)})
    rep.data["chain"] = steps
    return 0


def cmd_classes(args, rep: Report, limits) -> int:
    a, b, _, _, universe = _pair(args, limits)
    classes = homotopy_classes(a, b, universe(), limits, threads=args.threads)
    rep.line(f"{len(universe())} morphisms in {len(classes)} homotopy class(es)")
    for k, cls in enumerate(classes):
        rep.line(f"class {k} ({len(cls)}): " + " ".join(_fmt_map(f) for f in cls))
    rep.data.update(morphisms=len(universe()),
                    classes=[[_fmt_map(f) for f in cls] for cls in classes])
    return 0


def cmd_haut(args, rep: Report, limits) -> int:
    q, _ = _load(args.file)
    res = haut_group(q, limits, threads=args.threads)
    kind = identify_group(res.group)
    rep.line(f"order {res.group.order}, type {kind}")
    rep.line(f"endomorphisms {res.monoid.order}, homotopy classes {len(res.classes)}")
    rep.line("table:")
    for row in res.group.cayley:
        rep.line("  " + " ".join(map(str, row)))
    rep.data.update(order=res.group.order, type=kind, endomorphisms=res.monoid.order,
                    classes=len(res.classes), table=[list(r) for r in res.group.cayley])
    return 0


def cmd_contractible(args, rep: Report, limits) -> int:
    q, _ = _load(args.file)
    found = contraction(q, limits)
    obstruction, witness = collapse_obstruction(q)
    rep.data.update(contractible=found is not None, obstruction=obstruction)
    if found is None:
        rep.line("contractible: false")
    else:
        x0, chain = found
        rep.line(f"contractible: true (identity ~ constant at object {x0}, "
                 f"chain of {len(chain)} step(s))")
        rep.data.update(base_object=x0, chain_length=len(chain))
    if obstruction:
        names = [q.partition.name(s) for s in witness]
        rep.line(f"obstruction: true (blocks {names[0]}, {names[1]})")
        rep.data["obstruction_blocks"] = names
    else:
        rep.line("obstruction: false")
    return 0 if found is not None else 2


def cmd_iso(args, rep: Report, limits) -> int:
    a, _ = _load(args.file)
    b, _ = _load(args.target)
    found = find_isomorphism(a, b, limits)
    rep.data["isomorphic"] = found is not None
    if found is None:
        rep.line("isomorphic: false")
        return 2
    rep.line("isomorphic: true")
    rep.line(f"  {_fmt_map(found[0])}")
    rep.data["map"] = _fmt_map(found[0])
    return 0


def cmd_asmd(args, rep: Report, limits) -> int:
    a, b, aa, bb, universe = _pair(args, limits)
    if aa is None or bb is None:
        raise UsageError("asmd-homotopic needs files with an involution ('invol' line or a scheme file)")
    f = validate_amorphism(_morphism(args.f, a, b, universe), aa, bb)
    g = validate_amorphism(_morphism(args.g, a, b, universe), aa, bb)
    h = asmd_elementary_homotopy(f, g)
    rep.data["homotopic"] = h is not None
    if h is None:
        rep.line("asmd-homotopic: false")
        return 2
    rep.line(f"asmd-homotopic: true, diagonal {list(h.diag)}")
    rep.data["diagonal"] = list(h.diag)
    return 0


def _limits_and_flags(p: argparse.ArgumentParser, top: bool) -> None:
    d = {} if top else {"default": argparse.SUPPRESS}
    p.add_argument("--cap", type=int, help="maximum size of a morphism universe", **d)
    p.add_argument("--json", action="store_true", help="JSON report with sorted keys", **d)
    p.add_argument("--out", help="write the report to this file", **d)
    p.add_argument("--threads", type=int, help="worker threads for class computations", **d)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschemoid", description=__doc__.splitlines()[0])
    _limits_and_flags(p, True)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        _limits_and_flags(sp, False)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "parse and validate a file").add_argument("file")
    add("constants", cmd_constants, "print structure constants").add_argument("file")
    sp = add("build", cmd_build, "construct a schemoid or scheme")
    sp.add_argument("what")
    sp.add_argument("params", nargs="*")
    for name, fn in (("homotopic", cmd_homotopic), ("asmd-homotopic", cmd_asmd)):
        sp = add(name, fn, "decide homotopy between two morphisms")
        sp.add_argument("file")
        sp.add_argument("f")
        sp.add_argument("g")
        sp.add_argument("--target", help="target file (default: same as source)")
    sp = add("classes", cmd_classes, "homotopy classes of morphisms")
    sp.add_argument("file")
    sp.add_argument("--target")
    add("haut", cmd_haut, "group of self-homotopy equivalences").add_argument("file")
    add("contractible", cmd_contractible, "decide contractibility").add_argument("file")
    sp = add("iso", cmd_iso, "find an isomorphism")
    sp.add_argument("file")
    sp.add_argument("target")
    return p


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    limits = SearchLimits()
    if args.cap is not None:
        limits = SearchLimits(max_objects=limits.max_objects, max_universe=args.cap)
    if args.threads is None:
        args.threads = default_threads()
    rep = Report(args)
    try:
        code = args.fn(args, rep, limits)
    except (QSchemoidError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rep.flush()
    return code


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
