"""Regenerate the files under fixtures/ from the library constructors."""

from pathlib import Path

from qschemoid.aschemoid import tilde_interval, transpose_involution
from qschemoid.catalog import (
    commuting_square_schemoid,
    cyclic_group,
    idempotent_pairs_schemoid,
    klein_four_group,
    symmetric_group,
)
from qschemoid.constructors import iota, jmath, scheme_of_group, stilde
from qschemoid.formats import emit_group, emit_scheme, emit_schemoid
from qschemoid.schemoid import trivial_scheme

GROUPS = {
    "z2": cyclic_group(2),
    "z3": cyclic_group(3),
    "z4": cyclic_group(4),
    "z2xz2": klein_four_group(),
    "s3": symmetric_group(3),
}


def main(out: Path = Path(__file__).resolve().parent.parent / "fixtures") -> None:
    out.mkdir(exist_ok=True)
    files = {
        "sec3_example.qsmd": emit_schemoid(idempotent_pairs_schemoid(3)),
        "remark38.qsmd": emit_schemoid(commuting_square_schemoid()),
        "tilde_interval.qsmd": emit_schemoid(tilde_interval()),
    }
    for n in range(2, 6):
        files[f"trivial{n}.scheme"] = emit_scheme(trivial_scheme(n))
    for n in (2, 3):
        files[f"trivial{n}_transpose.qsmd"] = emit_schemoid(
            transpose_involution(jmath(trivial_scheme(n))))
    for name, g in GROUPS.items():
        files[f"{name}.group"] = emit_group(g)
        files[f"s_{name}.scheme"] = emit_scheme(scheme_of_group(g))
        files[f"stilde_{name}.qsmd"] = emit_schemoid(stilde(iota(g)))
    for name, text in sorted(files.items()):
        (out / name).write_text(text)
        print(name)


if __name__ == "__main__":
    main()
