#!/usr/bin/env python3
"""Regenerate the shipped fixture files (fixtures/*.gc).

The files are deterministic serializations; the golden tests assert that a
fresh run reproduces them byte for byte.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from graycat import fixtures, functors, io as gio, transfors  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def write(name, text):
    path = OUT / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def main():
    OUT.mkdir(exist_ok=True)
    cats = {
        "bc2.gc": fixtures.bc2(),
        "bc2zero.gc": fixtures.bc2(nontrivial=False),
        "bc4.gc": fixtures.bc4(),
        "one.gc": fixtures.terminal_category(),
        "walking1.gc": fixtures.build_walking(1),
        "walking2.gc": fixtures.build_walking(2),
        "walking3.gc": fixtures.build_walking(3),
        "wpair.gc": fixtures.walking_pair(),
        "wtriple.gc": fixtures.walking_triple(),
        "wwhiskl.gc": fixtures.walking_whisker_left(),
        "wwhiskr.gc": fixtures.walking_whisker_right(),
    }
    for name, cat in cats.items():
        write(name, gio.serialize(gio.document_for_category(cat)))

    # a category with one rebound tensor entry; the 3-cell a1u0 sits on the
    # wrong 2-cell, so validation must flag the tensor boundary
    bad = fixtures.bc2().with_entry("tensor", ("a1", "a1"), "a1u0")
    write("corrupted.gc", gio.serialize(gio.document_for_category(bad)))

    # a document carrying transfors over bc2, for validate/compose runs
    bc = fixtures.bc2()
    doc = gio.document_for_category(bc)
    fs = functors.enumerate_functors(bc, bc)
    for F in fs:
        doc.add("functor", F.name, F)
    ident = fs[1]
    ts = transfors.enumerate_pstransf(ident, ident)
    for n, t in enumerate(ts):
        doc.add("pstransf", f"t{n}", t)
    mods = transfors.enumerate_psmod(ts[1], ts[1])
    for n, m in enumerate(mods):
        doc.add("psmod", f"m{n}", m)
    perts = transfors.enumerate_pert(mods[0], mods[0])
    for n, p in enumerate(perts):
        doc.add("perturbation", f"p{n}", p)
    write("bc2_transfors.gc", gio.serialize(doc))


if __name__ == "__main__":
    main()
