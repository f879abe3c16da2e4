#!/usr/bin/env python3
"""Regenerates the generated fixtures in this directory."""
from itertools import combinations


def boolean_oml(n):
    m = 1 << n
    letters = "pqr"

    def name(s):
        if s == 0:
            return "0"
        if s == m - 1:
            return "1"
        return "".join(letters[i] for i in range(n) if s >> i & 1)

    lines = [f"# Boolean algebra with {n} atom(s)", f"elements: {m}",
             "names: " + " ".join(name(s) for s in range(m))]
    for s in range(m):
        for i in range(n):
            if not s >> i & 1:
                lines.append(f"leq: {name(s)} {name(s | 1 << i)}")
    for s in range(m):
        if s < (m - 1) ^ s:
            lines.append(f"ortho: {name(s)} {name((m - 1) ^ s)}")
    return "\n".join(lines) + "\n"


def grid_pasting(rows, cols, extra=0):
    """Pasting of Boolean blocks along a rows x cols grid of atoms.

    Each row of atoms is a block and so is each column; `extra` further
    atoms z0, z1, ... belong to the first row only. Summing a state over
    the atoms row by row gives `rows`, column by column gives `cols` plus
    the values of the extra atoms.
    """
    grid = [f"a{i}{j}" for i in range(rows) for j in range(cols)]
    extras = [f"z{k}" for k in range(extra)]
    blocks = [frozenset(f"a{i}{j}" for j in range(cols)) for i in range(rows)]
    blocks[0] = blocks[0] | frozenset(extras)
    blocks += [frozenset(f"a{i}{j}" for i in range(rows)) for j in range(cols)]

    def key(subset, block):
        # Elements shared between blocks: 0, 1, atoms and their complements.
        if not subset:
            return "0"
        if subset == block:
            return "1"
        if len(subset) == 1:
            return next(iter(subset))
        if len(block - subset) == 1:
            return next(iter(block - subset)) + "'"
        return "r" + "".join(a[1:] for a in sorted(subset))

    atoms = grid + extras
    names = ["0"] + atoms + [a + "'" for a in atoms]
    sums = {}
    for block in blocks:
        members = sorted(block)
        subsets = [frozenset(c) for k in range(len(members) + 1)
                   for c in combinations(members, k)]
        for s in subsets:
            k = key(s, block)
            if k not in names:
                names.append(k)
        for x in subsets:
            for y in subsets:
                if x and y and not (x & y):
                    a, b = sorted((key(x, block), key(y, block)),
                                  key=names.index)
                    sums[(a, b)] = key(x | y, block)
    names = [n for n in names if n != "1"] + ["1"]
    return names, sorted(sums.items(), key=lambda kv: (names.index(kv[0][0]),
                                                       names.index(kv[0][1])))


def ea_text(comment, names, sums):
    lines = [f"# {c}" for c in comment] + [
        f"elements: {len(names)}", "names: " + " ".join(names), "one: 1"]
    lines += [f"sum: {a} {b} {c}" for (a, b), c in sums]
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    for n in (1, 2, 3):
        with open(f"boolean{n}.oml", "w") as f:
            f.write(boolean_oml(n))
    with open("grid_pasting.ea", "w") as f:
        f.write(ea_text(["Boolean blocks pasted along a 3x4 grid of atoms;",
                         "rows force the atom total to 3, columns to 4,",
                         "so there is no state"], *grid_pasting(3, 4)))
    with open("grid_pasting_extra.ea", "w") as f:
        f.write(ea_text(["Boolean blocks pasted along a 3x3 grid of atoms",
                         "with an extra atom z0 in the first row; every",
                         "state vanishes on z0, so none is faithful"],
                        *grid_pasting(3, 3, extra=1)))
