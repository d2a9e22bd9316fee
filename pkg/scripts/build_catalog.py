"""Regenerate the built-in link files under src/qorders/data from braid words.

Run from the repository root: ``python3 scripts/build_catalog.py``.
"""

import json
import math
import random
from pathlib import Path

from qorders.laurent import quantum_int
from qorders.link import braid_closure, dump_link, linking_matrix, sublink, unlink
from qorders.skein import jones_J

DATA = Path(__file__).resolve().parents[1] / "src" / "qorders" / "data"

WHITEHEAD = [1, -2, 1, -2, -2]
BORROMEAN = [1, -2] * 3


def double_strand(n, word, pos, twist):
    """Replace the strand starting at ``pos`` by two parallel strands joined by a half twist.

    The resulting closed component is the ``(2, twist)`` cable of the original one.
    """
    d = pos
    out = []
    for g in word:
        k = abs(g) - 1
        s = 1 if g > 0 else -1
        if k == d:  # doubled strand on the right moves left past the strand at k+1
            out += [s * (d + 2), s * (d + 1)]
            d += 1
        elif k + 1 == d:  # strand at k moves left past the doubled strand
            out += [s * (d), s * (d + 1)]
            d -= 1
        else:
            out.append(s * (k + 1 if k < d else k + 2))
    if d != pos:
        raise ValueError("doubled strand must return to its starting position")
    out.append(twist * (d + 1))
    return n + 1, out


def find_chain(seed=1):
    """A 3-component link whose two outer pairs are Whitehead links and whose ends are split."""
    w = jones_J(braid_closure(3, WHITEHEAD))
    w_mirror = jones_J(braid_closure(3, [-g for g in WHITEHEAD]))
    split = quantum_int(2) ** 2
    rng = random.Random(seed)
    for _ in range(200000):
        length = rng.randint(8, 12)
        word = [rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(length)]
        L = braid_closure(4, word)
        if L.n_components != 3 or L.free_loops:
            continue
        if any(x for row in linking_matrix(L) for x in row):
            continue
        pairs = [jones_J(sublink(L, ix)) for ix in ((0, 1), (1, 2), (0, 2))]
        js = sorted(pairs, key=lambda f: f == split)
        if js[2] == split and all(f in (w, w_mirror) for f in js[:2]):
            return word
    raise RuntimeError("no chain found")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    links = {
        "unknot": unlink(1, name="unknot").renamed("unknot", milnor_degree=math.inf,
                                                    max_cabling_index=1,
                                                    h1_bordant_to_unlink=True),
        "hopf": braid_closure(2, [1, 1], name="hopf", milnor_degree=1, max_cabling_index=1),
        "trefoil_right": braid_closure(2, [1, 1, 1], name="trefoil_right",
                                       milnor_degree=math.inf, max_cabling_index=1),
        "trefoil_left": braid_closure(2, [-1, -1, -1], name="trefoil_left",
                                      milnor_degree=math.inf, max_cabling_index=1),
        "whitehead": braid_closure(3, WHITEHEAD, name="whitehead", milnor_degree=3,
                                   max_cabling_index=1),
        "borromean": braid_closure(3, BORROMEAN, name="borromean", milnor_degree=2,
                                   max_cabling_index=1),
    }
    for k, twist in ((2, 1), (-2, -1)):
        n, word = double_strand(3, BORROMEAN, 0, twist)
        links[f"borromean_cable_{k}"] = braid_closure(
            n, word, name=f"borromean_cable_{k}", milnor_degree=2, max_cabling_index=1)
    chain = find_chain()
    links["fig3b"] = braid_closure(4, chain, name="fig3b", milnor_degree=None,
                                   max_cabling_index=1)
    for name, L in links.items():
        text = json.dumps(json.loads(dump_link(L)), indent=1, sort_keys=True)
        (DATA / f"{name}.json").write_text(text + "\n")
        print(name, L.n_components, L.n_crossings)


if __name__ == "__main__":
    main()
