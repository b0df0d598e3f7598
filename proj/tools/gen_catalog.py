#!/usr/bin/env python3
"""Expand the exotic-extension branching rules for A1..A4 into data/table_2_1.json."""

import argparse
import json
from collections import Counter
from pathlib import Path


def ext(lam, k):
    return [k - sum(lam)] + list(lam)


def J(lam, k, power=1):
    for _ in range(power % (len(lam) + 1)):
        e = ext(lam, k)
        e = [e[-1]] + e[:-1]
        lam = tuple(e[1:])
    return tuple(lam)


def C(lam):
    return tuple(reversed(lam))


def orbit(lam, k, d=1, dual=False):
    r1 = len(lam) + 1
    step = r1 // d
    out = set()
    for j in range(d):
        w = J(lam, k, j * step)
        out.add(w)
        if dual:
            out.add(C(w))
            for i in range(d):
                out.add(J(C(w), k, i * step))
    return sorted(out)


def w(text):
    text = text.strip("()")
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(c, 36) for c in text)


def terms(*parts):
    c = Counter()
    for mult, ws in parts:
        for x in ws:
            c[x] += mult
    return c


def shift_all(cnt, k, power=1, dual=False):
    out = Counter()
    for x, m in cnt.items():
        y = C(x) if dual else x
        out[J(y, k, power)] += m
    return out


def entries():
    rows = []

    k = 10
    rows.append(("A1", k, "C2", {
        "1": terms((1, [w("0"), w("6")])),
        "Lambda_1": terms((1, [w("3"), w("7")])),
        "Lambda_2": shift_all(terms((1, [w("0"), w("6")])), k),
    }))

    k = 28
    rows.append(("A1", k, "G2", {
        "1": terms((1, orbit(w("0"), k, 2)), (1, orbit((10,), k, 2))),
        "Lambda_2": terms((1, orbit(w("6"), k, 2)), (1, orbit((12,), k, 2))),
    }))

    k = 5
    r = {}
    for j in range(3):
        r[f"Lambda_{2 * j}"] = shift_all(terms((1, [w("00"), w("22")])), k, j)
        r[f"Lambda_{1 + 2 * j}"] = shift_all(terms((1, [w("02"), w("32")])), k, j)
    rows.append(("A2", k, "A5", r))

    k = 9
    rows.append(("A2", k, "E6", {
        "1": terms((1, orbit(w("00"), k, 3)), (1, orbit(w("44"), k, 3))),
        "Lambda_1": terms((1, orbit(w("22"), k, 3))),
        "Lambda_5": terms((1, orbit(w("22"), k, 3))),
    }))

    k = 21
    rows.append(("A2", k, "E7", {
        "1": terms(*[(1, orbit(w(x), k, 3)) for x in ("00", "44", "66", "(10,10)")]),
        "Lambda_6": terms((1, orbit(w("06"), k, 3, True)), (1, orbit(w("47"), k, 3, True))),
    }))

    k = 4
    base = terms((1, orbit(w("000"), k, 2)), (1, orbit(w("012"), k, 2)))
    rows.append(("A3", k, "B7", {
        "1": base,
        "Lambda_1": shift_all(base, k),
        "Lambda_7": terms((2, [w("111")])),
    }))

    k = 6
    r = {}
    for j in range(2):
        r[f"Lambda_{(5 * j) % 10}"] = shift_all(terms((1, orbit(w("000"), k, 2)), (1, orbit(w("202"), k, 2))), k, j)
        for i in range(2):
            s = (-1) ** i
            a = orbit(C(w("200")) if i else w("200"), k, 2)
            b = orbit(C(w("210")) if i else w("210"), k, 2)
            r[f"Lambda_{(5 * j + s) % 10}"] = shift_all(terms((1, a), (1, [w("212")])), k, j)
            r[f"Lambda_{(5 * j + 2 * s) % 10}"] = shift_all(terms((1, b), (1, [w("303")])), k, j)
    rows.append(("A3", k, "A9", r))

    k = 8
    rows.append(("A3", k, "D10", {
        "1": terms((1, orbit(w("000"), k, 4)), (1, orbit(w("121"), k, 4))),
        "Lambda_1": terms((1, orbit(w("020"), k, 4)), (1, orbit(w("303"), k, 4))),
        "Lambda_9": terms((1, orbit(w("113"), k, 4))),
        "Lambda_10": terms((1, orbit(w("113"), k, 4))),
    }))

    k = 3
    r = {}
    for j in range(5):
        r[f"Lambda_{(2 * j) % 10}"] = shift_all(terms((1, [w("0000"), w("0110")])), k, 2 * j)
        r[f"Lambda_{(1 + 2 * j) % 10}"] = shift_all(terms((1, [w("0010"), w("0201")])), k, 2 * j)
    rows.append(("A4", k, "A9", r))

    k = 5
    rows.append(("A4", k, "D12", {
        "1": terms((1, orbit(w("0000"), k, 5)), (1, orbit(w("0220"), k, 5))),
        "Lambda_1": terms((1, [w("1111")]), (1, orbit(w("1001"), k, 5))),
        "Lambda_11": terms((2, [w("1111")])),
        "Lambda_12": terms((2, [w("1111")])),
    }))

    k = 7
    r = {}
    alg = terms((1, [w("0000"), w("0330"), w("2002"), w("2112")]), (1, orbit(w("0403"), k, 1, True)))
    mod = terms((1, [w("2000"), w("0312"), w("1240"), w("2102"), w("3022")]))
    for j in range(5):
        r[f"Lambda_{(3 * j) % 15}"] = shift_all(alg, k, 3 * j)
        for i in range(2):
            r[f"Lambda_{(3 * j + (-1) ** i) % 15}"] = shift_all(mod, k, 3 * j, dual=bool(i))
    rows.append(("A4", k, "A14", r))
    return rows


def label_key(label):
    return -1 if label in ("1", "Lambda_0") else int(label.split("_")[1])


def build():
    out = []
    for algebra, level, target, rows in entries():
        items = []
        for label in sorted(rows, key=label_key):
            name = "1" if label == "Lambda_0" else label
            t = [{"mult": m, "weight": list(x)} for x, m in sorted(rows[label].items())]
            items.append({"ext_label": name, "terms": t})
        out.append({"algebra": algebra, "level": level, "rows": items, "target": target})
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", default=str(Path(__file__).resolve().parent.parent / "data" / "table_2_1.json"))
    args = ap.parse_args()
    path = Path(args.output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(build(), indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
