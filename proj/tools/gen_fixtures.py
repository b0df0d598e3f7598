#!/usr/bin/env python3
"""Write the published level, candidate and survivor tables as golden JSON fixtures under tests/fixtures."""

import argparse
import json
import re
from fractions import Fraction
from pathlib import Path

from gen_catalog import C, J

RANK = {"A1": 1, "A2": 2, "A3": 3, "A4": 4}
F_G = {"A1": 2, "A2": 1, "A3": 2, "A4": 1}

# (first, last) per increment column 1, 2, 6/f, 30/f, 210/f
STEP1 = {
    "A1": [(1, 1), None, (4, 10), (13, 28), None],
    "A2": [(1, 1), (3, 9), (15, 33), (57, 57), (207, 207)],
    "A3": [(1, 26), None, (29, 95), (101, 206), (311, 521)],
    "A4": [(1, 15), (17, 55), (61, 193), (205, 415), (625, 1045)],
}
STEP1_TOTAL = {"A1": 6, "A2": 11, "A3": 60, "A4": 69}

STEP2 = {
    "A1": ([10, 28], [10, 28]),
    "A2": ([5, 9, 21, 57], [5, 9, 21]),
    "A3": ([4, 6, 8, 10, 11, 12, 14, 16, 18, 20, 26, 32, 38, 86], [4, 6, 8]),
    "A4": ([3, 5, 7, 9, 10, 11, 13, 15, 17, 19, 21, 23, 25, 31, 35, 37, 43, 49, 55, 85, 115], [3, 5, 7]),
}

# candidates as orbit groups "<reps>_tag"; tag "" means singletons, digits give the current subgroup order, c adds duality
CANDIDATES = [
    ("A1", 10, "1,(6)", "(1)", "1+(6)"),
    ("A1", 28, "<1,(10)>_2", "(2);(3);(1)", "<1,(10)>_2"),
    ("A2", 5, "1,(22)", "(01)", "1+(22)"),
    ("A2", 9, "<1,(44)>_3", "(03);(01)", "<1,(44)>_3"),
    ("A2", 21, "<1,(44),(66),(aa)>_3", "(03);(11);(22);(12)", "<1,(44),(66),(aa)>_3"),
    ("A2", 57, "<1,(aa),(ii),(ss)>_3", "(14)", ""),
    ("A3", 4, "<1>_2;<(012)>_c", "(002)", "<1,(012)>_2"),
    ("A3", 6, "<1,(202)>_2", "(020);(011);(001)", "<1,(202)>_2"),
    ("A3", 8, "<1,(121)>_4", "", "<1,(121)>_4"),
    ("A3", 10, "<1,(404)>_2;<(016)>_2c", "(010)", ""),
    ("A3", 11, "1;<(206)>_c", "(002)", ""),
    ("A3", 12, "<1>_2;<(052)>_c", "(002)", ""),
    ("A3", 14, "<1,(303),(606)>_2;<(440),(c00)>_2c", "(030)", ""),
    ("A3", 16, "<1,(161)>_4", "(012)", ""),
    ("A3", 18, "<1,(808)>_2;<(226)>_2c", "(012)", ""),
    ("A3", 20, "<1,(290)>_2;<(109)>_2c", "(006)", ""),
    ("A3", 26, "<1,(323),(727),(c0c)>_2;<(00k),(81a)>_2c", "(01G)", ""),
    ("A3", 32, "<1,(909)>_4", "(020)", ""),
    ("A3", 38, "<1,(i0i)>_2;<(036),(30z)>_2c", "(018)", ""),
    ("A3", 86, "<1,(f0f),(r0r),(42 0 42)>_2", "(050)", ""),
    ("A4", 3, "1,(0110)", "(0001)", "1+(0110)"),
    ("A4", 5, "<1,(0220)>_5", "(0021);(0001)", "<1,(0220)>_5"),
    ("A4", 7, "1,(0330),(2002),(2112);<(0160),(0403),(1014)>_c", "", "1+(0330)+(2002)+(2112)+(0403)+(3040)"),
    ("A4", 9, "1,(0440);<(0026)>_c", "(0011)", ""),
    ("A4", 10, "<1,(2332)>_5", "(0005)", ""),
    ("A4", 11, "1,(0550),(4004),(4114);<(0380),(1226),(1404),(3016)>_c", "3(0010)+(1314);(0401)", ""),
    ("A4", 13, "1,(0660);<(0034),(0047),(010c),(0262),(0490),(0607),(1218),(3163)>_c", "(0413);(01a0)", ""),
    ("A4", 15, "<1,(0770),(6006),(6116)>_5;<(1022),(3105)>_5c", "(0149)", ""),
    ("A4", 17, "1,(0880);<(0652),(3626)>_c", "(0001)", ""),
    ("A4", 19, "1,(0990),(2662),(4114),(4444),(8008),(8118);<(07c0),(2484),(4266),(701a)>_c", "(0303);(1118)", ""),
    ("A4", 21, "1,(0aa0);<(2264),(3406)>_c", "(0007)", ""),
    ("A4", 23, "1,(0bb0),(a00a),(a11a);<(09e0),(16d2),(2146),(2366),(2816),(8236),(901c)>_c", "(1212)", ""),
    ("A4", 25, "<1,(0cc0),(2332),(2772)>_5;<(0505),(0607),(1006),(1077),(1161),(1365)>_5c", "(0055)+(3082);(0055)", ""),
    ("A4", 31, "1,(0ff0),(e00e),(e11e),(0cc0),(8338),(8448);"
               "<(00f0),(06ac),(0G0c),(37G5),(4h45),(604i),(635c),(364c)>_c", "(4505);(004b)", ""),
    ("A4", 35, "<1,(0hh0),(G00G),(G11G)>_5;<(000f),(10f1)>_5c", "(0107)", ""),
    ("A4", 37, "1,(0ii0);<(00aa),(00z0),(030G),(04GG),(080b),(090s),(0GL0)>_c;"
               "<(0n14),(1899),(262f),(274i),(453i),(637i),(71cf),(745a),(b02c)>_c", "2(016L)+(01w2)", ""),
    ("A4", 43, "1,(0LL0),(8008),(8dd8),(c00c),(c99c),(k00k),(k11k)", "(0909)", ""),
    ("A4", 49, "1,(0oo0);<(05pA),(14fJ),(3817),(4co5),(632s)>_c", "(001d)", ""),
    ("A4", 55, "<1,(0rr0),(8118),(8ii8),(g11g),(gaag),(q00q),(q11q)>_5;<(000p),(006d),(10p1),(16d7)>_5c", "(0b07)", ""),
    ("A4", 85, "<1,(0 42 42 0)>_5;<(0ccA)>_5c", "(0005)", ""),
    ("A4", 115, "<1,(0 57 57 0),(k00k),(k 37 37 k),(36 0 0 36),(36 LL 36),(56 0 0 56),(56 1 1 56)>_5", "(0 5 0 60)", ""),
]

# transcription corrections applied in the tables above
CANDIDATE_FIXES = {("A4", 23): [{"printed": "(2836)", "used": "(8236)"}]}
SURVIVOR_FIXES = {
    ("A3", 4): [{"printed": "<1,(012)>_4", "used": "<1,(012)>_2"}],
    ("A4", 7): [{"printed": "(0007),(1033),(0023),(1121),(0040)>_c", "used": "<(0007),(1033),(0023),(1121),(0040),(0304)>_c"},
                {"printed": "<(0070),(0103),(0232),(1212),(0030)>_c", "used": "<(0070),(0103),(0232),(1212),(0030),(3004)>_c"}],
}

# groups as (theta exponent, value, orbit text); theta = exp(2 pi i * exponent)
SURVIVORS = [
    ("A1", 10, [("0", .5, "1,(6)"), ("1/2", .5, "(4),(10)"), ("5/16", .707, "(3),(7)")]),
    ("A1", 28, [("0", .525, "<1,(10)>_2"), ("2/5", .850, "<(6),(12)>_2")]),
    ("A2", 5, [("0", .408, "1,(22)"), ("5/12", .408, "<(02),(23)>_c"), ("2/3", .408, "<(05),(12)>_c"),
               ("3/4", .408, "<(03)>_c")]),
    ("A2", 9, [("0", .577, "<1,(44)>_3"), ("2/3", 1.154, "<(22)>_3")]),
    ("A2", 21, [("0", .707, "<1,(44),(66),(aa)>_3"), ("3/4", .707, "<(06),(47)>_3c")]),
    ("A3", 4, [("0", .5, "<1,(012)>_2"), ("1/2", .5, "<(004),(101)>_2"), ("15/16", 1.414, "(111)")]),
    ("A3", 6, [("0", .316, "<1,(202)>_2"),
               ("9/20", .316, "<(002)>_2c"), ("9/20", .632, "(212)"),
               ("4/5", .316, "<(012)>_2c"), ("4/5", .632, "(303)"),
               ("1/20", .316, "<(123)>_2c"), ("1/20", .632, "(030)"),
               ("1/5", .316, "<(004)>_2c"), ("1/5", .632, "(121)"),
               ("1/4", .316, "<(006),(022)>_2")]),
    ("A3", 8, [("0", .5, "<1,(121)>_4"), ("1/2", .5, "<(020),(303)>_4"), ("1/4", 1.0, "<(113)>_4")]),
    ("A4", 3, [("0", .316, "1,(0110)"), ("9/20", .316, "<(0010),(0201)>_c"), ("4/5", .316, "<(0030),(0101)>_c"),
               ("1/20", .316, "<(0020),(1002)>_c"), ("1/5", .316, "<(0003),(1011)>_c"),
               ("1/4", .316, "<(0102)>_c")]),
    ("A4", 5, [("0", .5, "<1,(0220)>_5"), ("1/2", .5, "<(1001)>_5"), ("1/2", 2.5, "(1111)")]),
    ("A4", 7, [("0", .258, "1,(0330),(2002),(2112);<(0403)>_c"),
               ("4/5", .258, "<(0007),(1033),(0023),(1121),(0040),(0304)>_c"),
               ("1/5", .258, "<(0070),(0103),(0232),(1212),(0030),(3004)>_c"),
               ("2/3", .258, "<(0005),(1213),(0042),(1022)>_c"), ("2/3", .516, "(0220)"),
               ("7/15", .258, "<(0002),(0052),(0312),(0121),(0421),(1004),(2012),(0222)>_c"),
               ("7/15", .516, "<(2203)>_c"),
               ("13/15", .258, "<(0250),(0025),(2103),(1031),(0012),(0124),(1222),(0122)>_c"),
               ("13/15", .516, "<(0302)>_c")]),
]


def weight(text, rank):
    if text.strip() == "1":
        return (0,) * rank
    body = text.strip().strip("()").strip()
    tokens = [t for t in re.split(r"[ ,]+", body) if t]
    if len(tokens) == 1 and len(tokens[0]) == rank and rank > 1:
        return tuple(int(c, 36) for c in tokens[0])
    out = []
    for t in tokens:
        if t.isdigit():
            out.append(int(t))
        else:
            out.extend(int(c, 36) for c in t)
    if len(out) != rank:
        raise ValueError(f"bad weight {text!r} for rank {rank}")
    return tuple(out)


def split_top(text):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "<(":
            depth += 1
        elif ch in ">)":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def parse_groups(text, rank):
    """'<1,(44)>_3;(22)' -> [(reps, d, dual)]"""
    groups = []
    for chunk in [c for c in text.split(";") if c.strip()]:
        chunk = chunk.strip()
        m = re.fullmatch(r"<(.*)>_(\d*)(c?)", chunk)
        if m:
            reps = [weight(x, rank) for x in split_top(m.group(1))]
            groups.append((reps, int(m.group(2) or 1), m.group(3) == "c"))
        else:
            groups.append(([weight(x, rank) for x in split_top(chunk)], 1, False))
    return groups


def orbit(lam, k, d, dual):
    step = (len(lam) + 1) // d
    out = set()
    for j in range(d):
        w = J(lam, k, j * step)
        out.add(w)
        if dual:
            for i in range(d):
                out.add(J(C(w), k, i * step))
    return out


def expand(text, rank, k):
    out = set()
    for reps, d, dual in parse_groups(text, rank):
        for r in reps:
            out |= orbit(r, k, d, dual)
    return sorted(out)


def orbit_reps(text, rank, k):
    return [{"dual": dual, "d": d, "reps": [list(r) for r in reps]} for reps, d, dual in parse_groups(text, rank)]


def step1_levels(alg):
    f = F_G[alg]
    deltas = [1, 2, 6 // f, 30 // f, 210 // f]
    out = []
    for span, delta in zip(STEP1[alg], deltas):
        if span:
            out.extend(range(span[0], span[1] + 1, delta))
    return out


def build_step1():
    out = {}
    for alg in RANK:
        levels = step1_levels(alg)
        assert len(levels) == STEP1_TOTAL[alg], alg
        out[alg] = {"levels": levels, "max": max(levels), "total": len(levels)}
    return out


def build_step2():
    return {alg: {"levels": s, "exotic": e, "total": len(s)} for alg, (s, e) in STEP2.items()}


def build_candidates():
    rows = []
    for alg, k, cand, probes, exotic in CANDIDATES:
        rank = RANK[alg]
        rows.append({
            "algebra": alg,
            "level": k,
            "orbits": orbit_reps(cand, rank, k),
            "candidates": [list(w) for w in expand(cand, rank, k)],
            "probes": probes,
            "exotic": exotic,
            "corrections": CANDIDATE_FIXES.get((alg, k), []),
        })
    return rows


def build_survivors():
    rows = []
    for alg, k, groups in SURVIVORS:
        rank = RANK[alg]
        items = []
        for theta, value, text in groups:
            t = Fraction(theta)
            items.append({
                "theta": [t.numerator, t.denominator],
                "value": value,
                "weights": [list(w) for w in expand(text, rank, k)],
            })
        fixes = SURVIVOR_FIXES.get((alg, k), [])
        rows.append({"algebra": alg, "level": k, "groups": items, "corrections": fixes})
    return rows


def main():
    here = Path(__file__).resolve().parent
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--outdir", default=str(here.parent / "tests" / "fixtures"))
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "step1_levels.json": build_step1(),
        "step2_levels.json": build_step2(),
        "candidates.json": build_candidates(),
        "survivors.json": build_survivors(),
    }
    for name, data in files.items():
        (out / name).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
