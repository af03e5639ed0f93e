"""Brute-force scoring oracle for the sample knowledge base.

Centroids come from midpoint-rule integration on a 1e-6 grid rather than
the closed form; scores are centroid * rank/4 of each link's highest level.
Run: python3 crates/core/tests/oracles/diagnose_oracle.py
"""
import numpy as np

LEVELS = ["not_true", "little_true", "half_true", "rather_true", "quite_true"]
XS = (np.arange(1_000_000) + 0.5) / 1_000_000


def mu(mf, x):
    a, b, c, d = mf
    y = np.zeros_like(x)
    y[(x >= b) & (x <= c)] = 1.0
    if b > a:
        m = (x >= a) & (x < b)
        y[m] = (x[m] - a) / (b - a)
    if d > c:
        m = (x > c) & (x <= d)
        y[m] = (d - x[m]) / (d - c)
    return y


def centroid(mf):
    y = mu(mf, XS)
    return float((XS * y).sum() / y.sum())


GUM = {
    "CutWithMenu": {"not_true": [0, 0, .1, .4], "half_true": [.2, .3, .4, .6], "quite_true": [.7, .9, .9, 1]},
    "CutWithKey": {"not_true": [0, 0, .1, .4], "half_true": [.2, .4, .4, .6], "quite_true": [.7, .9, .9, 1]},
    "EraseWithMenu": {"not_true": [0, 0, .1, .4], "half_true": [.2, .4, .4, .6], "quite_true": [.4, .9, .9, 1]},
}
RUB = {
    "CutWithMenu": {"not_true": [0, .1, .1, .4], "half_true": [.2, .4, .4, .6], "quite_true": [.7, .8, .9, 1]},
    "CutWithKey": {"not_true": [0, .2, .3, .4], "half_true": [.2, .3, .5, .6], "quite_true": [.6, .7, .9, 1]},
    "EraseWithMenu": {"not_true": [0, 0, .2, .4], "half_true": [.2, .4, .4, .6], "rather_true": [.7, .9, .9, 1]},
}


def rank(term):
    out = []
    for p, prof in term.items():
        top = max(prof, key=LEVELS.index)
        out.append((p, centroid(prof[top]) * LEVELS.index(top) / 4, top))
    return sorted(out, key=lambda t: (-t[1], t[0]))


def sim(g, h):
    inter, union = [], []
    for p in g:
        if p not in h:
            continue
        shared = [l for l in g[p] if l in h[p]]
        cg = [centroid(g[p][l]) for l in shared]
        ch = [centroid(h[p][l]) for l in shared]
        inter.append(sum(map(min, cg, ch)) / len(shared))
        union.append(sum(map(max, cg, ch)) / len(shared))
    return max(inter) / max(union)


for name, term in [("to-gum", GUM), ("to-rub", RUB)]:
    for p, s, lvl in rank(term):
        print(f"{name} {p:<14} {s:.6f} {lvl}")
print(f"sim(gum,rub) {sim(GUM, RUB):.6f}")
