"""Search arborescent slot-sequence builds for the two six-box templates."""
import os, sys
os.environ.setdefault("KNOTCT_CROSSING_BUDGET", "80")
from fractions import Fraction as F
from itertools import product, permutations
from knotct.diagram import Builder, is_alternating
from knotct.diagram.construct import _finish
from knotct.oracle import (jones_via_kauffman, a2_w3_from_jones,
                           seifert_pipeline, oracle_signature)
from knotct.errors import NotAKnot

def build(slots, closure):
    """slots: list of (attach 'r'|'b', axis 'h'|'v', signed count)."""
    b = Builder()
    t = b.zero_tangle()
    for attach, axis, m in slots:
        box = b.hbox(m) if axis == "h" else b.vbox(m)
        t = b.hjoin(t, box) if attach == "r" else b.stack(t, box)
    (b.numerator_close if closure == "n" else b.denominator_close)(t)
    return _finish(b)

def profile(d):
    sd = seifert_pipeline(d)
    a2, w3 = a2_w3_from_jones(jones_via_kauffman(d))
    return a2, w3, oracle_signature(sd), sd.surface_genus

def search(sizes_multiset, n_target, want, sign_patterns):
    hits = []
    seen_orders = set()
    for order in permutations(sizes_multiset):
        if order in seen_orders: continue
        seen_orders.add(order)
        for attach in product("rb", repeat=len(order)):
            for axes in product("hv", repeat=len(order)):
                # axis irrelevant for single crossings: canonicalize to 'h'
                if any(s == 1 and ax == "v" for s, ax in zip(order, axes)):
                    continue
                for signs in sign_patterns:
                    slots = [(at, ax, sg * s) for s, at, ax, sg in zip(order, attach, axes, signs)]
                    for cl in "nd":
                        try:
                            d = build(slots, cl)
                        except NotAKnot:
                            continue
                        if d.n != n_target or not d.is_reduced() or not is_alternating(d):
                            continue
                        a2, w3, sig, g = profile(d)
                        if (a2, abs(w3), sig, g) == want:
                            hits.append((slots, cl, w3))
                            print("HIT", slots, cl, "w3", w3, flush=True)
    return hits

if __name__ == "__main__":
    which = sys.argv[1]
    if which == "left":
        # base 6_3: a2=1, w3=0, sigma=0, genus 2
        search((1,) * 6, 6, (1, F(0), 0, 2), [(1,) * 6])
    else:
        # base 9_41: a2=0, |w3|=1/2, sigma=0, genus 2
        search((2, 2, 2, 1, 1, 1), 9, (0, F(1, 2), 0, 2), [(1,) * 6])
