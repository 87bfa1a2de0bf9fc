"""Search octahedral six-box wirings for the right-side template base."""
import os
os.environ.setdefault("KNOTCT_CROSSING_BUDGET", "80")
from fractions import Fraction as F
from itertools import combinations, product
from knotct.diagram import Builder, is_alternating
from knotct.diagram.construct import _finish
from knotct.oracle import jones_via_kauffman, a2_w3_from_jones, seifert_pipeline, oracle_signature
from knotct.errors import NotAKnot

# vertices: 0,1,2 = inner triangle; 3,4,5 = outer triangle (v_k = 3+k)
def rotations(v_orient):
    rot = {}
    for k in range(3):
        rot[k] = (3 + k, (k + 1) % 3, (k - 1) % 3, 3 + (k - 1) % 3)
        r = (k, (k + 1) % 3, 3 + (k + 1) % 3, 3 + (k - 1) % 3)
        rot[3 + k] = r if v_orient else tuple(reversed(r))
    return rot

LEADS = ("NE", "NW", "SW", "SE")  # counterclockwise around a box

def build(counts, offsets, v_orient):
    rot = rotations(v_orient)
    b = Builder()
    tangles = [b.hbox(m) for m in counts]
    done = set()
    for a in range(6):
        for idx, nb in enumerate(rot[a]):
            if (nb, a) in done or (a, nb) in done:
                continue
            la = tangles[a][LEADS[(offsets[a] + idx) % 4]]
            jdx = rot[nb].index(a)
            lb = tangles[nb][LEADS[(offsets[nb] + jdx) % 4]]
            b.solder(la, lb)
            done.add((a, nb))
    return _finish(b)

def main():
    hits = []
    for v_orient in (True, False):
        # Euler check with trivial boxes
        try:
            d = build([1]*6, [0]*6, v_orient)
        except NotAKnot:
            d = None
        if d is not None and len(d.faces()) != d.n + 2:
            continue
        print("v_orient", v_orient, "planar ok")
        for doubles in combinations(range(6), 3):
            for signs in product((1, -1), repeat=6):
                if signs[0] != 1:
                    continue  # global mirror symmetry
                counts = [signs[i] * (2 if i in doubles else 1) for i in range(6)]
                for offsets in product((0, 1), repeat=6):
                    try:
                        d = build(counts, offsets, v_orient)
                    except NotAKnot:
                        continue
                    if d.n != 9 or not d.is_reduced() or not is_alternating(d):
                        continue
                    if len(d.faces()) != d.n + 2:
                        continue
                    sd = seifert_pipeline(d)
                    if sd.surface_genus != 2 or oracle_signature(sd) != 0:
                        continue
                    a2, w3 = a2_w3_from_jones(jones_via_kauffman(d))
                    if a2 == 0 and abs(w3) == F(1, 2):
                        hits.append((doubles, signs, offsets, v_orient, w3))
                        print("HIT", doubles, signs, offsets, v_orient, "w3", w3, flush=True)
    print("hits:", len(hits))

if __name__ == "__main__":
    main()
