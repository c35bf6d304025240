# The Hermitian unital over GF(q^2) and its secant-line incidence graph F.
import numpy as np

from unitalblocks.field import build_field, hermitian_norm
from unitalblocks.unital import build_incidence, classify_lines, hermitian_points, verify_unital

# GF(4): elements 0, 1, w, w+1 are stored as 0, 1, 2, 3 and w^2 = w + 1
ctx = build_field(2)
w = ctx.w
print("w*w =", ctx.describe(int(ctx.mul[w, w])))
print("norm of w =", hermitian_norm(w, ctx))  # w^3 = 1

# points of x^3 + y^3 + z^3 = 0 in PG(2, 4), first nonzero coordinate scaled to 1
pts = hermitian_points(ctx)
print(len(pts), "points, e.g.", [tuple(p) for p in pts[:3].tolist()])

# each of the 21 lines meets the curve in 1 point (tangent) or q + 1 = 3 points (secant)
lines, meets = classify_lines(ctx, pts)
vals, cnt = np.unique(meets, return_counts=True)
print("meet counts:", dict(zip(vals.tolist(), cnt.tolist())))

# F joins each secant line to the unital points on it
for q in (2, 3, 5):
    F = build_incidence(q)
    print(f"q={q}: |X|={F.x_count} |Y|={F.y_count} e(F)={F.edge_count}")

# sizes, degrees, C4-freeness and the absence of an O'Nan configuration
rep = verify_unital(build_incidence(3))
print({k: rep[k] for k in ("sizes", "degrees", "c4_free", "onan_mode", "onan_status", "passed")})
