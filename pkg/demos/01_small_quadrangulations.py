# %% [markdown]
# # Small quadrangulations
# Every quadrangulation of the sphere on n vertices is the vertex-face map
# of a plane multigraph with n - 2 edges. We grow those multigraphs, take
# their radial maps and look at what comes out.

# %%
import numpy as np

from muqgen import PlaneMap, emit_rotsys, enumerate_muqs, enumerate_plane_multigraphs, radial_graph
from muqgen.fixtures import C4, P2, Q3, Q4

# %% A map is one permutation: sigma[d] is the next dart counterclockwise.
k2 = PlaneMap([0, 1])          # a single edge
print(k2, "->", radial_graph(k2))

# %% Plane multigraphs with up to 4 edges
for k in range(5):
    print(k, sum(1 for _ in enumerate_plane_multigraphs(k)))

# %% Quadrangulations of order 3 and 4, printed as rotation systems
print(emit_rotsys(enumerate_muqs(4)))

# %% Degree statistics per order
for n in range(3, 9):
    degs = [q.degrees for q in enumerate_muqs(n)]
    mins = np.bincount([int(d.min()) for d in degs], minlength=4)[1:]
    print(f"n={n:2d} maps={len(degs):4d} min-degree 1/2/3: {mins.tolist()}")

# %% The named order-4 maps
for name, m in [("P2", P2()), ("C4", C4()), ("Q3", Q3()), ("Q4", Q4())]:
    print(name, m.degrees.tolist(), "parallel" if m.has_parallel_edges() else "-")
