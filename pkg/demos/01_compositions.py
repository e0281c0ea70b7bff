# %% [markdown]
# # Burst-length compositions in H-grid order
#
# A noise pattern with `m` bursts of ones holding `l_m` ones in total is
# described by the list of burst lengths. Successive addition-subtraction
# starts from `{l_m - m + 1, 1, ..., 1}` and repeatedly moves units from the
# first burst into the trailing unit bursts.

# %%
from collections import defaultdict

from burstgrand.compositions import count_compositions, expand, generate_grid, initial_composition

combo = (4, 8)
print("initial:", initial_composition(combo))
print("one add-subtract step:")
for child, pos in expand(initial_composition(combo))[:6]:
    print("   ", child, "-> cell", tuple(pos))

# %% [markdown]
# Group the full enumeration by grid cell. Column `h` holds every
# composition whose first burst is `h` shorter than the initial one.

# %%
cells = defaultdict(list)
for parts, pos in generate_grid(combo):
    cells[pos].append(parts)
for pos in sorted(cells, key=lambda p: (p.column, p.row)):
    print(f"row {pos.row} col {pos.column}: {cells[pos]}")
print("total:", sum(map(len, cells.values())), "== C(7, 3) =", count_compositions(combo))
