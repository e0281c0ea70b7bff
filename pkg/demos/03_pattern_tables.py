# %% [markdown]
# # The first 150 guesses for a length-20 code
#
# Columns run in guessing order, rows are bit positions, a dot marks a
# flipped bit. `delta_l` keeps only classes with at most that many "extra"
# ones beyond one per burst; `delta_l = 0` therefore guesses isolated flips
# only, while `delta_l = 3` admits short bursts.

# %%
from burstgrand.channel import GilbertParams
from burstgrand.sim import emit_pattern_table

p = GilbertParams(b=0.05, g=0.3)
for delta_l in (0, 3):
    print(f"delta_l = {delta_l}")
    print(emit_pattern_table(20, p, 150, fmt="text", delta_l=delta_l))

# %%
print(emit_pattern_table(20, p, 8, fmt="csv"))
