# %% [markdown]
# # Pattern classes and their probabilities on a Gilbert channel
#
# Every length-`n` word falls into exactly one class, fixed by its number of
# one-bursts `m`, number of ones `l_m` and whether it starts/ends with a one.
# All words in a class are equally likely.

# %%
import math

from burstgrand.channel import GilbertParams, class_probability, sequence_probability, stationary_flip_prob
from burstgrand.patterns import (
    Case, Orientation, PatternClass, assemble, class_size, classify, feasible_classes, render,
)

p = GilbertParams(b=0.05, g=0.3)
print(f"flip rate {stationary_flip_prob(p):.4f}, correlation {p.correlation:.2f}")

x = assemble((2, 1), (2, 1), Case.TWO, Orientation.STARTS_WITH_ONE)
c = classify(x, 6)
print(render(x, 6), "->", c.pattern_class, c.one_parts, c.zero_parts, c.orientation)

# %% [markdown]
# Same burst statistics, three start/end cases: patterns that touch the word
# edges are more likely on a positively correlated channel.

# %%
for case in Case:
    cls = PatternClass(case, (2, 4), 12)
    print(f"{cls}: size {class_size(cls):3d}, log p = {class_probability(cls, p):.4f}")

# %%
n = 10
mass = sum(class_size(cls) * math.exp(class_probability(cls, p))
           for cls in feasible_classes(n))
check = math.fsum(math.exp(sequence_probability(w, n, p)) for w in range(2 ** n))
print(f"total mass over classes {mass:.15f}, over all words {check:.15f}")
