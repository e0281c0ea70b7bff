# %% [markdown]
# # Decoding over a burst channel
#
# The decoder walks the pattern stream and stops at the first guess that
# turns the received word into a codeword.

# %%
from burstgrand.channel import GilbertParams
from burstgrand.decoder import GrandDecoder, hamming74, random_linear_code
from burstgrand.patterns import render
from burstgrand.sim import ExperimentConfig, run_experiment

p = GilbertParams(b=0.02, g=0.25)
code = random_linear_code(24, 14, seed=7)
dec = GrandDecoder(code, p)

msg = 0b10110011100011
sent = code.encode(msg)
noise = 0b000000111100000000000000
r = dec.decode(sent ^ noise)
print("sent    ", render(sent, 24))
print("noise   ", render(noise, 24))
print("guess   ", render(r.noise, 24), f"after {r.queries} queries")
print("message ok:", r.message == msg)

# %% [markdown]
# A small packet-error sweep. Results depend only on the seed, not on the
# number of worker processes.

# %%
cfg = ExperimentConfig(code, points=[(0.01, 0.3), (0.02, 0.25), (0.05, 0.2)], trials=300, seed=3)
print(run_experiment(cfg).to_csv())

# %%
cfg = ExperimentConfig(hamming74(), points=[(0.05, 0.3)], trials=300, seed=3, max_ones=None)
print(run_experiment(cfg).to_json())
