"""Virtual classes of a few surfaces, computed by composing tube operators.

Run with ``python demos/01_surface_classes.py``.
"""

# %%
from sl2tqft import SurfaceSpec, closed_form, evaluate_tqft, q

# %% The torus with no marked points.
torus = evaluate_tqft(SurfaceSpec(genus=1))
print("torus:", torus)
assert torus == q**4 + 4 * q**3 - q**2 - 4 * q

# %% Genus 0 to 3, no punctures. Each value also matches the closed formula.
for g in range(4):
    spec = SurfaceSpec(g)
    value = evaluate_tqft(spec)
    print(f"g={g}: {value}    closed form agrees: {value == closed_form(spec)}")

# %% Marked points. Pairs of -Id points cancel, so only t mod 2 matters.
for t in range(4):
    print(f"torus with {t} x (-Id):", evaluate_tqft(SurfaceSpec(1, t=t)))

# %% With a Jordan point present, only genus, r and the sign (-1)^(r- + t) matter.
a = evaluate_tqft(SurfaceSpec(1, r_plus=1, r_minus=1))
b = evaluate_tqft(SurfaceSpec(1, r_plus=0, r_minus=2, t=1))
print("sign -1, r=2:", a)
print("same sign, other split:", b, "equal:", a == b)

# %% Evaluate at q = 1: the Euler characteristic of each class.
for g in range(1, 4):
    print(f"g={g} at q=1:", evaluate_tqft(SurfaceSpec(g)).eval_at(1))
