"""Counting points over F_p and comparing with the virtual class at q = p."""

# %%
from sl2tqft import SurfaceSpec, evaluate_tqft
from sl2tqft.oracle import build_group, count_solutions, cross_check

# %% SL(2, F_p) is small enough to enumerate.
for p in (3, 5, 7, 13):
    print(p, build_group(p).order)

# %% At p = 5 every spec up to genus 2 and two marked points agrees.
specs = [SurfaceSpec(g, a, b, c) for g in range(3) for a in range(3) for b in range(3) for c in range(3)
         if a + b + c <= 2]
print("p=5 agree:", all(cross_check(s, 5).passed for s in specs))

# %% At p = 3 some specs do not: the count is a quasi-polynomial that only
# follows the class when q = 1 mod 4.
for s in specs:
    c = cross_check(s, 3)
    if not c.passed:
        print(f"p=3 {s.label()}: count {c.count}, class at 3 = {c.polynomial_value}")

# %% The same spec at p = 13, which is 1 mod 4.
s = SurfaceSpec(1, r_minus=1)
print(count_solutions(s, 13), evaluate_tqft(s).eval_at(13))
