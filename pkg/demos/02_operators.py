"""The eight-dimensional core module and its operators."""

# %%
from sl2tqft import Basis, operators, verify_operator_identities
from sl2tqft.operators import check_anchors

ops = operators()

# %% The reduced J+ tube, column j being the image of basis vector j.
print(ops.cz_jp.render())

# %% eta and its inverse.
print(ops.eta.render())
print(ops.eta_inv.render())
print("entry (TB, TB) of eta^-1:", ops.eta_inv[Basis.TB, Basis.TB])

# %% All identities between the operators, then the anchor entries.
for line in verify_operator_identities(ops).lines():
    print(line)
for line in check_anchors(ops).lines():
    print(line)

# %% Break one tube on purpose and see which identities notice.
from sl2tqft import OperatorSet

broken = OperatorSet.from_tables(cz_jp=ops.cz_jp.transpose())
for check in verify_operator_identities(broken).failures():
    print("FAIL", check.name, "-", check.detail)
