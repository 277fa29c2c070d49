"""Bordism words: write a surface as discs and tubes."""

# %%
from sl2tqft import evaluate_word, parse_word, word_to_spec
from sl2tqft.words import WordSyntaxError

# %%
w = parse_word("dt ∘ jp ∘ mi ∘ L^2 ∘ d")
print("canonical:", w)
print("surface:", word_to_spec(w).label())
print("class:", evaluate_word(w))

# %% Errors point at the offending character.
try:
    parse_word("Dt . L . X . D")
except WordSyntaxError as exc:
    print(exc)
