"""
The classical baselines: Playfair and Hill
==========================================

Playfair substitutes letter digrams against a keyword grid. Hill
multiplies letter columns by a matrix mod 26 and, being linear, falls
instantly to known plaintext: stack m plaintext columns into P, their
cipher columns into C, and K = C * P^-1 mod 26.
"""

from hilbx import (
    HillKey,
    PlayfairKey,
    hill_decrypt,
    hill_encrypt,
    hill_kpa_attack,
    playfair_decrypt,
    playfair_encrypt,
)
from hilbx.classical import text_to_columns

# Playfair
key = PlayfairKey.from_keyword("monarchy")
print("playfair grid (rows of five):")
for r in range(5):
    print("  " + " ".join(key.grid[r * 5 : r * 5 + 5]))

ct = playfair_encrypt(key, "balloon")
print("\n'balloon' ->", ct)
print("back:", playfair_decrypt(key, ct), "(filler letters included)")

# Hill
hill = HillKey.from_rows([[3, 3], [2, 5]])
ct = hill_encrypt(hill, "help")
print("\nhill key [[3,3],[2,5]]: 'help' ->", ct)
print("decrypts to:", hill_decrypt(hill, ct))

# Known-plaintext recovery from that single crib
pairs = list(zip(text_to_columns("help", 2), text_to_columns(ct, 2)))
recovered = hill_kpa_attack(pairs)
print("recovered key from one four-letter crib:", recovered.mat)
assert recovered.mat == hill.mat
