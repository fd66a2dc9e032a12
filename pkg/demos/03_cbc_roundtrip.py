"""
Encrypting with exact rational cipher blocks
============================================

A session key holds the secret order n, the public block size m, an
(n-m)-byte secret pad, and an m-byte chain seed. Each block becomes an
n-entry column of exact fractions; chaining XORs every plaintext block
with a digest of the previous cipher block so repeats disappear.
"""

import random

from hilbx import cbc_decrypt, cbc_encrypt, ecb_encrypt, ecb_repeat_detector, keygen
from hilbx.exactmat import rat_str
from hilbx.hilbertcipher import key_to_text

rng = random.Random(2024)
key = keygen(m=4, rng=rng)
print("session key (keep all of it secret except m):")
print(key_to_text(key))

message = b"the same twelve bytes -- the same twelve bytes -- again!"
ct = cbc_encrypt(key, message)
print(f"{len(ct.blocks)} cipher blocks of {key.n} exact rationals each; block 1:")
print("  " + " ".join(rat_str(e) for e in ct.blocks[0]))

back = cbc_decrypt(key, ct)
print("\ndecrypted bit-perfectly:", back == message)

# Repeats: a block encrypted twice collides without chaining, never with.
repeated = bytes([1, 2, 3, 4]) * 6
plain_mode = ecb_encrypt(key, repeated)
chained = cbc_encrypt(key, repeated)
print("\nsix identical plaintext blocks:")
print("  collisions without chaining:", len(ecb_repeat_detector(plain_mode.blocks)))
print("  collisions with chaining:   ", len(ecb_repeat_detector(chained.blocks)))

# The block count leaks n (each block has n entries), so "n is secret"
# only holds against someone who never sees a ciphertext. Known flaw.
print("\nentries per block visible to an eavesdropper:", len(ct.blocks[0]))
