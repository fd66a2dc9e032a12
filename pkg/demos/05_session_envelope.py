"""
Shipping the session key in a toy envelope
==========================================

The symmetric parameters (n, m, pad, chain seed) travel under the
receiver's public key: serialize, length-prefix, cut into chunks below
the modulus, and raise each to the public exponent. Unpadded textbook
exponentiation like this is deterministic and malleable; it exists here
to show the dataflow, not to be secure.
"""

import random

from hilbx import keygen, keypair_from_primes, toy_keygen, unwrap_session, wrap_session

# The classic classroom numbers: p=61, q=53, e=17.
pair = keypair_from_primes(61, 53, 17)
print(f"toy keypair: N={pair.modulus}, e={pair.e}, d={pair.d}")

session = keygen(m=2, rng=random.Random(7))
wrapped = wrap_session(pair, session)
print(f"\nsession key wrapped into {len(wrapped)} chunks, first ten:")
print("  " + " ".join(str(c) for c in wrapped[:10]))

back = unwrap_session(pair, wrapped)
print("\nunwrapped equals the original:", back == session)

# A realistic-size (for this demo) keypair wraps the same way.
big = toy_keygen(64, rng=random.Random(8))
wrapped = wrap_session(big, session)
print(f"\n64-bit modulus needs only {len(wrapped)} chunks")
assert unwrap_session(big, wrapped) == session
