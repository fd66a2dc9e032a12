"""Hilbert-matrix block cipher on exact rational arithmetic.

Pedagogical cryptosystem: ciphertext columns are exact rationals, the
decryption matrix is the all-integer Hilbert inverse, and a CBC-style
chain hides repeated plaintext blocks. Includes the closed forms for
four special matrix families with exact-arithmetic oracles, Playfair and
Hill comparison ciphers with the known-plaintext attack on Hill, a toy
public-key envelope for session transport, and a binary64 instability
report. None of it is fit for protecting real data.
"""

from .classical import (
    HillKey,
    PlayfairKey,
    ecb_repeat_detector,
    hill_decrypt,
    hill_encrypt,
    hill_kpa_attack,
    playfair_decrypt,
    playfair_encrypt,
    playfair_prepare,
)
from .envelope import ToyKeypair, keypair_from_primes, toy_keygen, unwrap_session, wrap_session
from .errors import (
    AttackInconclusiveError,
    DomainError,
    FormatError,
    HilbxError,
    IntegrityError,
    PaddingError,
)
from .exactmat import (
    Matrix,
    Rational,
    mat_det_exact,
    mat_inv_exact,
    mat_mul,
    rat_canonical,
    rat_parse,
    rat_str,
)
from .hilbertcipher import (
    CiphertextMessage,
    SessionKey,
    cbc_decrypt,
    cbc_encrypt,
    chain_bytes,
    decrypt_block,
    ecb_decrypt,
    ecb_encrypt,
    encode_block,
    encrypt_block,
    keygen,
    pad_message,
    unpad_message,
)
from .specialmat import SpecialSpec, build, closed_det, closed_inv
from .stability import StabilityRow, float_invert_hilbert, stability_report

__version__ = "0.1.0"

__all__ = [
    "AttackInconclusiveError",
    "CiphertextMessage",
    "DomainError",
    "FormatError",
    "HilbxError",
    "HillKey",
    "IntegrityError",
    "Matrix",
    "PaddingError",
    "PlayfairKey",
    "Rational",
    "SessionKey",
    "SpecialSpec",
    "StabilityRow",
    "ToyKeypair",
    "build",
    "cbc_decrypt",
    "cbc_encrypt",
    "chain_bytes",
    "closed_det",
    "closed_inv",
    "decrypt_block",
    "ecb_decrypt",
    "ecb_encrypt",
    "ecb_repeat_detector",
    "encode_block",
    "encrypt_block",
    "float_invert_hilbert",
    "hill_decrypt",
    "hill_encrypt",
    "hill_kpa_attack",
    "keygen",
    "keypair_from_primes",
    "mat_det_exact",
    "mat_inv_exact",
    "mat_mul",
    "pad_message",
    "playfair_decrypt",
    "playfair_encrypt",
    "playfair_prepare",
    "rat_canonical",
    "rat_parse",
    "rat_str",
    "stability_report",
    "toy_keygen",
    "unpad_message",
    "unwrap_session",
    "wrap_session",
]
