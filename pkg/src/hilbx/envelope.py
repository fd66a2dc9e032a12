"""Toy public-key envelope for shipping session parameters.

Textbook modular exponentiation with no padding scheme whatsoever: a
keypair is (N = p*q, e, d) with e*d = 1 mod lcm(p-1, q-1), and a chunk c
travels as c**e mod N. That construction is famously malleable and
deterministic, which is fine here because the whole point is to realize
the dataflow (wrap the symmetric session key under the receiver's public
key) at desk scale. Never use this for real key transport.

The wrapped payload is the canonical session-key text, length-prefixed
and cut into chunks strictly below the modulus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .errors import DomainError, FormatError
from .hilbertcipher import SessionKey, key_from_text, key_to_text
from .primes import is_probable_prime

ENV_MAGIC = "HILBXENV1"
PUB_MAGIC = "HILBXPUB1"
PRV_MAGIC = "HILBXPRV1"

_LEN_PREFIX = 4  # payload length, big endian


@dataclass(frozen=True)
class ToyKeypair:
    """Modulus with one or both exponents (a stored half key drops one)."""

    modulus: int
    e: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.modulus < 256:
            raise DomainError("modulus too small to carry even one byte per chunk")
        if self.e is None and self.d is None:
            raise DomainError("keypair needs at least one exponent")


def keypair_from_primes(p: int, q: int, e: int) -> ToyKeypair:
    """Deterministic keypair from chosen primes, for fixed test vectors.

    d is the inverse of e modulo (p-1)(q-1), the classic textbook choice;
    it also satisfies e*d = 1 mod lcm(p-1, q-1), which is all decryption
    needs.
    """
    if p == q:
        raise DomainError("primes must differ")
    for v in (p, q):
        if not is_probable_prime(v):
            raise DomainError(f"{v} is not prime")
    lam = (p - 1) * (q - 1) // gcd(p - 1, q - 1)
    if gcd(e, lam) != 1:
        raise DomainError(f"e={e} shares a factor with lcm(p-1, q-1)={lam}")
    d = pow(e, -1, (p - 1) * (q - 1))
    return ToyKeypair(modulus=p * q, e=e, d=d)


def toy_keygen(bit_size: int, rng=None) -> ToyKeypair:
    """Random keypair with a modulus of roughly bit_size bits.

    Sizes below 16 bits cannot hold a chunk, hence the floor. An exponent
    clash with lcm(p-1, q-1) just regenerates the primes.
    """
    if bit_size < 16:
        raise DomainError("bit_size must be at least 16")
    if rng is None:
        rng = random.SystemRandom()
    half = bit_size // 2
    e = 65537
    while True:
        p = _random_prime(half, rng)
        q = _random_prime(bit_size - half, rng)
        if p == q:
            continue
        lam = (p - 1) * (q - 1) // gcd(p - 1, q - 1)
        if gcd(e, lam) != 1:
            continue
        return ToyKeypair(modulus=p * q, e=e, d=pow(e, -1, (p - 1) * (q - 1)))


def _random_prime(bits: int, rng) -> int:
    while True:
        candidate = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if is_probable_prime(candidate):
            return candidate


def _chunk_len(modulus: int) -> int:
    # largest width with 256**width <= modulus, so chunks stay below it
    return (modulus.bit_length() - 1) // 8


def encrypt_chunk(key: ToyKeypair, value: int) -> int:
    if key.e is None:
        raise DomainError("public exponent missing from this key")
    if not 0 <= value < key.modulus:
        raise DomainError("chunk out of range for this modulus")
    return pow(value, key.e, key.modulus)


def decrypt_chunk(key: ToyKeypair, value: int) -> int:
    if key.d is None:
        raise DomainError("private exponent missing from this key")
    if not 0 <= value < key.modulus:
        raise DomainError("chunk out of range for this modulus")
    return pow(value, key.d, key.modulus)


def wrap_session(pub: ToyKeypair, key: SessionKey) -> list:
    """Encrypt the session key under the receiver's public key.

    Returns the chunk integers, every one strictly below the modulus.
    """
    body = key_to_text(key).encode("ascii")
    payload = len(body).to_bytes(_LEN_PREFIX, "big") + body
    width = _chunk_len(pub.modulus)
    if len(payload) % width:
        payload += bytes(width - len(payload) % width)
    return [
        encrypt_chunk(pub, int.from_bytes(payload[i : i + width], "big"))
        for i in range(0, len(payload), width)
    ]


def unwrap_session(priv: ToyKeypair, wrapped) -> SessionKey:
    """Invert :func:`wrap_session`. Tampering surfaces as FormatError."""
    width = _chunk_len(priv.modulus)
    pieces = []
    for c in wrapped:
        value = decrypt_chunk(priv, c)
        try:
            pieces.append(value.to_bytes(width, "big"))
        except OverflowError:
            raise FormatError("decrypted chunk exceeds the frame width") from None
    raw = b"".join(pieces)
    if len(raw) < _LEN_PREFIX:
        raise FormatError("wrapped payload shorter than its length prefix")
    size = int.from_bytes(raw[:_LEN_PREFIX], "big")
    body, trailer = raw[_LEN_PREFIX : _LEN_PREFIX + size], raw[_LEN_PREFIX + size :]
    if len(body) != size or len(trailer) >= width or trailer.count(0) != len(trailer):
        raise FormatError("wrapped payload framing is inconsistent")
    try:
        return key_from_text(body.decode("ascii"))
    except UnicodeDecodeError:
        raise FormatError("wrapped payload is not ASCII") from None


# --- file formats -----------------------------------------------------------
#
# Wrapped blob: "HILBXENV1" then one decimal chunk per line.
# Half keys:    "HILBXPUB1" / "HILBXPRV1", then "N=<dec>" and "e=<dec>"
#               or "d=<dec>".


def wrapped_to_text(wrapped) -> str:
    return ENV_MAGIC + "\n" + "".join(f"{c}\n" for c in wrapped)


def wrapped_from_text(text: str) -> list:
    lines = text.split("\n")
    if len(lines) < 2 or lines[-1] != "":
        raise FormatError("envelope file must end with a newline")
    if lines[0] != ENV_MAGIC:
        raise FormatError(f"bad envelope magic {lines[0]!r}")
    chunks = []
    for lineno, line in enumerate(lines[1:-1], start=2):
        if not line.isdigit() or (line != "0" and line[0] == "0"):
            raise FormatError(f"line {lineno}: chunk is not a canonical decimal")
        chunks.append(int(line))
    if not chunks:
        raise FormatError("envelope carries no chunks")
    return chunks


def write_wrapped_file(path, wrapped) -> None:
    with open(path, "wb") as fh:
        fh.write(wrapped_to_text(wrapped).encode("ascii"))


def read_wrapped_file(path) -> list:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("envelope file is not ASCII") from None
    return wrapped_from_text(text)


def public_to_text(key: ToyKeypair) -> str:
    if key.e is None:
        raise DomainError("public exponent missing from this key")
    return f"{PUB_MAGIC}\nN={key.modulus}\ne={key.e}\n"


def private_to_text(key: ToyKeypair) -> str:
    if key.d is None:
        raise DomainError("private exponent missing from this key")
    return f"{PRV_MAGIC}\nN={key.modulus}\nd={key.d}\n"


def _half_key_from_text(text: str, magic: str, field: str) -> tuple:
    lines = text.split("\n")
    if len(lines) != 4 or lines[3] != "":
        raise FormatError("half-key file must be exactly three LF-terminated lines")
    if lines[0] != magic:
        raise FormatError(f"bad half-key magic {lines[0]!r}")
    values = {}
    for name, line in (("N", lines[1]), (field, lines[2])):
        prefix = name + "="
        if not line.startswith(prefix):
            raise FormatError(f"expected '{name}=<decimal>', got {line!r}")
        digits = line[len(prefix) :]
        if not digits.isdigit() or (digits != "0" and digits[0] == "0"):
            raise FormatError(f"field {name} is not a canonical decimal")
        values[name] = int(digits)
    return values["N"], values[field]


def public_from_text(text: str) -> ToyKeypair:
    modulus, e = _half_key_from_text(text, PUB_MAGIC, "e")
    return ToyKeypair(modulus=modulus, e=e)


def private_from_text(text: str) -> ToyKeypair:
    modulus, d = _half_key_from_text(text, PRV_MAGIC, "d")
    return ToyKeypair(modulus=modulus, d=d)


def write_half_key_file(path, text: str) -> None:
    with open(path, "wb") as fh:
        fh.write(text.encode("ascii"))


def read_public_file(path) -> ToyKeypair:
    return public_from_text(_read_ascii(path, "public key"))


def read_private_file(path) -> ToyKeypair:
    return private_from_text(_read_ascii(path, "private key"))


def _read_ascii(path, what: str) -> str:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        return raw.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError(f"{what} file is not ASCII") from None
