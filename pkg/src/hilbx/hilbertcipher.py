"""Block cipher built on exact Hilbert-matrix products, with CBC chaining.

A session key is (n, m, pad, iv): n is the secret prime order of the
Hilbert matrix, m the public plaintext block size in bytes, pad the
secret (n-m)-byte column appended to every block, and iv the secret
m-byte seed of the CBC chain. Encrypting a block lifts its bytes to an
n-entry integer column, multiplies by the n x n Hilbert matrix, and
ships the resulting column of exact rationals; decryption multiplies by
the all-integer inverse and keeps the first m entries. Because every
value is an exact rational, decryption is bit-perfect by construction
and round-off can never corrupt a message.

The chain combiner XORs each plaintext block with an m-byte digest of
the previous cipher block (the iv for the first), so repeated plaintext
blocks stop producing repeated ciphertext blocks.

This is a pedagogical construction. The block map is linear, so known
plaintext recovers it outright, and the per-block entry count leaks n to
anyone holding a ciphertext. Do not protect real data with it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from operator import mul

from . import specialmat
from .errors import DomainError, FormatError, IntegrityError, PaddingError
from .exactmat import Matrix, rat_parse, rat_str
from .primes import is_probable_prime, next_prime

FORMAT_VERSION = 1
KEY_MAGIC = f"HILBXKEY{FORMAT_VERSION}"
CT_MAGIC = f"HILBXCT{FORMAT_VERSION}"

CipherBlock = tuple  # n canonical Fractions, the n x 1 cipher column


@dataclass(frozen=True)
class SessionKey:
    """Secret material for one session.

    n must exceed m; primality of n is a key-generation policy enforced
    by :func:`keygen`, not by block-level operations.
    """

    n: int
    m: int
    pad: bytes
    iv: bytes

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("block size m must be at least 1")
        if self.n <= self.m:
            raise DomainError(f"order n={self.n} must exceed block size m={self.m}")
        if len(self.pad) != self.n - self.m:
            raise DomainError(f"pad must be n-m={self.n - self.m} bytes, got {len(self.pad)}")
        if len(self.iv) != self.m:
            raise DomainError(f"iv must be m={self.m} bytes, got {len(self.iv)}")


@dataclass(frozen=True)
class CiphertextMessage:
    """Ordered cipher blocks plus the public header fields."""

    m: int
    blocks: tuple
    version: int = FORMAT_VERSION

    def __post_init__(self):
        if not self.blocks:
            raise DomainError("a ciphertext carries at least one block")
        n = len(self.blocks[0])
        if any(len(b) != n for b in self.blocks):
            raise DomainError("cipher blocks disagree on entry count")

    @property
    def n(self) -> int:
        return len(self.blocks[0])


def keygen(m: int, n_request: int | None = None, rng=None) -> SessionKey:
    """Fresh session key for block size m.

    Without an explicit order the smallest prime >= 2m+1 is used, which
    keeps the secret pad at least as long as the plaintext block. ``rng``
    takes any ``random.Random``-compatible source; the default draws from
    the operating system.
    """
    if m < 1:
        raise DomainError("block size m must be at least 1")
    if n_request is not None:
        if n_request <= m:
            raise DomainError(f"requested order {n_request} must exceed block size {m}")
        if not is_probable_prime(n_request):
            raise DomainError(f"requested order {n_request} is not prime")
        n = n_request
    else:
        n = next_prime(2 * m + 1)
    if rng is None:
        rng = random.SystemRandom()
    pad = bytes(rng.randrange(256) for _ in range(n - m))
    iv = bytes(rng.randrange(256) for _ in range(m))
    return SessionKey(n=n, m=m, pad=pad, iv=iv)


def encode_block(block, pad) -> Matrix:
    """Lift plaintext bytes plus the secret pad to an integer column."""
    try:
        block, pad = bytes(block), bytes(pad)
    except (ValueError, TypeError) as exc:
        raise DomainError(f"block and pad must be byte sequences: {exc}") from None
    if not block:
        raise DomainError("plaintext block must be nonempty")
    return Matrix.column([Fraction(v) for v in block] + [Fraction(v) for v in pad])


@lru_cache(maxsize=16)
def _scaled_hilbert_rows(n: int) -> tuple:
    """Order-n Hilbert matrix as integer rows over denominator lcm(1..2n-1)."""
    lcm = 1
    for k in range(1, 2 * n):
        lcm = lcm // gcd(lcm, k) * k
    rows = tuple(tuple(lcm // (i + j - 1) for j in range(1, n + 1)) for i in range(1, n + 1))
    return lcm, rows


@lru_cache(maxsize=16)
def _pad_partials(n: int, pad: bytes) -> tuple:
    """Per-row contribution of the fixed pad bytes to the matrix product."""
    _, rows = _scaled_hilbert_rows(n)
    m = n - len(pad)
    return tuple(sum(row[m + k] * v for k, v in enumerate(pad)) for row in rows)


def encrypt_block(key: SessionKey, block: bytes) -> CipherBlock:
    """One cipher column: the Hilbert matrix times the encoded block.

    Computed over the common denominator lcm(1..2n-1) so the inner loop
    is pure integer work; the result is identical to the rational
    matrix-vector product entry for entry.
    """
    if len(block) != key.m:
        raise DomainError(f"plaintext block must be {key.m} bytes, got {len(block)}")
    lcm, rows = _scaled_hilbert_rows(key.n)
    partials = _pad_partials(key.n, key.pad)
    return tuple(
        Fraction(fixed + sum(map(mul, row, block)), lcm)
        for row, fixed in zip(rows, partials)
    )


def decrypt_block(key: SessionKey, cblock: CipherBlock) -> bytes:
    """Recover the m plaintext bytes from one cipher column.

    Rows m+1..n of the inverse product would reproduce the pad, so they
    are never computed. Any recovered entry that is not an integer in
    0..255 means the key order is wrong, the pad disagrees, or the block
    was corrupted, and raises IntegrityError.
    """
    if len(cblock) != key.n:
        raise IntegrityError(
            f"cipher block has {len(cblock)} entries but the key order is {key.n}"
        )
    den = 1
    for e in cblock:
        den = den // gcd(den, e.denominator) * e.denominator
    nums = [e.numerator * (den // e.denominator) for e in cblock]
    inv_rows = specialmat.hilbert_inverse_int_rows(key.n)
    out = bytearray()
    for i in range(key.m):
        q, r = divmod(sum(map(mul, inv_rows[i], nums)), den)
        if r != 0 or not 0 <= q <= 255:
            raise IntegrityError(f"recovered entry {i + 1} is not a byte value")
        out.append(q)
    return bytes(out)


_POW31 = tuple(pow(31, c, 256) for c in range(8))  # 31 has order 8 mod 256


def chain_bytes(cblock: CipherBlock, m: int) -> bytes:
    """Deterministic m-byte digest of a cipher block, for CBC chaining.

    The canonical serialization (entries rendered "<num>/<den>", joined
    by ';') is folded into m accumulators: the byte at position k updates
    slot k mod m via b <- b*31 + byte (mod 256). Sender and receiver both
    compute this from the cipher block alone.
    """
    if not cblock:
        raise DomainError("cannot chain an empty cipher block")
    if m < 1:
        raise DomainError("chain width must be at least 1")
    data = ";".join(rat_str(e) for e in cblock).encode("ascii")
    out = bytearray(m)
    for r in range(m):
        lane = data[r::m]
        if not lane:
            continue
        # unrolled recurrence: sum of lane[i] * 31**(top-i); the exponent
        # only matters mod 8, so bucket by it and sum slices at C speed
        top = len(lane) - 1
        acc = 0
        for c, w in enumerate(_POW31):
            acc += w * sum(lane[(top - c) % 8 :: 8])
        out[r] = acc % 256
    return bytes(out)


def pad_message(data: bytes, m: int) -> list:
    """Split into m-byte blocks, appending p copies of the byte p (1..m).

    A message whose length is already a multiple of m gains one full
    padding block, so the transform is always reversible.
    """
    if m < 1:
        raise DomainError("block size m must be at least 1")
    p = m - (len(data) % m)
    buf = data + bytes([p]) * p
    return [buf[i : i + m] for i in range(0, len(buf), m)]


def unpad_message(data: bytes, m: int) -> bytes:
    """Inverse of :func:`pad_message`."""
    if not data or len(data) % m != 0:
        raise PaddingError("padded data must be a nonzero multiple of the block size")
    p = data[-1]
    if not 1 <= p <= m:
        raise PaddingError(f"final padding byte {p} outside 1..{m}")
    if data[-p:] != bytes([p]) * p:
        raise PaddingError("trailing bytes disagree with the padding count")
    return data[:-p]


def _xor(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b))


def cbc_encrypt(key: SessionKey, data: bytes) -> CiphertextMessage:
    """Encrypt a message with cipher block chaining."""
    chain = key.iv
    blocks = []
    for blk in pad_message(data, key.m):
        cb = encrypt_block(key, _xor(blk, chain))
        blocks.append(cb)
        chain = chain_bytes(cb, key.m)
    return CiphertextMessage(m=key.m, blocks=tuple(blocks))


def cbc_decrypt_raw(key: SessionKey, msg: CiphertextMessage) -> bytes:
    """Decrypt all blocks of a chained message without removing padding.

    Corrupting block i garbles plaintext block i (usually as an
    IntegrityError) and block i+1 (through the chain digest); later
    blocks are unaffected.
    """
    if msg.m != key.m:
        raise IntegrityError(f"message block size {msg.m} does not match key m={key.m}")
    chain = key.iv
    out = bytearray()
    for cb in msg.blocks:
        out.extend(_xor(decrypt_block(key, cb), chain))
        chain = chain_bytes(cb, key.m)
    return bytes(out)


def cbc_decrypt(key: SessionKey, msg: CiphertextMessage) -> bytes:
    """Decrypt a chained message and strip the padding."""
    return unpad_message(cbc_decrypt_raw(key, msg), key.m)


def ecb_encrypt(key: SessionKey, data: bytes) -> CiphertextMessage:
    """Encrypt each block independently (no chaining).

    Kept for demonstration: equal plaintext blocks map to equal cipher
    blocks, which is exactly the leak chaining exists to stop.
    """
    blocks = tuple(encrypt_block(key, blk) for blk in pad_message(data, key.m))
    return CiphertextMessage(m=key.m, blocks=blocks)


def ecb_decrypt(key: SessionKey, msg: CiphertextMessage) -> bytes:
    if msg.m != key.m:
        raise IntegrityError(f"message block size {msg.m} does not match key m={key.m}")
    raw = b"".join(decrypt_block(key, cb) for cb in msg.blocks)
    return unpad_message(raw, key.m)


# --- serialization ---------------------------------------------------------
#
# Key file, line oriented, LF endings:
#     HILBXKEY1
#     n=<decimal>
#     m=<decimal>
#     K=<lowercase hex, 2 digits per byte>
#     IV=<lowercase hex>
#
# Ciphertext file:
#     HILBXCT1
#     m=<decimal> t=<decimal>
#     ...t lines, each n tokens "<num>/<den>" separated by single spaces
#
# Both are bit-exact: writing what was read reproduces the file.


def key_to_text(key: SessionKey) -> str:
    return (
        f"{KEY_MAGIC}\n"
        f"n={key.n}\n"
        f"m={key.m}\n"
        f"K={key.pad.hex()}\n"
        f"IV={key.iv.hex()}\n"
    )


def key_from_text(text: str) -> SessionKey:
    lines = text.split("\n")
    if len(lines) != 6 or lines[5] != "":
        raise FormatError("key file must be exactly five LF-terminated lines")
    if lines[0] != KEY_MAGIC:
        raise FormatError(f"bad key file magic {lines[0]!r}")
    n = _field_int(lines[1], "n")
    m = _field_int(lines[2], "m")
    pad = _field_hex(lines[3], "K")
    iv = _field_hex(lines[4], "IV")
    try:
        return SessionKey(n=n, m=m, pad=pad, iv=iv)
    except DomainError as exc:
        raise FormatError(f"inconsistent key file: {exc}") from None


def write_key_file(path, key: SessionKey) -> None:
    with open(path, "wb") as fh:
        fh.write(key_to_text(key).encode("ascii"))


def read_key_file(path) -> SessionKey:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("key file is not ASCII") from None
    return key_from_text(text)


def ciphertext_to_text(msg: CiphertextMessage) -> str:
    head = f"HILBXCT{msg.version}\nm={msg.m} t={len(msg.blocks)}\n"
    body = "".join(" ".join(rat_str(e) for e in cb) + "\n" for cb in msg.blocks)
    return head + body


def ciphertext_from_text(text: str) -> CiphertextMessage:
    lines = text.split("\n")
    if len(lines) < 3 or lines[-1] != "":
        raise FormatError("ciphertext file must end with a newline")
    lines = lines[:-1]
    if lines[0] != CT_MAGIC:
        raise FormatError(f"bad ciphertext magic {lines[0]!r}")
    head = lines[1].split(" ")
    if len(head) != 2:
        raise FormatError("ciphertext header must be 'm=<decimal> t=<decimal>'")
    m = _field_int(head[0], "m")
    t = _field_int(head[1], "t")
    if t != len(lines) - 2:
        raise FormatError(f"header says t={t} but file has {len(lines) - 2} block lines")
    blocks = []
    width = None
    for lineno, line in enumerate(lines[2:], start=3):
        try:
            cb = tuple(rat_parse(tok) for tok in line.split(" "))
        except DomainError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if width is None:
            width = len(cb)
        elif len(cb) != width:
            raise FormatError(f"line {lineno}: expected {width} entries, got {len(cb)}")
        blocks.append(cb)
    try:
        return CiphertextMessage(m=m, blocks=tuple(blocks))
    except DomainError as exc:
        raise FormatError(f"inconsistent ciphertext: {exc}") from None


def write_ciphertext_file(path, msg: CiphertextMessage) -> None:
    with open(path, "wb") as fh:
        fh.write(ciphertext_to_text(msg).encode("ascii"))


def read_ciphertext_file(path) -> CiphertextMessage:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("ciphertext file is not ASCII") from None
    return ciphertext_from_text(text)


def _field_int(line: str, name: str) -> int:
    prefix = name + "="
    if not line.startswith(prefix):
        raise FormatError(f"expected '{name}=<decimal>', got {line!r}")
    value = line[len(prefix) :]
    if not value.isdigit() or (value != "0" and value[0] == "0"):
        raise FormatError(f"field {name} is not a canonical decimal: {value!r}")
    return int(value)


def _field_hex(line: str, name: str) -> bytes:
    prefix = name + "="
    if not line.startswith(prefix):
        raise FormatError(f"expected '{name}=<hex>', got {line!r}")
    value = line[len(prefix) :]
    try:
        data = bytes.fromhex(value)
    except ValueError:
        raise FormatError(f"field {name} is not hex: {value!r}") from None
    if data.hex() != value:
        raise FormatError(f"field {name} must be lowercase hex without separators")
    return data
