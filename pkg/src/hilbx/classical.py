"""Classical comparison ciphers: Playfair and Hill, plus the standard
known-plaintext key recovery against Hill and a repeated-block detector.

Both ciphers work on lowercase a..z. Playfair merges j into i and
substitutes letter pairs against a 5x5 keyword grid; Hill multiplies
letter columns by an invertible matrix mod 26 (a=0 .. z=25). Hill falls
to known plaintext because the key acts linearly: m independent
plaintext columns P with their ciphertext columns C give K = C * P^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import AttackInconclusiveError, DomainError, FormatError
from .exactmat import Matrix, mat_det_exact

_MOD = 26
_GRID_LETTERS = "abcdefghiklmnopqrstuvwxyz"  # no j; i and j share a cell


def _clean_letters(text: str) -> str:
    """Lowercase and drop everything outside a..z."""
    return "".join(ch for ch in text.lower() if "a" <= ch <= "z")


# --- Playfair ---------------------------------------------------------------


@dataclass(frozen=True)
class PlayfairKey:
    """5x5 substitution grid, stored row-major as 25 letters."""

    grid: str

    def __post_init__(self):
        if sorted(self.grid) != sorted(_GRID_LETTERS):
            raise DomainError("grid must contain each of the 25 merged letters once")

    @classmethod
    def from_keyword(cls, keyword: str) -> "PlayfairKey":
        """Keyword letters (deduplicated, j merged into i) first, then the
        remaining alphabet in order."""
        seen = []
        for ch in _clean_letters(keyword):
            ch = "i" if ch == "j" else ch
            if ch not in seen:
                seen.append(ch)
        rest = [ch for ch in _GRID_LETTERS if ch not in seen]
        return cls("".join(seen + rest))

    def position(self, ch: str) -> tuple:
        idx = self.grid.index(ch)
        return divmod(idx, 5)


def playfair_prepare(text: str) -> list:
    """Split cleaned text into digrams.

    j becomes i; a filler is inserted between the letters of a repeated
    pair and appended when a single letter is left over. The filler is x,
    except that a doubled x takes q so preparation always terminates.
    """
    letters = []
    for ch in text:
        if not "a" <= ch <= "z":
            raise DomainError(f"playfair input must be lowercase a..z, got {ch!r}")
        letters.append("i" if ch == "j" else ch)
    digrams = []
    i = 0
    while i < len(letters):
        a = letters[i]
        b = letters[i + 1] if i + 1 < len(letters) else None
        if b is None or a == b:
            digrams.append(a + ("q" if a == "x" else "x"))
            i += 1
        else:
            digrams.append(a + b)
            i += 2
    return digrams


def _playfair_pair(key: PlayfairKey, a: str, b: str, step: int) -> str:
    r1, c1 = key.position(a)
    r2, c2 = key.position(b)
    if r1 == r2:
        c1, c2 = (c1 + step) % 5, (c2 + step) % 5
    elif c1 == c2:
        r1, r2 = (r1 + step) % 5, (r2 + step) % 5
    else:
        c1, c2 = c2, c1
    return key.grid[r1 * 5 + c1] + key.grid[r2 * 5 + c2]


def playfair_encrypt(key: PlayfairKey, text: str) -> str:
    """Encrypt free-form text (cleaned and prepared internally)."""
    digrams = playfair_prepare(_clean_letters(text))
    return "".join(_playfair_pair(key, d[0], d[1], 1) for d in digrams)


def playfair_decrypt(key: PlayfairKey, cipher: str) -> str:
    """Invert the substitution; yields the prepared plaintext digrams."""
    if len(cipher) % 2 != 0:
        raise DomainError("playfair ciphertext length must be even")
    if any(ch not in key.grid for ch in cipher):
        raise DomainError("playfair ciphertext contains letters outside the grid")
    return "".join(
        _playfair_pair(key, cipher[i], cipher[i + 1], -1) for i in range(0, len(cipher), 2)
    )


# --- Hill -------------------------------------------------------------------


@dataclass(frozen=True)
class HillKey:
    """m x m key matrix with entries reduced mod 26, invertible mod 26."""

    mat: tuple

    def __post_init__(self):
        m = len(self.mat)
        if m < 1 or any(len(row) != m for row in self.mat):
            raise DomainError("Hill key must be square")
        if any(not 0 <= v < _MOD for row in self.mat for v in row):
            raise DomainError("Hill key entries must already be reduced mod 26")
        det = _int_det(self.mat) % _MOD
        if gcd(det, _MOD) != 1:
            raise DomainError(f"Hill key is not invertible mod 26 (det = {det})")

    @classmethod
    def from_rows(cls, rows) -> "HillKey":
        return cls(tuple(tuple(v % _MOD for v in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.mat)


def _int_det(rows) -> int:
    d = mat_det_exact(Matrix.from_rows(rows))
    return d.numerator  # integer input, so the denominator is 1


def _mod_inverse(a: int) -> int:
    a %= _MOD
    try:
        return pow(a, -1, _MOD)
    except ValueError:
        raise AttackInconclusiveError(f"{a} has no inverse mod 26") from None


def _mat_inv_mod26(rows) -> tuple:
    """Inverse mod 26 via the adjugate times the inverted determinant.

    Works for any size without worrying about elimination over a ring
    with zero divisors.
    """
    m = len(rows)
    det = _int_det(rows) % _MOD
    det_inv = _mod_inverse(det)
    if m == 1:
        return ((det_inv % _MOD,),)
    adj = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            minor = [
                [rows[r][c] for c in range(m) if c != j] for r in range(m) if r != i
            ]
            cof = _int_det(minor)
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof * det_inv % _MOD
    return tuple(tuple(row) for row in adj)


def _letters_to_nums(text: str) -> list:
    return [ord(ch) - ord("a") for ch in text]


def _nums_to_letters(nums) -> str:
    return "".join(chr(v % _MOD + ord("a")) for v in nums)


def _mat_vec_mod26(rows, vec) -> list:
    return [sum(c * v for c, v in zip(row, vec)) % _MOD for row in rows]


def hill_encrypt(key: HillKey, text: str) -> str:
    """Encrypt text (non-letters stripped, padded with x to a multiple of m)."""
    m = key.size
    clean = _clean_letters(text)
    if len(clean) % m:
        clean += "x" * (m - len(clean) % m)
    nums = _letters_to_nums(clean)
    out = []
    for i in range(0, len(nums), m):
        out.extend(_mat_vec_mod26(key.mat, nums[i : i + m]))
    return _nums_to_letters(out)


def hill_decrypt(key: HillKey, cipher: str) -> str:
    m = key.size
    clean = _clean_letters(cipher)
    if len(clean) != len(cipher) or len(clean) % m:
        raise DomainError(f"Hill ciphertext must be letters in a multiple of {m}")
    inv = _mat_inv_mod26(key.mat)
    nums = _letters_to_nums(clean)
    out = []
    for i in range(0, len(nums), m):
        out.extend(_mat_vec_mod26(inv, nums[i : i + m]))
    return _nums_to_letters(out)


def hill_key_inverse(key: HillKey) -> HillKey:
    """The decryption matrix as a key in its own right."""
    return HillKey(_mat_inv_mod26(key.mat))


def hill_kpa_attack(pairs) -> HillKey:
    """Recover a Hill key from m aligned plaintext/ciphertext columns.

    ``pairs`` is a sequence of (plain_column, cipher_column) tuples of
    letter values 0..25, exactly m of them for an m x m key. If the
    stacked plaintext matrix is not invertible mod 26 the attack is
    inconclusive and the caller should supply different columns.
    """
    pairs = list(pairs)
    if not pairs:
        raise DomainError("attack needs at least one column pair")
    m = len(pairs[0][0])
    if len(pairs) != m:
        raise DomainError(f"an {m}x{m} key needs exactly {m} column pairs, got {len(pairs)}")
    for p, c in pairs:
        if len(p) != m or len(c) != m:
            raise DomainError("every column must have m entries")
    # columns stack side by side: P[r][k] is entry r of plaintext column k
    pmat = [[pairs[k][0][r] % _MOD for k in range(m)] for r in range(m)]
    cmat = [[pairs[k][1][r] % _MOD for k in range(m)] for r in range(m)]
    det = _int_det(pmat) % _MOD
    if gcd(det, _MOD) != 1:
        raise AttackInconclusiveError(
            f"plaintext columns are not invertible mod 26 (det = {det})"
        )
    pinv = _mat_inv_mod26(pmat)
    kmat = [
        [sum(cmat[i][k] * pinv[k][j] for k in range(m)) % _MOD for j in range(m)]
        for i in range(m)
    ]
    return HillKey(tuple(tuple(row) for row in kmat))


def text_to_columns(text: str, m: int) -> list:
    """Split letters into consecutive columns of m values 0..25."""
    clean = _clean_letters(text)
    if len(clean) != len(text) or len(clean) % m:
        raise DomainError(f"text must be letters in a multiple of {m}")
    nums = _letters_to_nums(clean)
    return [tuple(nums[i : i + m]) for i in range(0, len(nums), m)]


# --- repeated-block detection ----------------------------------------------


def ecb_repeat_detector(blocks) -> list:
    """All index pairs (i, j), i < j, whose blocks compare equal.

    Blocks must be hashable (strings, bytes, tuples); cipher columns and
    letter blocks all qualify.
    """
    groups = {}
    for idx, blk in enumerate(blocks):
        groups.setdefault(blk, []).append(idx)
    out = []
    for idxs in groups.values():
        for pos, i in enumerate(idxs):
            for j in idxs[pos + 1 :]:
                out.append((i, j))
    return sorted(out)


# --- attack pairs file ------------------------------------------------------
#
# Line oriented: each line "P=<letters> C=<letters>", both the same
# length and a multiple of the key size.


def parse_pairs_text(text: str, m: int) -> list:
    """Column pairs from an attack-pairs file body, in order of appearance."""
    pairs = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line == "":
            continue
        parts = line.split(" ")
        if len(parts) != 2 or not parts[0].startswith("P=") or not parts[1].startswith("C="):
            raise FormatError(f"line {lineno}: expected 'P=<letters> C=<letters>'")
        p_text = parts[0][2:]
        c_text = parts[1][2:]
        if len(p_text) != len(c_text):
            raise FormatError(f"line {lineno}: plaintext and ciphertext lengths differ")
        try:
            p_cols = text_to_columns(p_text, m)
            c_cols = text_to_columns(c_text, m)
        except DomainError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        pairs.extend(zip(p_cols, c_cols))
    if not pairs:
        raise FormatError("pairs file contains no usable lines")
    return pairs


def read_pairs_file(path, m: int) -> list:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("pairs file is not ASCII") from None
    return parse_pairs_text(text, m)
