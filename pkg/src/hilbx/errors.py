"""Exception types shared across the package."""


class HilbxError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(HilbxError, ValueError):
    """An argument violates a documented precondition."""


class IntegrityError(HilbxError):
    """Ciphertext does not decrypt to valid plaintext under the given key."""


class PaddingError(IntegrityError):
    """Decrypted data ends in malformed message padding."""


class FormatError(HilbxError, ValueError):
    """A serialized key, ciphertext, envelope, or pairs file is malformed."""


class AttackInconclusiveError(HilbxError):
    """The known-plaintext sample was insufficient to recover a key."""
