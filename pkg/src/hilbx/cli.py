"""Command-line front end.

Exit status: 0 on success, 1 when a domain, integrity, padding, format,
or file error is reported, 2 for usage errors (argparse's default).
The encrypt/decrypt paths never print key material; diagnostics go to
stderr, data goes to files or stdout.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import classical, envelope, hilbertcipher, specialmat, stability
from .errors import AttackInconclusiveError, DomainError, HilbxError
from .exactmat import rat_str


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except HilbxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbx",
        description="Hilbert-matrix block cipher and its supporting toolbox",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="create a session key file")
    p.add_argument("--m", type=int, required=True, help="plaintext block size in bytes")
    p.add_argument("--n", type=int, default=None, help="explicit prime order (> m)")
    p.add_argument("--seed", type=int, default=None, help="deterministic randomness")
    p.add_argument("--out", required=True, help="key file to write")
    p.set_defaults(handler=_cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a file under a session key")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_decrypt)

    p = sub.add_parser("matrix", help="special-matrix queries")
    p.add_argument("action", choices=("det", "inv", "build"))
    p.add_argument(
        "--family", required=True, choices=("hilbert", "cauchy", "vandermonde", "comb")
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--x", default=None, help="comma-separated rationals")
    p.add_argument("--y", default=None, help="comma-separated rationals")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("attack", help="cipher attacks")
    attack_sub = p.add_subparsers(dest="attack_kind", required=True)
    ph = attack_sub.add_parser("hill", help="known-plaintext Hill key recovery")
    ph.add_argument("--m", type=int, required=True, help="key size")
    ph.add_argument("--pairs", required=True, help="attack pairs file")
    ph.set_defaults(handler=_cmd_attack_hill)

    p = sub.add_parser("stability", help="float-vs-exact Hilbert inversion report")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="emit csv instead of a table")
    p.set_defaults(handler=_cmd_stability)

    p = sub.add_parser("envelope", help="toy public-key session transport")
    env_sub = p.add_subparsers(dest="envelope_action", required=True)
    pe = env_sub.add_parser("keygen", help="create a toy keypair")
    pe.add_argument("--bits", type=int, default=64)
    pe.add_argument("--seed", type=int, default=None)
    pe.add_argument("--pub", required=True, help="public half-key file to write")
    pe.add_argument("--priv", required=True, help="private half-key file to write")
    pe.set_defaults(handler=_cmd_envelope_keygen)
    pe = env_sub.add_parser("wrap", help="wrap a session key file")
    pe.add_argument("--pub", required=True)
    pe.add_argument("--key", required=True, help="session key file to wrap")
    pe.add_argument("--out", required=True)
    pe.set_defaults(handler=_cmd_envelope_wrap)
    pe = env_sub.add_parser("unwrap", help="unwrap back to a session key file")
    pe.add_argument("--priv", required=True)
    pe.add_argument("--in", dest="in_path", required=True)
    pe.add_argument("--out", required=True)
    pe.set_defaults(handler=_cmd_envelope_unwrap)

    p = sub.add_parser("demo", help="demonstrations")
    demo_sub = p.add_subparsers(dest="demo_kind", required=True)
    pd = demo_sub.add_parser(
        "ecb-vs-cbc", help="repeated-block collisions with and without chaining"
    )
    pd.add_argument("--key", required=True)
    pd.add_argument("--block", required=True, help="one plaintext block as hex")
    pd.add_argument("--repeats", type=int, default=8)
    pd.set_defaults(handler=_cmd_demo_ecb_cbc)

    return parser


def _rng(seed) -> random.Random:
    return random.Random(seed) if seed is not None else random.SystemRandom()


def _cmd_keygen(args) -> int:
    key = hilbertcipher.keygen(args.m, n_request=args.n, rng=_rng(args.seed))
    hilbertcipher.write_key_file(args.out, key)
    return 0


def _cmd_encrypt(args) -> int:
    key = hilbertcipher.read_key_file(args.key)
    with open(args.in_path, "rb") as fh:
        data = fh.read()
    msg = hilbertcipher.cbc_encrypt(key, data)
    hilbertcipher.write_ciphertext_file(args.out, msg)
    return 0


def _cmd_decrypt(args) -> int:
    key = hilbertcipher.read_key_file(args.key)
    msg = hilbertcipher.read_ciphertext_file(args.in_path)
    data = hilbertcipher.cbc_decrypt(key, msg)
    with open(args.out, "wb") as fh:
        fh.write(data)
    return 0


def _parse_rationals(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"not a rational: {part!r}") from None
    return out


def _matrix_spec(args) -> specialmat.SpecialSpec:
    fam = args.family
    if fam == "hilbert":
        if args.n is None:
            raise DomainError("hilbert needs --n")
        return specialmat.SpecialSpec.hilbert(args.n)
    if fam == "cauchy":
        if args.x is None or args.y is None:
            raise DomainError("cauchy needs --x and --y")
        return specialmat.SpecialSpec.cauchy(_parse_rationals(args.x), _parse_rationals(args.y))
    if fam == "vandermonde":
        if args.x is None:
            raise DomainError("vandermonde needs --x")
        return specialmat.SpecialSpec.vandermonde(_parse_rationals(args.x))
    if args.n is None or args.x is None or args.y is None:
        raise DomainError("comb needs --n, --x, and --y (scalars)")
    xs, ys = _parse_rationals(args.x), _parse_rationals(args.y)
    if len(xs) != 1 or len(ys) != 1:
        raise DomainError("comb takes scalar --x and --y")
    return specialmat.SpecialSpec.combinatorial(args.n, xs[0], ys[0])


def _cmd_matrix(args) -> int:
    spec = _matrix_spec(args)
    if args.action == "det":
        print(rat_str(specialmat.closed_det(spec)))
        return 0
    mat = specialmat.closed_inv(spec) if args.action == "inv" else specialmat.build(spec)
    for i in range(mat.rows):
        print(" ".join(rat_str(e) for e in mat.row(i)))
    return 0


def _cmd_attack_hill(args) -> int:
    if args.m < 1:
        raise DomainError("--m must be at least 1")
    pairs = classical.read_pairs_file(args.pairs, args.m)
    key = None
    for start in range(0, len(pairs) - args.m + 1):
        try:
            key = classical.hill_kpa_attack(pairs[start : start + args.m])
            break
        except AttackInconclusiveError:
            continue
    if key is None:
        raise AttackInconclusiveError(
            "no window of plaintext columns was invertible mod 26; supply more text"
        )
    for row in key.mat:
        print(" ".join(str(v) for v in row))
    return 0


def _cmd_stability(args) -> int:
    rows = stability.stability_report(args.max_n)
    text = stability.report_csv(rows) if args.csv else stability.report_text(rows)
    sys.stdout.write(text)
    return 0


def _cmd_envelope_keygen(args) -> int:
    pair = envelope.toy_keygen(args.bits, rng=_rng(args.seed))
    envelope.write_half_key_file(args.pub, envelope.public_to_text(pair))
    envelope.write_half_key_file(args.priv, envelope.private_to_text(pair))
    return 0


def _cmd_envelope_wrap(args) -> int:
    pub = envelope.read_public_file(args.pub)
    key = hilbertcipher.read_key_file(args.key)
    envelope.write_wrapped_file(args.out, envelope.wrap_session(pub, key))
    return 0


def _cmd_envelope_unwrap(args) -> int:
    priv = envelope.read_private_file(args.priv)
    wrapped = envelope.read_wrapped_file(args.in_path)
    key = envelope.unwrap_session(priv, wrapped)
    hilbertcipher.write_key_file(args.out, key)
    return 0


def _cmd_demo_ecb_cbc(args) -> int:
    key = hilbertcipher.read_key_file(args.key)
    try:
        block = bytes.fromhex(args.block)
    except ValueError:
        raise DomainError(f"--block is not hex: {args.block!r}") from None
    if len(block) != key.m:
        raise DomainError(f"--block must be {key.m} bytes for this key")
    if args.repeats < 2:
        raise DomainError("--repeats must be at least 2")
    data = block * args.repeats
    ecb = hilbertcipher.ecb_encrypt(key, data)
    cbc = hilbertcipher.cbc_encrypt(key, data)
    ecb_pairs = classical.ecb_repeat_detector(ecb.blocks)
    cbc_pairs = classical.ecb_repeat_detector(cbc.blocks)
    print(f"single-block mode: {len(ecb_pairs)} colliding block pairs")
    print(f"cbc mode: {len(cbc_pairs)} colliding block pairs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
