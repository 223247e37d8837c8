"""Command-line front end for the cold-wallet pipeline.

Commands either operate on an in-process Session (when driven as a
library) or re-derive everything from --mnemonic/--entropy-hex per
invocation; no state ever touches disk. Exit codes: 0 success, 2 usage,
3 input validation, 4 cryptographic rejection.
"""

import argparse
import json
import os
import sys

from . import bip39
from .errors import CryptoError, ValidationError
from .hd import format_path, master_from_seed, ETH_BASE_PATH
from .keystore import Keystore
from .trace import uniformity_report
from .u256 import parse_hex_bytes
from .ecdsa import Rfc6979Nonce, sign as ecdsa_sign

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_CRYPTO = 4


class Session:
    """Wallet state shared by consecutive commands in one process."""

    def __init__(self):
        self.words = None
        self.passphrase = ""
        self.keystore = None

    def load(self, words, passphrase):
        seed = bip39.mnemonic_to_seed(words, passphrase)
        self.words = list(words)
        self.passphrase = passphrase
        self.keystore = Keystore(master_from_seed(seed))
        return self.keystore


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ethcold",
        description="Ethereum HD cold-wallet pipeline: mnemonics, BIP-44 "
                    "key derivation, EIP-55 addresses, ECDSA signing, and "
                    "ladder trace analysis.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("init", help="create a wallet from entropy")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--entropy-hex", help="entropy as hex (16/20/24/28/32 bytes)")
    src.add_argument("--random", action="store_true",
                     help="draw entropy from OS randomness")
    p.add_argument("--words", type=int, choices=(12, 24), default=24,
                   help="mnemonic length for --random (default 24)")
    p.add_argument("--passphrase", default="")

    p = sub.add_parser("recover", help="load a wallet from a mnemonic")
    p.add_argument("--mnemonic", required=True)
    p.add_argument("--passphrase", default="")

    for name, help_text in (("derive", "derive accounts along m/44'/60'/0'/0/i"),
                            ("list", "print account records"),
                            ("sign", "sign a 32-byte digest")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--mnemonic", help="wallet mnemonic (if no session)")
        p.add_argument("--passphrase", default=None)
        if name == "derive":
            p.add_argument("--count", type=int, required=True)
        if name == "list":
            p.add_argument("--count", type=int, default=None,
                           help="derive this many accounts first if needed")
            p.add_argument("--export-private", action="store_true")
            p.add_argument("--i-understand-risks", action="store_true")
        if name == "sign":
            p.add_argument("--index", type=int, required=True)
            p.add_argument("--digest", required=True,
                           help="32-byte hash to sign, as hex")
            p.add_argument("--deterministic", action="store_true",
                           help="RFC 6979 nonce instead of OS randomness")

    p = sub.add_parser("trace", help="ladder operation-trace uniformity report")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--variant", choices=("hardened", "classic", "both"),
                   default="both")

    sub.add_parser("selftest", help="run the embedded standard-vector checks")
    return parser


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _wallet_for(args, session):
    """Keystore from the session, or rebuilt from --mnemonic."""
    mnemonic = getattr(args, "mnemonic", None)
    passphrase = getattr(args, "passphrase", None)
    if mnemonic is not None:
        words = mnemonic.split()
        bip39.mnemonic_to_entropy(words)  # full validation
        if session is not None:
            return session.load(words, passphrase or "")
        seed = bip39.mnemonic_to_seed(words, passphrase or "")
        return Keystore(master_from_seed(seed))
    if session is not None and session.keystore is not None:
        return session.keystore
    raise ValidationError("no wallet: pass --mnemonic or run init/recover first")


def _cmd_init(args, session):
    if args.entropy_hex is not None:
        entropy = parse_hex_bytes(args.entropy_hex)
    else:
        entropy = os.urandom(16 if args.words == 12 else 32)
    words = bip39.entropy_to_mnemonic(entropy)
    if session is not None:
        session.load(words, args.passphrase)
    _emit(args, {"mnemonic": " ".join(words)},
          ["mnemonic: %s" % " ".join(words)])
    return EXIT_OK


def _cmd_recover(args, session):
    words = args.mnemonic.split()
    bip39.mnemonic_to_entropy(words)
    if session is not None:
        session.load(words, args.passphrase)
    _emit(args, {"words": len(words)}, ["recovered: %d words" % len(words)])
    return EXIT_OK


def _cmd_derive(args, session):
    store = _wallet_for(args, session)
    if args.count < 1:
        raise ValidationError("--count must be >= 1")
    created = store.generate(args.count)
    payload = {"derived": len(created),
               "indices": [a.index for a in created],
               "path": format_path(ETH_BASE_PATH) + "/i"}
    _emit(args, payload, ["derived: %d" % len(created)])
    return EXIT_OK


def _cmd_list(args, session):
    store = _wallet_for(args, session)
    if args.export_private and not args.i_understand_risks:
        print("refusing to export private keys without --i-understand-risks",
              file=sys.stderr)
        return EXIT_USAGE
    if args.count is not None and len(store.accounts) < args.count:
        store.generate(args.count - len(store.accounts))
    rows = store.export_records(include_private=args.export_private)
    payload = []
    for account in store.accounts:
        item = {"index": account.index,
                "public_key": account.public_key.hex(),
                "address": account.address}
        if args.export_private:
            item["private_key"] = account.private_key.hex()
        payload.append(item)
    _emit(args, payload, rows)
    return EXIT_OK


def _cmd_sign(args, session):
    store = _wallet_for(args, session)
    digest = parse_hex_bytes(args.digest, expect_len=32)
    if args.index < 0:
        raise ValidationError("--index must be >= 0")
    if not any(a.index == args.index for a in store.accounts):
        store.generate(args.index + 1 - len(store.accounts))
    account = store.select(args.index)
    nonce = Rfc6979Nonce() if args.deterministic else None
    sig = ecdsa_sign(account.key_int, digest, nonce_source=nonce)
    payload = {"r": "%064x" % sig.r, "s": "%064x" % sig.s,
               "parity": sig.y_parity}
    _emit(args, payload, ["r: %064x" % sig.r, "s: %064x" % sig.s,
                          "parity: %d" % sig.y_parity])
    return EXIT_OK


def _cmd_trace(args, session):
    if args.samples < 2:
        raise ValidationError("--samples must be >= 2")
    variants = (("hardened", "classic") if args.variant == "both"
                else (args.variant,))
    report = uniformity_report(args.samples, variants=variants)
    payload = {"passed": report.passed,
               "variants": {v: vars(s) for v, s in report.stats.items()}}
    _emit(args, payload, [report.to_text()])
    return EXIT_OK if report.passed else EXIT_CRYPTO


def _cmd_selftest(args, session):
    from .selftest import run_selftest
    failures = run_selftest(quiet=args.json)
    _emit(args, {"passed": not failures, "failures": failures}, [])
    return EXIT_OK if not failures else EXIT_CRYPTO


_COMMANDS = {
    "init": _cmd_init,
    "recover": _cmd_recover,
    "derive": _cmd_derive,
    "list": _cmd_list,
    "sign": _cmd_sign,
    "trace": _cmd_trace,
    "selftest": _cmd_selftest,
}


def main(argv=None, session=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, session)
    except ValidationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except LookupError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except CryptoError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CRYPTO


if __name__ == "__main__":
    sys.exit(main())
