"""Command-line front end: build BWT + Lyndon array files, invert BWT
files, and benchmark the quadratic construction.

Exit codes: 0 success, 1 usage or invalid input, 2 I/O failure,
3 verification mismatch.

File formats (build writes the BWT and the Lyndon array to two files):

* text: the BWT file holds raw decoded bytes with the end marker written
  as 0x00 (shift/strict modes) or decimal symbols one per line (words
  mode); the LA file holds one decimal value per line.  In shift mode a
  0x00 payload byte would collide with the end marker, so inputs
  containing NUL are refused for text output; binary and json carry any
  input.
* binary: each file starts with magic "BWLA", a format version byte, an
  alphabet-mode byte, and the length n as 8-byte little-endian; then the
  payload, little-endian throughout: BWT symbols at the mode's natural
  width (u16 shift, u8 strict, u64 words), LA entries as u64.
* json: one file mirroring the output record (n, alphabet mode, BWT and LA
  symbol lists, 64-bit content checksum), written to the --out-bwt path.

The verify flag recomputes both structures with the brute-force oracles,
which are quadratic or worse: intended for small inputs.
"""

import argparse
import hashlib
import json
import math
import random
import statistics
import sys
import time
from array import array
from dataclasses import dataclass

from .alphabet import SENTINEL, EncodingError, decode_text, encode_bytes, encode_words
from .lyndon import bwt_lyndon_inplace
from .oracles import bwt_from_sa, invert_bwt, isa_from_sa, la_from_isa_nsv, suffix_array_naive

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3

MAGIC = b"BWLA"
FORMAT_VERSION = 1
MODE_CODES = {"shift": 0, "strict": 1, "words": 2}
MODE_NAMES = {code: name for name, code in MODE_CODES.items()}
BWT_WIDTHS = {"shift": "H", "strict": "B", "words": "Q"}

INPUT_CAP = 1 << 20  # quadratic core; larger inputs need --force

BENCH_SEED = 0xB317A

# test seam: called with (buffer, ranks) after construction, before verify
_fault_hook = None


class CliError(Exception):
    """Reportable failure carrying its exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


@dataclass
class OutputRecord:
    """One build result: length, mode, both output arrays, content hash."""

    n: int
    alphabet_mode: str
    bwt: list[int]
    la: list[int]
    checksum: str

    @classmethod
    def build(cls, alphabet_mode: str, bwt: list[int], la: list[int]) -> "OutputRecord":
        if len(bwt) != len(la):
            raise ValueError("BWT and LA lengths differ")
        checksum = content_checksum(alphabet_mode, bwt, la)
        return cls(len(bwt), alphabet_mode, bwt, la, checksum)


def content_checksum(mode: str, bwt: list[int], la: list[int]) -> str:
    """64-bit hash over the canonical little-endian serialization."""
    h = hashlib.blake2b(digest_size=8)
    h.update(bytes([MODE_CODES[mode]]))
    h.update(len(bwt).to_bytes(8, "little"))
    h.update(_le_bytes("q", bwt))
    h.update(_le_bytes("q", la))
    return h.hexdigest()


def _le_bytes(typecode: str, values) -> bytes:
    a = array(typecode, values)
    if sys.byteorder == "big":
        a.byteswap()
    return a.tobytes()


def _le_values(typecode: str, raw: bytes) -> list[int]:
    a = array(typecode)
    a.frombytes(raw)
    if sys.byteorder == "big":
        a.byteswap()
    return a.tolist()


# ---------------------------------------------------------------------------
# formats


def write_text_files(record: OutputRecord, bwt_path, la_path) -> None:
    with open(bwt_path, "wb") as f:
        f.write(_text_bwt_bytes(record))
    with open(la_path, "w") as f:
        f.writelines(f"{v}\n" for v in record.la)


def _text_bwt_bytes(record: OutputRecord) -> bytes:
    mode = record.alphabet_mode
    if mode == "words":
        return "".join(f"{v}\n" for v in record.bwt).encode("ascii")
    if mode == "shift" and any(x == 1 for x in record.bwt):
        raise CliError(
            "text format cannot represent this BWT unambiguously in shift mode"
            " (input contains NUL bytes); use --format binary or json"
        )
    shift = 1 if mode == "shift" else 0
    return bytes(0 if x == SENTINEL else x - shift for x in record.bwt)


def read_text_bwt(path, mode: str) -> list[int]:
    with open(path, "rb") as f:
        raw = f.read()
    if mode == "words":
        try:
            return [int(tok) for tok in raw.split()]
        except ValueError as err:
            raise CliError(f"bad words-mode BWT file: {err}") from None
    markers = raw.count(0)
    if markers != 1:
        raise CliError(
            f"text-format BWT file must contain exactly one 0x00 end marker, found {markers}"
        )
    shift = 1 if mode == "shift" else 0
    return [0 if b == 0 else b + shift for b in raw]


def read_text_la(path) -> list[int]:
    with open(path) as f:
        try:
            return [int(line) for line in f if line.strip()]
        except ValueError as err:
            raise CliError(f"bad LA file: {err}") from None


def write_binary_files(record: OutputRecord, bwt_path, la_path) -> None:
    header = _binary_header(record.alphabet_mode, record.n)
    with open(bwt_path, "wb") as f:
        f.write(header)
        f.write(_le_bytes(BWT_WIDTHS[record.alphabet_mode], record.bwt))
    with open(la_path, "wb") as f:
        f.write(header)
        f.write(_le_bytes("Q", record.la))


def _binary_header(mode: str, n: int) -> bytes:
    return MAGIC + bytes([FORMAT_VERSION, MODE_CODES[mode]]) + n.to_bytes(8, "little")


def _read_binary_payload(path, typecode_for_mode) -> tuple[str, list[int]]:
    with open(path, "rb") as f:
        raw = f.read()
    if len(raw) < 14 or raw[:4] != MAGIC:
        raise CliError(f"{path}: not a binary BWLA file")
    if raw[4] != FORMAT_VERSION:
        raise CliError(f"{path}: unsupported format version {raw[4]}")
    if raw[5] not in MODE_NAMES:
        raise CliError(f"{path}: unknown alphabet-mode byte {raw[5]}")
    mode = MODE_NAMES[raw[5]]
    n = int.from_bytes(raw[6:14], "little")
    typecode = typecode_for_mode(mode)
    values = _le_values(typecode, raw[14:])
    if len(values) != n:
        raise CliError(f"{path}: header says n={n} but payload has {len(values)} entries")
    return mode, values


def read_binary_bwt(path) -> tuple[str, list[int]]:
    return _read_binary_payload(path, lambda mode: BWT_WIDTHS[mode])


def read_binary_la(path) -> tuple[str, list[int]]:
    return _read_binary_payload(path, lambda mode: "Q")


def write_json_file(record: OutputRecord, path) -> None:
    doc = {
        "format": "bwla",
        "version": FORMAT_VERSION,
        "n": record.n,
        "alphabet_mode": record.alphabet_mode,
        "bwt": record.bwt,
        "la": record.la,
        "checksum": record.checksum,
    }
    with open(path, "w") as f:
        json.dump(doc, f)
        f.write("\n")


def read_json_file(path) -> OutputRecord:
    with open(path) as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as err:
            raise CliError(f"{path}: invalid JSON: {err}") from None
    try:
        record = OutputRecord(
            n=doc["n"],
            alphabet_mode=doc["alphabet_mode"],
            bwt=list(doc["bwt"]),
            la=list(doc["la"]),
            checksum=doc["checksum"],
        )
    except (KeyError, TypeError) as err:
        raise CliError(f"{path}: missing or malformed field: {err}") from None
    if record.n != len(record.bwt) or record.n != len(record.la):
        raise CliError(f"{path}: n does not match payload lengths")
    expected = content_checksum(record.alphabet_mode, record.bwt, record.la)
    if record.checksum != expected:
        raise CliError(f"{path}: checksum mismatch (file corrupt?)")
    return record


# ---------------------------------------------------------------------------
# build


def cmd_build(args) -> int:
    raw = _read_raw_input(args.input)
    if len(raw) > INPUT_CAP and not args.force:
        raise CliError(
            f"input is {len(raw)} bytes (> {INPUT_CAP}); the construction is quadratic,"
            " pass --force to run anyway"
        )
    text = _encode_input(raw, args.alphabet)
    n = len(text)

    original = list(text)
    buffer = list(text)
    ranks = [0] * n

    trace = None
    if args.trace:
        trace = lambda state, buf, rks: _print_trace(state, buf, rks, original, args.alphabet)

    started = time.perf_counter()
    bwt_lyndon_inplace(buffer, ranks, trace)
    elapsed = time.perf_counter() - started

    if _fault_hook is not None:
        _fault_hook(buffer, ranks)

    if args.verify:
        _verify_against_oracles(original, buffer, ranks)
        print(f"verify: ok (n={n}, {elapsed:.6f}s)", file=sys.stderr)

    record = OutputRecord.build(args.alphabet, buffer, ranks)
    bwt_path, la_path = _output_paths(args)
    if args.format == "text":
        write_text_files(record, bwt_path, la_path)
    elif args.format == "binary":
        write_binary_files(record, bwt_path, la_path)
    else:
        write_json_file(record, bwt_path)
        if args.out_la:
            print("note: json format bundles BWT and LA in one file; --out-la ignored",
                  file=sys.stderr)
    return EXIT_OK


def _read_raw_input(spec) -> bytes:
    if spec == "-":
        return sys.stdin.buffer.read()
    with open(spec, "rb") as f:
        return f.read()


def _encode_input(raw: bytes, mode: str) -> list[int]:
    try:
        if mode == "words":
            try:
                values = [int(tok) for tok in raw.split()]
            except ValueError as err:
                raise CliError(f"words mode expects whitespace-separated integers: {err}")
            return encode_words(values)
        return encode_bytes(raw, mode)
    except EncodingError as err:
        raise CliError(str(err)) from None


def _output_paths(args):
    if args.format == "json":
        default = None if args.input == "-" else args.input + ".bwla.json"
        bwt_path = args.out_bwt or default
        if bwt_path is None:
            raise CliError("reading from stdin: --out-bwt is required")
        return bwt_path, None
    bwt_path = args.out_bwt or (None if args.input == "-" else args.input + ".bwt")
    la_path = args.out_la or (None if args.input == "-" else args.input + ".la")
    if bwt_path is None or la_path is None:
        raise CliError("reading from stdin: --out-bwt and --out-la are required")
    return bwt_path, la_path


def _verify_against_oracles(original, bwt, la) -> None:
    sa = suffix_array_naive(original)
    expected_bwt = bwt_from_sa(original, sa)
    expected_la = la_from_isa_nsv(isa_from_sa(sa))
    for name, got, expected in (("BWT", bwt, expected_bwt), ("LA", la, expected_la)):
        for i, (g, e) in enumerate(zip(got, expected)):
            if g != e:
                raise CliError(
                    f"verification mismatch: {name} differs first at index {i}"
                    f" (got {g}, oracle {e})",
                    exit_code=EXIT_VERIFY,
                )


# ---------------------------------------------------------------------------
# trace tables


def _print_trace(state, buffer, ranks, original, mode) -> None:
    n = len(buffer)
    out = sys.stdout
    out.write(
        f"iteration s={state.s}: p={state.p} r_local={state.r_local} r_abs={state.r_abs}\n"
    )
    with_suffixes = n <= 32
    header = f"    {'i':>4}  {'bwt':>5}  {'isa':>4}"
    out.write(header + ("   sorted suffix\n" if with_suffixes else "\n"))
    for i in range(state.s, n):
        marker = "r->" if i == state.r_abs else "   "
        row = f"{marker} {i:>4}  {_sym_repr(buffer[i], mode):>5}  {ranks[i]:>4}"
        if with_suffixes:
            row += "   " + _suffix_repr(original, ranks, state.s, i, mode)
        out.write(row + "\n")
    out.write("\n")


def _sym_repr(symbol: int, mode: str) -> str:
    if symbol == SENTINEL:
        return "$"
    if mode == "words":
        return str(symbol)
    b = symbol - 1 if mode == "shift" else symbol
    return chr(b) if 32 <= b <= 126 else f"\\x{b:02x}"


def _suffix_repr(original, ranks, s, row, mode) -> str:
    # the suffix displayed on row i is the one whose current local rank is i-s
    sep = " " if mode == "words" else ""
    for k in range(s, len(original)):
        if ranks[k] == row - s:
            return sep.join(_sym_repr(x, mode) for x in original[k:])
    return "?"


# ---------------------------------------------------------------------------
# invert


def cmd_invert(args) -> int:
    if args.format == "binary":
        mode, symbols = read_binary_bwt(args.input)
    elif args.format == "json":
        record = read_json_file(args.input)
        mode, symbols = record.alphabet_mode, record.bwt
    else:
        mode = args.alphabet
        symbols = read_text_bwt(args.input, mode)

    try:
        text = invert_bwt(symbols)
        payload = decode_text(text, mode)
    except (ValueError, EncodingError) as err:
        raise CliError(str(err)) from None

    data = (
        "".join(f"{v}\n" for v in payload).encode("ascii") if mode == "words" else payload
    )
    if args.out:
        with open(args.out, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench


@dataclass
class BenchResult:
    rows: list[tuple[int, float]]  # (n, median seconds)
    slope: float
    total_seconds: float


def run_bench(n_min: int, n_max: int, points: int, trials: int) -> BenchResult:
    """Time the combined construction on random byte texts at geometrically
    spaced sizes and fit the log-log slope of median runtime."""
    if not 2 <= n_min <= n_max:
        raise CliError("--min must be >= 2 and <= --max")
    if points < 1 or trials < 1:
        raise CliError("--points and --trials must be >= 1")
    started = time.perf_counter()
    rows = []
    for n in _bench_sizes(n_min, n_max, points):
        times = []
        for trial in range(trials):
            rng = random.Random(BENCH_SEED ^ (n << 8) ^ trial)
            buffer = [rng.randrange(1, 257) for _ in range(n - 1)]
            buffer.append(SENTINEL)
            ranks = [0] * n
            t0 = time.perf_counter()
            bwt_lyndon_inplace(buffer, ranks)
            times.append(time.perf_counter() - t0)
        rows.append((n, statistics.median(times)))
    return BenchResult(rows, _loglog_slope(rows), time.perf_counter() - started)


def _bench_sizes(n_min: int, n_max: int, points: int) -> list[int]:
    if points == 1 or n_min == n_max:
        return [n_min]
    ratio = (n_max / n_min) ** (1 / (points - 1))
    sizes = []
    for k in range(points):
        n = n_max if k == points - 1 else round(n_min * ratio**k)
        if not sizes or n > sizes[-1]:
            sizes.append(n)
    return sizes


def _loglog_slope(rows) -> float:
    pts = [(math.log(n), math.log(t)) for n, t in rows if t > 0]
    if len(pts) < 2:
        return float("nan")
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    sxy = sum((x - mx) * (y - my) for x, y in pts)
    return sxy / sxx


def cmd_bench(args) -> int:
    result = run_bench(args.min, args.max, args.points, args.trials)
    print("n,median_seconds")
    for n, t in result.rows:
        print(f"{n},{t:.6f}")
    print(f"# loglog_slope={result.slope:.3f}")
    print(
        f"bench: {len(result.rows)} sizes x {args.trials} trials in "
        f"{result.total_seconds:.1f}s, log-log slope {result.slope:.3f}",
        file=sys.stderr,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1
    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(EXIT_USAGE if status == 2 else status)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bwla",
        description="Compute the BWT and the Lyndon array of a text in place.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="transform a file (or stdin with '-')")
    p_build.add_argument("input", help="input path, or - for stdin")
    p_build.add_argument("--alphabet", choices=MODE_CODES, default="shift")
    p_build.add_argument("--format", choices=("text", "binary", "json"), default="text")
    p_build.add_argument("--out-bwt", help="BWT output path (default INPUT.bwt)")
    p_build.add_argument("--out-la", help="LA output path (default INPUT.la)")
    p_build.add_argument("--verify", action="store_true",
                         help="recompute with brute-force oracles and compare (slow)")
    p_build.add_argument("--trace", action="store_true",
                         help="print a per-iteration table of the construction")
    p_build.add_argument("--force", action="store_true",
                         help=f"accept inputs larger than {INPUT_CAP} bytes")
    p_build.set_defaults(func=cmd_build)

    p_invert = sub.add_parser("invert", help="recover the original payload from a BWT file")
    p_invert.add_argument("input", help="BWT file produced by build")
    p_invert.add_argument("--alphabet", choices=MODE_CODES, default="shift",
                          help="alphabet of a text-format file (binary/json are self-describing)")
    p_invert.add_argument("--format", choices=("text", "binary", "json"), default="text")
    p_invert.add_argument("--out", help="output path (default stdout)")
    p_invert.set_defaults(func=cmd_invert)

    p_bench = sub.add_parser("bench", help="time the construction across sizes")
    p_bench.add_argument("--min", type=int, default=1024)
    p_bench.add_argument("--max", type=int, default=16384)
    p_bench.add_argument("--points", type=int, default=5)
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"bwla: error: {err}", file=sys.stderr)
        return err.exit_code
    except OSError as err:
        print(f"bwla: error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
