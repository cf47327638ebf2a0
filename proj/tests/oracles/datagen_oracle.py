#!/usr/bin/env python3
"""Independent reimplementation of the input generator, checked against `pdqbench gen`.

usage: datagen_oracle.py PDQBENCH            compare against the binary
       datagen_oracle.py --hashes            print FNV-1a hashes of the golden specs
"""

import subprocess
import sys

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
KINDS = ["uniform", "dupsq", "dup8", "mod8", "ones", "sort50",
         "sort90", "sort99", "organ", "merge", "asc", "desc"]
SHUFFLED = {"uniform", "dupsq", "dup8", "mod8", "sort50", "sort90", "sort99"}
BIGSTR_PAD = 1000


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + GOLDEN) & MASK
        return mix64(self.state)

    def below(self, bound):
        m = self.next() * bound
        low = m & MASK
        if low < bound:
            threshold = ((1 << 64) - bound) % bound
            while low < threshold:
                m = self.next() * bound
                low = m & MASK
        return m >> 64


def stream_seed(seed, kind, n):
    k = KINDS.index(kind) + 1
    return mix64(mix64(seed ^ ((GOLDEN * k) & MASK)) ^ n)


def base_values(kind, n):
    h = (n + 1) // 2
    if kind in ("uniform", "sort50", "sort90", "sort99", "asc"):
        return list(range(n))
    if kind == "desc":
        return list(range(n - 1, -1, -1))
    if kind == "dupsq":
        r = int(n ** 0.5)
        while r * r > n:
            r -= 1
        while (r + 1) * (r + 1) <= n:
            r += 1
        return [i % r for i in range(n)]
    if kind == "dup8":
        return [(pow(i, 8, n) + n // 2) % n for i in range(n)]
    if kind == "mod8":
        return [i % 8 for i in range(n)]
    if kind == "ones":
        return [1] * n
    if kind == "organ":
        return list(range(h)) + [n - 1 - i for i in range(h, n)]
    if kind == "merge":
        return list(range(h)) + [i - h for i in range(h, n)]
    raise ValueError(kind)


def values(kind, n, seed):
    a = base_values(kind, n)
    if kind not in SHUFFLED or n < 2:
        return a
    rng = SplitMix64(stream_seed(seed, kind, n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        a[i], a[j] = a[j], a[i]
    if kind.startswith("sort"):
        prefix = n * int(kind[4:]) // 100
        a[:prefix] = sorted(a[:prefix])
    return a


def encode(kind, n, etype, seed):
    vals = values(kind, n, seed)
    if etype == "int64":
        return [str(v) for v in vals]
    width = max(1, len(str(n - 1))) if n > 0 else 1
    pad = BIGSTR_PAD if etype == "bigstr" else 0
    return ["0" * pad + str(v).rjust(width, "0") for v in vals]


def fnv1a(lines):
    h = 0xCBF29CE484222325
    for line in lines:
        for b in (line + "\n").encode():
            h = ((h ^ b) * 0x100000001B3) & MASK
    return h


SPECS = [(kind, n, "int64", 1) for kind in KINDS for n in (0, 1, 2, 10, 100, 1000)]
SPECS += [
    ("uniform", 4096, "int64", 12345),
    ("dup8", 5000, "int64", 7),
    ("dupsq", 1000, "str", 3),
    ("sort90", 1000, "str", 2),
    ("mod8", 100, "bigstr", 5),
    ("merge", 11, "str", 1),
    ("organ", 9, "int64", 1),
]

GOLDEN_HASH_SPECS = [
    ("uniform", 1000, "int64", 1),
    ("dup8", 1000, "int64", 1),
    ("sort90", 1000, "str", 1),
    ("mod8", 64, "bigstr", 1),
]


def main(argv):
    if len(argv) == 2 and argv[1] == "--hashes":
        for spec in GOLDEN_HASH_SPECS:
            print(*spec, "0x%016x" % fnv1a(encode(*spec)))
        return 0
    if len(argv) != 2:
        print(__doc__, file=sys.stderr)
        return 1
    failures = 0
    for kind, n, etype, seed in SPECS:
        out = subprocess.run(
            [argv[1], "gen", "--kind", kind, "--n", str(n), "--type", etype, "--seed", str(seed)],
            check=True, capture_output=True, text=True).stdout.splitlines()
        header = "# %s %d %s %d" % (kind, n, etype, seed)
        expected = encode(kind, n, etype, seed)
        if out[0] != header or out[1:] != expected:
            failures += 1
            print("MISMATCH", kind, n, etype, seed)
    print("%d specs checked, %d mismatches" % (len(SPECS), failures))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
