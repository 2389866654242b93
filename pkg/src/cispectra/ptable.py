"""Truth tables of p-ary functions f: F_p^n -> F_p.

A function is stored as its value sequence (f(0), f(1), ..., f(p^n - 1)),
where the integer index k encodes the input point (x_1, ..., x_n) in base p
with x_1 as the LEAST significant digit:

    k = x_1 + x_2 * p + ... + x_n * p^(n-1)

The opposite convention (x_1 most significant) is at least as common in the
wild, so every index-based statement in this package should be read against
the rule above.  Variable indices are 1-based in all public interfaces.

Text formats
------------
Truth table:  first line "p n", second line p^n whitespace-separated digits
in index order.  Polynomial: terms joined by "+" / "-", each term an optional
integer coefficient and "*"-joined factors "xI" or "xI^E" (I in 1..n); bare
integer literals are allowed as terms; whitespace is insignificant; all
arithmetic is mod p.

Everything here is an immutable value and every function is pure, so objects
can be shared freely across threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

# Tables larger than this are rejected outright at construction.
MAX_TABLE_ENTRIES = 2**31
# Default ceiling for the expensive whole-table transforms; the CLI lets the
# CI_SPECTRA_MAX_N environment variable raise it.
DEFAULT_SIZE_LIMIT = 10**6


class ParseError(ValueError):
    """Syntax or format error in a polynomial or truth-table text.

    `position` is the 0-based character offset of the offending token, or
    None when the error is not tied to a single location.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SizeLimitError(ValueError):
    """A table size exceeds the hard cap or the configured desk limit."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PFunction:
    """A function F_p^n -> F_p given by its full value table.

    table[k] = f(x) for the point x encoded by k as in the module docstring.
    """

    p: int
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        size = self.p**self.n
        if size > MAX_TABLE_ENTRIES:
            raise SizeLimitError(
                f"p^n = {size} exceeds the hard cap of {MAX_TABLE_ENTRIES} table entries"
            )
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != size:
            raise ValueError(f"table must have p^n = {size} entries, got {len(self.table)}")
        for v in self.table:
            if not 0 <= v < self.p:
                raise ValueError(f"table entry {v} is outside 0..{self.p - 1}")

    @property
    def size(self) -> int:
        return self.p**self.n

    def evaluate(self, x: Sequence[int]) -> int:
        """Value of f at the point x = (x_1, ..., x_n)."""
        if len(x) != self.n:
            raise ValueError(f"point has {len(x)} coordinates, expected {self.n}")
        return self.table[index_of(x, self.p)]


@dataclass(frozen=True)
class Permutation:
    """A bijection pi of {1, ..., n}; mapping[i-1] = pi(i)."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))
        n = len(self.mapping)
        if n == 0 or sorted(self.mapping) != list(range(1, n + 1)):
            raise ValueError(f"mapping {self.mapping} is not a bijection of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        m = list(range(1, n + 1))
        m[a - 1], m[b - 1] = m[b - 1], m[a - 1]
        return cls(tuple(m))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.mapping, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self . other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))


@dataclass(frozen=True)
class VariableTuple:
    """An ordered tuple of distinct variable indices from {1, ..., n}.

    Stands for the whole class of permutations that place exactly these
    variables, in this order, on the first len(indices) positions.
    """

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(v) for v in self.indices))
        if len(set(self.indices)) != len(self.indices):
            raise ValueError(f"tuple entries must be distinct, got {self.indices}")
        for v in self.indices:
            if v < 1:
                raise ValueError(f"variable index {v} must be >= 1")

    def __len__(self) -> int:
        return len(self.indices)

    @classmethod
    def from_permutation(cls, pi: Permutation, m: int) -> "VariableTuple":
        """The variables pi sends to positions 1..m, i.e. (pi^-1(1), ..., pi^-1(m))."""
        inv = pi.inverse()
        return cls(tuple(inv(r) for r in range(1, m + 1)))


def index_of(x: Sequence[int], p: int) -> int:
    """Encode a digit vector (x_1, ..., x_n) as k = sum x_i * p^(i-1)."""
    if len(x) == 0:
        raise ValueError("digit vector must be non-empty")
    k = 0
    w = 1
    for d in x:
        if not 0 <= d < p:
            raise ValueError(f"digit {d} is outside 0..{p - 1}")
        k += d * w
        w *= p
    return k


def digits_of(k: int, p: int, n: int) -> tuple[int, ...]:
    """Decode k into its n base-p digits (x_1, ..., x_n), x_1 least significant."""
    if not 0 <= k < p**n:
        raise ValueError(f"index {k} is outside 0..p^n-1")
    out = []
    for _ in range(n):
        out.append(k % p)
        k //= p
    return tuple(out)


@lru_cache(maxsize=32)
def digit_rows(p: int, n: int) -> tuple[Sequence[int], ...]:
    """Row i-1 holds digit x_i of every index k = 0..p^n-1.

    Rows are bytes for p <= 256 and tuples otherwise; both index to plain ints.
    """
    size = p**n
    if size > MAX_TABLE_ENTRIES:
        raise SizeLimitError(f"p^n = {size} exceeds {MAX_TABLE_ENTRIES}")
    rows = []
    step = 1
    for _ in range(n):
        if p <= 256:
            block = b"".join(bytes([v]) * step for v in range(p))
        else:
            block = tuple(v for v in range(p) for _ in range(step))
        rows.append(block * (size // (step * p)))
        step *= p
    return tuple(rows)


def apply_permutation(f: PFunction, pi: Permutation) -> PFunction:
    """Permute variables: the result g satisfies g(x_1,...,x_n) = f(x_pi(1),...,x_pi(n))."""
    if pi.n != f.n:
        raise ValueError(f"permutation acts on {pi.n} symbols, function has {f.n} variables")
    rows = digit_rows(f.p, f.n)
    # g's index k has digits x_i; f is looked up at the point (x_pi(1), ..., x_pi(n)).
    src = [rows[pi(i) - 1] for i in range(1, f.n + 1)]
    weights = [f.p**i for i in range(f.n)]
    table = f.table
    new = tuple(
        table[sum(d * w for d, w in zip(digs, weights))] for digs in zip(*src)
    )
    return PFunction(f.p, f.n, new)


def is_symmetric(f: PFunction) -> bool:
    """True iff f is invariant under every variable permutation.

    Checked on the n-1 adjacent transpositions, which generate the full
    symmetric group.
    """
    for i in range(1, f.n):
        tau = Permutation.transposition(f.n, i, i + 1)
        if apply_permutation(f, tau).table != f.table:
            return False
    return True


def shift_output(f: PFunction, a: int) -> PFunction:
    """Pointwise output shift: the function x -> (f(x) + a) mod p."""
    a %= f.p
    if a == 0:
        return f
    return PFunction(f.p, f.n, tuple((v + a) % f.p for v in f.table))


def is_balanced(f: PFunction) -> bool:
    """True iff every output value occurs exactly p^(n-1) times."""
    counts = [0] * f.p
    for v in f.table:
        counts[v] += 1
    return all(c == f.size // f.p for c in counts)


# --------------------------------------------------------------------------
# Polynomial parsing and evaluation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Term:
    """One additive term: coeff * prod x_i^e_i, with powers as (i, e_i) pairs."""

    coeff: int
    powers: tuple[tuple[int, int], ...]


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        """Next token as (kind, value, position) without consuming, or None at end."""
        self._skip_ws()
        if self.pos >= len(self.text):
            return None
        start = self.pos
        ch = self.text[start]
        if ch in "+-*^":
            return ("op", ch, start)
        if ch.isdigit():
            j = start
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("int", self.text[start:j], start)
        if ch == "x":
            j = start + 1
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            if j == start + 1:
                raise ParseError("'x' must be followed by a variable index", start)
            return ("var", self.text[start + 1 : j], start)
        raise ParseError(f"unexpected character {ch!r}", start)

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos = tok[2] + (len(tok[1]) + 1 if tok[0] == "var" else len(tok[1]))
        return tok


def parse_terms(text: str, p: int, n: int) -> tuple[Term, ...]:
    """Parse a polynomial into its term list without evaluating it."""
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    tk = _Tokenizer(text)
    terms: list[Term] = []
    sign = 1
    first = tk.peek()
    if first is None:
        raise ParseError("empty polynomial", 0)
    if first[0] == "op" and first[1] in "+-":
        tk.take()
        sign = -1 if first[1] == "-" else 1
    while True:
        terms.append(_parse_term(tk, sign, p, n))
        tok = tk.peek()
        if tok is None:
            break
        if tok[0] == "op" and tok[1] in "+-":
            tk.take()
            sign = -1 if tok[1] == "-" else 1
            continue
        raise ParseError(f"expected '+' or '-' between terms, got {tok[1]!r}", tok[2])
    return tuple(terms)


def _parse_term(tk: _Tokenizer, sign: int, p: int, n: int) -> Term:
    coeff = sign % p
    powers: dict[int, int] = {}
    while True:
        kind, value, pos = tk.take()
        if kind == "int":
            coeff = coeff * (int(value) % p) % p
        elif kind == "var":
            idx = int(value)
            if not 1 <= idx <= n:
                raise ParseError(f"variable index x{idx} is outside 1..{n}", pos)
            exp = 1
            nxt = tk.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
                tk.take()
                ekind, evalue, epos = tk.take()
                if ekind != "int":
                    raise ParseError("exponent must be an integer", epos)
                exp = int(evalue)
            powers[idx] = powers.get(idx, 0) + exp
        else:
            raise ParseError(f"expected a coefficient or variable, got {value!r}", pos)
        nxt = tk.peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "*":
            tk.take()
            continue
        break
    return Term(coeff, tuple(sorted(powers.items())))


def evaluate_terms(terms: Sequence[Term], p: int, x: Sequence[int]) -> int:
    """Evaluate a term list at one point, mod p."""
    total = 0
    for t in terms:
        v = t.coeff
        for i, e in t.powers:
            v = v * pow(x[i - 1], e, p) % p
        total += v
    return total % p


def parse_polynomial(text: str, p: int, n: int) -> PFunction:
    """Parse a polynomial and tabulate it over all of F_p^n."""
    terms = parse_terms(text, p, n)
    rows = digit_rows(p, n)
    size = p**n
    table = [0] * size
    for t in terms:
        if t.coeff == 0:
            continue
        # Per-variable lookup digit -> digit^e mod p keeps the point loop cheap.
        lookups = [(rows[i - 1], tuple(pow(v, e, p) for v in range(p))) for i, e in t.powers]
        for k in range(size):
            v = t.coeff
            for row, tab in lookups:
                v = v * tab[row[k]]
            table[k] += v
    return PFunction(p, n, tuple(v % p for v in table))


def random_function(p: int, n: int, seed: int) -> PFunction:
    """A uniformly random table, reproducible from the seed.

    Entries come from random.Random(seed) (the stdlib Mersenne Twister), one
    randrange(p) call per table slot, so a fixed seed yields the same function
    on every platform.
    """
    rng = random.Random(seed)
    size = p**n
    if size > MAX_TABLE_ENTRIES:
        raise SizeLimitError(f"p^n = {size} exceeds {MAX_TABLE_ENTRIES}")
    return PFunction(p, n, tuple(rng.randrange(p) for _ in range(size)))


def all_functions(p: int, n: int) -> Iterator[PFunction]:
    """Every function F_p^n -> F_p, in lexicographic table order."""
    for table in product(range(p), repeat=p**n):
        yield PFunction(p, n, table)


def read_table(text: str) -> PFunction:
    """Parse the two-line truth-table format."""
    lines = text.strip().split("\n", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"first line must be 'p n', got {lines[0]!r}", 0)
    try:
        p, n = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"first line must hold two integers, got {lines[0]!r}", 0) from None
    body = lines[1].split() if len(lines) > 1 else []
    try:
        values = [int(v) for v in body]
    except ValueError as e:
        raise ParseError(f"table entries must be integers: {e}") from None
    try:
        return PFunction(p, n, tuple(values))
    except SizeLimitError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from None


def write_table(f: PFunction) -> str:
    """Render the two-line truth-table format."""
    return f"{f.p} {f.n}\n{' '.join(str(v) for v in f.table)}\n"
