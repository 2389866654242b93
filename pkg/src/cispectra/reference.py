"""Independent characterizations of correlation immunity, used as oracles.

Four methods, each self-contained and exact (integer or Z[omega] arithmetic,
never a float probability):

  definition         p^m * #{x : f(x)=t, x_S=a} = #{x : f(x)=t} for every
                     m-subset S, assignment a, output t (the probabilistic
                     definition cleared of denominators)
  chrestenson_cyclic sum_x omega^(f(x) - c.x) = 0 for all 1 <= wt(c) <= m
  chrestenson_linear sum_x ((f(x)+a) mod p) * omega^(c.x) = 0 for all shifts
                     a in F_p and all 1 <= wt(c) <= m; here f+a means the
                     pointwise output shift
  matrix             for each c with 1 <= wt(c) <= m the p x p count matrix
                     entry(i,j) = #{x : c.x=i, f(x)=j} has identical rows
  orthogonal_array   each level set W_i = {x : f(x)=i} is an orthogonal
                     array of strength m: every m columns of W_i carry every
                     pattern exactly |W_i| / p^m times

consensus() runs these four plus the spectral test and reports agreement.
The point of the module is cross-validation: the implementations share no
code with the spectral path beyond the truth-table plumbing.

Both Chrestenson sums are kept unscaled (multiplied by p^n relative to the
normalized definitions); scaling cannot change zero-ness and staying in
integers keeps the oracle exact.

Witnesses: every test reports the lexicographically first failing object
(c-vector, (subset, assignment, output), or (value, subset, pattern)),
scanning c-vectors in plain tuple order and subsets/patterns in the order
itertools emits them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product

from .cyclotomic import CycloElement
from .ptable import PFunction, VariableTuple, digit_rows, shift_output
from . import spectral

METHOD_NAMES = (
    "spectral",
    "definition",
    "chrestenson_cyclic",
    "chrestenson_linear",
    "matrix",
    "orthogonal_array",
)


def _check_order(f: PFunction, m: int, low: int):
    if not low <= m <= f.n:
        raise ValueError(f"m must be in {low}..{f.n}, got {m}")


def _linear_form(f: PFunction, c) -> list[int]:
    """row[k] = c.x(k) mod p for every index k."""
    if len(c) != f.n:
        raise ValueError(f"c has length {len(c)}, expected {f.n}")
    p = f.p
    rows = digit_rows(p, f.n)
    out = [0] * f.size
    for i, ci in enumerate(c):
        ci %= p
        if ci == 0:
            continue
        row = rows[i]
        for k, d in enumerate(row):
            out[k] += ci * d
    return [v % p for v in out]


def _weighted_vectors(p: int, n: int, m: int):
    """All c in F_p^n with 1 <= wt(c) <= m, in lexicographic tuple order."""
    for c in product(range(p), repeat=n):
        w = n - c.count(0)
        if 1 <= w <= m:
            yield c


# --------------------------------------------------------------------------
# Definition-based counting oracle
# --------------------------------------------------------------------------

def definition_witness(f: PFunction, m: int):
    """First (subset, assignment, output) violating the counting identity,
    or None; subsets lexicographic, assignments lexicographic as digit
    tuples, outputs increasing."""
    _check_order(f, m, 0)
    if m == 0:
        return None
    p = f.p
    total = [0] * p
    for v in f.table:
        total[v] += 1
    scale = p**m
    for subset in combinations(range(1, f.n + 1), m):
        packed = spectral._packed_digits(p, f.n, subset)
        cm = [0] * (scale * p)
        for a, v in zip(packed, f.table):
            cm[a * p + v] += 1
        for assign in product(range(p), repeat=m):
            # packed index has assign[0] (variable subset[0]) least significant
            a = 0
            for d in reversed(assign):
                a = a * p + d
            for t in range(p):
                if scale * cm[a * p + t] != total[t]:
                    return (subset, assign, t)
    return None


def ci_oracle_definition(f: PFunction, m: int) -> bool:
    """Direct Definition-style check: output distribution unchanged by
    conditioning on any m variables; pure integer identity."""
    return definition_witness(f, m) is None


# --------------------------------------------------------------------------
# Chrestenson spectra
# --------------------------------------------------------------------------

def chrestenson_cyclic(f: PFunction, c) -> CycloElement:
    """Unscaled cyclic spectrum value sum_x omega^(f(x) - c.x), in Z[omega].

    At p = 2 this is the classical Walsh-Hadamard sum sum_x (-1)^(f(x)+c.x).
    """
    p = f.p
    dot = _linear_form(f, c)
    counts = [0] * p
    for v, d in zip(f.table, dot):
        counts[(v - d) % p] += 1
    return CycloElement.from_root_counts(p, 1, counts)


def chrestenson_linear(f: PFunction, c) -> CycloElement:
    """Unscaled linear spectrum value sum_x f(x) * omega^(c.x); the output
    enters as an integer multiplier, not as an exponent."""
    p = f.p
    dot = _linear_form(f, c)
    counts = [0] * p
    for v, d in zip(f.table, dot):
        counts[d] += v
    return CycloElement.from_root_counts(p, 1, counts)


def chrestenson_cyclic_witness(f: PFunction, m: int):
    _check_order(f, m, 1)
    for c in _weighted_vectors(f.p, f.n, m):
        if not chrestenson_cyclic(f, c).is_zero():
            return c
    return None


def ci_oracle_chrestenson_cyclic(f: PFunction, m: int) -> bool:
    """CI iff the cyclic spectrum vanishes on every c with 1 <= wt(c) <= m."""
    return chrestenson_cyclic_witness(f, m) is None


def chrestenson_linear_witness(f: PFunction, m: int):
    """First failing (c, shift); all p output shifts of f must have vanishing
    linear spectrum on every c with 1 <= wt(c) <= m."""
    _check_order(f, m, 1)
    shifted = [f] + [shift_output(f, a) for a in range(1, f.p)]
    for c in _weighted_vectors(f.p, f.n, m):
        for a, g in enumerate(shifted):
            if not chrestenson_linear(g, c).is_zero():
                return (c, a)
    return None


def ci_oracle_chrestenson_linear(f: PFunction, m: int) -> bool:
    return chrestenson_linear_witness(f, m) is None


# --------------------------------------------------------------------------
# Count-matrix test
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CountMatrix:
    """entries[i][j] = #{x : c.x = i and f(x) = j}; a p x p integer matrix.

    Rows of a CI function are identical for every c of weight 1..m; for any
    c != 0 each row sums to p^(n-1) (fiber size of a nonzero linear form).
    """

    c: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def rows_identical(self) -> bool:
        return all(row == self.entries[0] for row in self.entries)


def count_matrix(f: PFunction, c) -> CountMatrix:
    p = f.p
    dot = _linear_form(f, c)
    flat = [0] * (p * p)
    for v, d in zip(f.table, dot):
        flat[d * p + v] += 1
    entries = tuple(tuple(flat[i * p : i * p + p]) for i in range(p))
    return CountMatrix(tuple(int(v) % p for v in c), entries)


def matrix_test(f: PFunction, m: int):
    """(verdict, witness): verdict true iff every count matrix for
    1 <= wt(c) <= m has identical rows; witness is the first failing matrix."""
    _check_order(f, m, 1)
    for c in _weighted_vectors(f.p, f.n, m):
        cm = count_matrix(f, c)
        if not cm.rows_identical():
            return (False, cm)
    return (True, None)


# --------------------------------------------------------------------------
# Orthogonal-array test
# --------------------------------------------------------------------------

def orthogonal_array_witness(f: PFunction, m: int):
    """First failure of the strength-m orthogonal-array property across the
    level sets W_i = {x : f(x) = i}.

    Returns None, or a dict with the level value and either the class size
    (when p^m does not divide |W_i|) or the first (subset, pattern, count,
    expected) mismatch.
    """
    _check_order(f, m, 1)
    p = f.p
    strength = p**m
    levels: list[list[int]] = [[] for _ in range(p)]
    for k, v in enumerate(f.table):
        levels[v].append(k)
    for i in range(p):
        b = len(levels[i])
        if b % strength != 0:
            return {"value": i, "class_size": b}
    for i in range(p):
        rows_k = levels[i]
        expected = len(rows_k) // strength
        for subset in combinations(range(1, f.n + 1), m):
            packed = spectral._packed_digits(p, f.n, subset)
            counts = [0] * strength
            for k in rows_k:
                counts[packed[k]] += 1
            for pattern in product(range(p), repeat=m):
                a = 0
                for d in reversed(pattern):
                    a = a * p + d
                if counts[a] != expected:
                    return {
                        "value": i,
                        "subset": subset,
                        "pattern": pattern,
                        "count": counts[a],
                        "expected": expected,
                    }
    return None


def orthogonal_array_test(f: PFunction, m: int) -> bool:
    """True iff every level set of f is an orthogonal array of strength m
    (each m-column pattern equally frequent within each level set)."""
    return orthogonal_array_witness(f, m) is None


# --------------------------------------------------------------------------
# Consensus across all methods
# --------------------------------------------------------------------------

@dataclass
class MethodReport:
    """Verdicts of all six methods for one (f, m) query, plus witnesses of
    the failing ones.

    JSON schema: {"m": int, "verdicts": {name: bool, ...},
    "consensus": bool, "witnesses": {name: object, ...}} (witnesses key
    present only when non-empty).
    """

    m: int
    verdicts: dict[str, bool]
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def consensus(self) -> bool:
        values = set(self.verdicts.values())
        return len(values) == 1

    def to_json(self) -> str:
        obj = {"m": self.m, "verdicts": self.verdicts, "consensus": self.consensus}
        if self.witnesses:
            obj["witnesses"] = self.witnesses
        return json.dumps(obj, default=_witness_json)


def _witness_json(obj):
    if isinstance(obj, VariableTuple):
        return list(obj.indices)
    if isinstance(obj, CountMatrix):
        return {"c": list(obj.c), "entries": [list(r) for r in obj.entries]}
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialize witness {obj!r}")


def consensus(f: PFunction, m: int) -> MethodReport:
    """Run all six characterizations at order m and collect verdicts and
    failure witnesses."""
    _check_order(f, m, 1)
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, object] = {}

    w_spec = spectral.first_failing_tuple(f, m)
    verdicts["spectral"] = w_spec is None
    if w_spec is not None:
        witnesses["spectral"] = w_spec

    w_def = definition_witness(f, m)
    verdicts["definition"] = w_def is None
    if w_def is not None:
        subset, assign, t = w_def
        witnesses["definition"] = {"subset": subset, "assignment": assign, "output": t}

    w_cyc = chrestenson_cyclic_witness(f, m)
    verdicts["chrestenson_cyclic"] = w_cyc is None
    if w_cyc is not None:
        witnesses["chrestenson_cyclic"] = {"c": w_cyc}

    w_lin = chrestenson_linear_witness(f, m)
    verdicts["chrestenson_linear"] = w_lin is None
    if w_lin is not None:
        c, a = w_lin
        witnesses["chrestenson_linear"] = {"c": c, "shift": a}

    ok_mat, w_mat = matrix_test(f, m)
    verdicts["matrix"] = ok_mat
    if w_mat is not None:
        witnesses["matrix"] = w_mat

    w_oa = orthogonal_array_witness(f, m)
    verdicts["orthogonal_array"] = w_oa is None
    if w_oa is not None:
        witnesses["orthogonal_array"] = w_oa

    return MethodReport(m=m, verdicts=verdicts, witnesses=witnesses)
