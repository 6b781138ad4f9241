"""Sparse linear combinations over an abstract basis.

The structure maps of a Hopf algebra are packaged as callables on basis
keys (BasisOps).  The same checking code then runs against a finite
structure-constant algebra, whose keys are basis indices, and against the
built-in infinite-dimensional family, whose keys are (exponent, degree)
pairs.  A BasisOps key list bounds the grid of test points only;
intermediate results may leave it freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .report import CheckResult, check, grid_check, skipped
from .scalars import Scalar

Key = Hashable
LC = dict  # key -> scalar, zero coefficients dropped


def lc_canon(d: LC) -> LC:
    return {k: v for k, v in d.items() if v}


def lc_single(key: Key, one: Scalar) -> LC:
    return {key: one}

def lc_add(a: LC, b: LC) -> LC:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        out[k] = v if w is None else w + v
    return lc_canon(out)


def lc_sub(a: LC, b: LC) -> LC:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        out[k] = -v if w is None else w - v
    return lc_canon(out)


def lc_scale(c: Scalar, a: LC) -> LC:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def lc_eq(a: LC, b: LC) -> bool:
    return lc_canon(a) == lc_canon(b)


def lc_is_zero(a: LC) -> bool:
    return not lc_canon(a)


def lc_format(a: LC, label: Callable[[Key], str], fmt: Callable[[Scalar], str]) -> str:
    items = sorted(lc_canon(a).items(), key=lambda kv: repr(kv[0]))
    if not items:
        return "0"
    parts = []
    for k, v in items:
        name = label(k)
        text = fmt(v)
        if text == "1" and name != "1":
            parts.append(name)
        elif text == "-1" and name != "1":
            parts.append(f"-{name}")
        elif name == "1":
            parts.append(text)
        else:
            parts.append(f"{text}*{name}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


@dataclass(frozen=True)
class BasisOps:
    """Structure maps of a Hopf algebra, given on basis keys.

    mul and the antipodes return linear combinations; delta returns sparse
    triples (coefficient, left key, right key); eps returns a scalar.
    """

    keys: tuple
    unit: LC
    mul: Callable[[Key, Key], LC]
    delta: Callable[[Key], Sequence[tuple[Scalar, Key, Key]]]
    eps: Callable[[Key], Scalar]
    antipode: Callable[[Key], LC] | None
    antipode_inv: Callable[[Key], LC] | None
    zero: Scalar
    one: Scalar
    label: Callable[[Key], str]

    # -- linear extensions -------------------------------------------------

    def single(self, key: Key) -> LC:
        return {key: self.one}

    def mul_lc(self, a: LC, b: LC) -> LC:
        out: LC = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                c = va * vb
                if not c:
                    continue
                for k, w in self.mul(ka, kb).items():
                    prev = out.get(k)
                    out[k] = c * w if prev is None else prev + c * w
        return lc_canon(out)

    def mul_many(self, *factors: LC) -> LC:
        acc = dict(self.unit)
        for f in factors:
            acc = self.mul_lc(acc, f)
        return acc

    def map_lc(self, fn: Callable[[Key], LC], a: LC) -> LC:
        out: LC = {}
        for k, v in a.items():
            for k2, w in fn(k).items():
                prev = out.get(k2)
                out[k2] = v * w if prev is None else prev + v * w
        return lc_canon(out)

    def eval_fn(self, f: Callable[[Key], Scalar], a: LC) -> Scalar:
        acc = self.zero
        for k, v in a.items():
            fv = f(k)
            if fv:
                acc = acc + v * fv
        return acc

    def eps_lc(self, a: LC) -> Scalar:
        return self.eval_fn(self.eps, a)

    def s_lc(self, a: LC) -> LC:
        assert self.antipode is not None
        return self.map_lc(self.antipode, a)

    def s_inv_lc(self, a: LC) -> LC:
        assert self.antipode_inv is not None
        return self.map_lc(self.antipode_inv, a)

    def s_power(self, a: LC, power: int) -> LC:
        fn = self.antipode if power >= 0 else self.antipode_inv
        assert fn is not None
        for _ in range(abs(power)):
            a = self.map_lc(fn, a)
        return a

    # -- coproducts ---------------------------------------------------------

    def delta_lc(self, a: LC) -> dict:
        out: dict = {}
        for k, v in a.items():
            for c, k1, k2 in self.delta(k):
                key = (k1, k2)
                prev = out.get(key)
                out[key] = v * c if prev is None else prev + v * c
        return lc_canon(out)

    def delta_n(self, key: Key, legs: int) -> list[tuple[Scalar, tuple]]:
        """Sparse terms of the iterated coproduct with the given leg count."""
        if legs < 1:
            raise ValueError("legs must be at least 1")
        terms = [(self.one, (key,))]
        while len(terms[0][1]) < legs:
            nxt = []
            for coef, keys in terms:
                for c, k1, k2 in self.delta(keys[0]):
                    nxt.append((coef * c, (k1, k2) + keys[1:]))
            terms = nxt
        return terms

    # -- convolution --------------------------------------------------------

    def convolve(self, f: Callable[[Key], Scalar], g: Callable[[Key], Scalar]):
        def conv(key: Key) -> Scalar:
            acc = self.zero
            for c, k1, k2 in self.delta(key):
                fv = f(k1)
                if not fv:
                    continue
                gv = g(k2)
                if gv:
                    acc = acc + c * fv * gv
            return acc

        return conv

    def convolve_many(self, *fns):
        acc = self.eps
        for f in fns:
            acc = self.convolve(acc, f)
        return acc

    def compose_s_power(self, f: Callable[[Key], Scalar], power: int):
        return lambda key: self.eval_fn(f, self.s_power(self.single(key), power))

    def fn_eq_on_grid(self, f, g) -> tuple[bool, Key | None]:
        for k in self.keys:
            if f(k) != g(k):
                return False, k
        return True, None


def memo_fn(f):
    """Cache a one-argument function of hashable keys."""
    cache: dict = {}

    def wrapped(key):
        hit = cache.get(key, cache)
        if hit is not cache:
            return hit
        value = f(key)
        cache[key] = value
        return value

    return wrapped


def is_grouplike_lc(ops: BasisOps, a: LC) -> bool:
    if ops.eps_lc(a) != ops.one:
        return False
    outer = {(k1, k2): v1 * v2 for k1, v1 in a.items() for k2, v2 in a.items()}
    return lc_eq(ops.delta_lc(a), lc_canon(outer))


def is_character_fn(ops: BasisOps, f: Callable[[Key], Scalar]) -> bool:
    if ops.eval_fn(f, ops.unit) != ops.one:
        return False
    for k1 in ops.keys:
        for k2 in ops.keys:
            if ops.eval_fn(f, ops.mul(k1, k2)) != f(k1) * f(k2):
                return False
    return True


def conv_inverse_checks(ops: BasisOps, name: str, f, f_inv) -> list[CheckResult]:
    eps = ops.eps
    left = ops.convolve(f, f_inv)
    right = ops.convolve(f_inv, f)
    return [
        grid_check(f"{name}.convolution_inverse_left", ops.keys,
                   lambda k: left(k) == eps(k), lambda k: f"at {ops.label(k)}"),
        grid_check(f"{name}.convolution_inverse_right", ops.keys,
                   lambda k: right(k) == eps(k), lambda k: f"at {ops.label(k)}"),
    ]


def _pair_label(ops: BasisOps, pair) -> str:
    return f"({ops.label(pair[0])}, {ops.label(pair[1])})"


def _triple_label(ops: BasisOps, t) -> str:
    return f"({ops.label(t[0])}, {ops.label(t[1])}, {ops.label(t[2])})"


def _pairs(ops: BasisOps):
    return [(a, b) for a in ops.keys for b in ops.keys]


def _triples(ops: BasisOps):
    return [(a, b, c) for a in ops.keys for b in ops.keys for c in ops.keys]


def tensor2_mul(ops: BasisOps, t1: dict, t2: dict) -> dict:
    """Product of two leg-pair combinations inside the tensor square."""
    out: dict = {}
    for (a1, b1), v1 in t1.items():
        for (a2, b2), v2 in t2.items():
            c = v1 * v2
            if not c:
                continue
            left = ops.mul(a1, a2)
            right = ops.mul(b1, b2)
            for ka, va in left.items():
                for kb, vb in right.items():
                    key = (ka, kb)
                    term = c * va * vb
                    prev = out.get(key)
                    out[key] = term if prev is None else prev + term
    return lc_canon(out)


def hopf_axiom_checks(ops: BasisOps) -> list[CheckResult]:
    """The full axiom battery on the key grid, in a fixed order."""
    out: list[CheckResult] = []

    out.append(grid_check(
        "hopf.associativity", _triples(ops),
        lambda t: lc_eq(ops.mul_lc(ops.mul(t[0], t[1]), ops.single(t[2])),
                        ops.mul_lc(ops.single(t[0]), ops.mul(t[1], t[2]))),
        lambda t: f"at {_triple_label(ops, t)}"))

    out.append(grid_check(
        "hopf.unit_laws", ops.keys,
        lambda k: lc_eq(ops.mul_lc(ops.unit, ops.single(k)), ops.single(k))
        and lc_eq(ops.mul_lc(ops.single(k), ops.unit), ops.single(k)),
        lambda k: f"at {ops.label(k)}"))

    def coassoc(k) -> bool:
        left: dict = {}
        right: dict = {}
        for c, k1, k2 in ops.delta(k):
            for c2, a, b in ops.delta(k1):
                key = (a, b, k2)
                left[key] = left.get(key, ops.zero) + c * c2
            for c2, a, b in ops.delta(k2):
                key = (k1, a, b)
                right[key] = right.get(key, ops.zero) + c * c2
        return lc_canon(left) == lc_canon(right)

    out.append(grid_check("hopf.coassociativity", ops.keys, coassoc,
                          lambda k: f"at {ops.label(k)}"))

    def counit_laws(k) -> bool:
        left: LC = {}
        right: LC = {}
        for c, k1, k2 in ops.delta(k):
            e1, e2 = ops.eps(k1), ops.eps(k2)
            if e1:
                left[k2] = left.get(k2, ops.zero) + c * e1
            if e2:
                right[k1] = right.get(k1, ops.zero) + c * e2
        single = ops.single(k)
        return lc_eq(left, single) and lc_eq(right, single)

    out.append(grid_check("hopf.counit_laws", ops.keys, counit_laws,
                          lambda k: f"at {ops.label(k)}"))

    def delta_multiplicative(pair) -> bool:
        a, b = pair
        lhs = ops.delta_lc(ops.mul(a, b))
        rhs = tensor2_mul(ops, dict(ops.delta_lc(ops.single(a))),
                          dict(ops.delta_lc(ops.single(b))))
        return lc_eq(lhs, rhs)

    out.append(grid_check("hopf.comultiplication_multiplicative", _pairs(ops),
                          delta_multiplicative, lambda p: f"at {_pair_label(ops, p)}"))

    unit_outer = {(k1, k2): v1 * v2 for k1, v1 in ops.unit.items() for k2, v2 in ops.unit.items()}
    out.append(check("hopf.comultiplication_unital",
                     lc_eq(ops.delta_lc(ops.unit), lc_canon(unit_outer))))

    out.append(grid_check(
        "hopf.counit_multiplicative", _pairs(ops),
        lambda p: ops.eps_lc(ops.mul(p[0], p[1])) == ops.eps(p[0]) * ops.eps(p[1]),
        lambda p: f"at {_pair_label(ops, p)}"))

    out.append(check("hopf.counit_unital", ops.eps_lc(ops.unit) == ops.one))

    if ops.antipode is None:
        out.append(skipped("hopf.antipode_laws", "no antipode available"))
        return out

    def antipode_laws(k) -> bool:
        left: LC = {}
        right: LC = {}
        for c, k1, k2 in ops.delta(k):
            left = lc_add(left, lc_scale(c, ops.mul_lc(ops.antipode(k1), ops.single(k2))))
            right = lc_add(right, lc_scale(c, ops.mul_lc(ops.single(k1), ops.antipode(k2))))
        target = lc_scale(ops.eps(k), ops.unit)
        return lc_eq(left, target) and lc_eq(right, target)

    out.append(grid_check("hopf.antipode_laws", ops.keys, antipode_laws,
                          lambda k: f"at {ops.label(k)}"))

    if ops.antipode_inv is not None:
        out.append(grid_check(
            "hopf.antipode_bijective", ops.keys,
            lambda k: lc_eq(ops.s_inv_lc(ops.antipode(k)), ops.single(k))
            and lc_eq(ops.s_lc(ops.antipode_inv(k)), ops.single(k)),
            lambda k: f"at {ops.label(k)}"))
    return out
