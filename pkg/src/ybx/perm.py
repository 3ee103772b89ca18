"""Permutations in one-line notation (1-based) and their classical statistics."""
from __future__ import annotations

from itertools import permutations as _perms
from typing import Iterator, Sequence


class Permutation(tuple):
    """Immutable permutation w = (w(1), ..., w(n))."""

    def __new__(cls, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip().strip("[]")
        if "," in text or " " in text:
            vals = [int(t) for t in text.replace(",", " ").split()]
        else:
            vals = [int(ch) for ch in text]
        return cls(vals)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __str__(self):
        if self.n < 10:
            return "".join(map(str, self))
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self):
        return f"Permutation({list(self)})"

    # -- group structure ---------------------------------------------------
    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (u*v)(i) = u(v(i)), padding the shorter one."""
        n = max(self.n, other.n)
        u, v = self.embed(n), other.embed(n)
        return Permutation([u[v[i] - 1] for i in range(n)])

    def embed(self, m: int) -> "Permutation":
        if m < self.n:
            raise ValueError("cannot embed into a smaller group")
        return Permutation(tuple(self) + tuple(range(self.n + 1, m + 1)))

    def shift(self, k: int) -> "Permutation":
        """1^k x w."""
        return Permutation(tuple(range(1, k + 1)) + tuple(v + k for v in self))

    def swap_positions(self, a: int) -> "Permutation":
        """w s_a."""
        w = list(self)
        w[a - 1], w[a] = w[a], w[a - 1]
        return Permutation(w)

    def trimmed(self) -> "Permutation":
        w = list(self)
        while len(w) > 1 and w[-1] == len(w):
            w.pop()
        return Permutation(w)

    # -- statistics ----------------------------------------------------------
    def length(self) -> int:
        w = self
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def code(self) -> tuple:
        w = self
        return tuple(sum(1 for j in range(i + 1, self.n) if w[j] < w[i]) for i in range(self.n))

    def descents(self) -> list:
        return [i for i in range(1, self.n) if self[i - 1] > self[i]]

    def reduced_word(self) -> list:
        """A reduced word (a_1..a_l) with w = s_{a_1} ... s_{a_l} (right action)."""
        w = list(self)
        word = []
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    word.append(i + 1)
                    break
            else:
                break
        return word[::-1]

    def is_grassmannian(self) -> bool:
        return len(self.descents()) <= 1

    def is_dominant(self) -> bool:
        c = self.code()
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1))

    def avoids(self, pattern: Sequence[int]) -> bool:
        k = len(pattern)
        from itertools import combinations
        for idx in combinations(range(self.n), k):
            vals = [self[i] for i in idx]
            order = sorted(vals)
            if all(order.index(vals[t]) + 1 == pattern[t] for t in range(k)):
                return False
        return True

    def is_vexillary(self) -> bool:
        return self.avoids((2, 1, 4, 3))

    def shape(self) -> tuple:
        return tuple(sorted((c for c in self.code() if c), reverse=True))

    def flag(self) -> tuple:
        """Flag of a vexillary permutation, one entry per row of the shape."""
        c = self.code()
        return tuple(max(i + 1 for i in range(len(c)) if c[i] >= lam) for lam in self.shape())


def from_code(code: Sequence[int]) -> Permutation:
    code = list(code)
    n = max([len(code)] + [i + 1 + c for i, c in enumerate(code)])
    code += [0] * (n - len(code))
    avail = list(range(1, n + 1))
    out = []
    for c in code:
        if c >= len(avail):
            raise ValueError("not a valid Lehmer code")
        out.append(avail.pop(c))
    return Permutation(out)


def dominant(lam: Sequence[int]) -> Permutation:
    """Unique permutation whose code is the partition lam."""
    lam = [x for x in lam if x]
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("shape must be a partition")
    return from_code(lam)


def vexillary(shape: Sequence[int], flag: Sequence[int]) -> Permutation:
    """Vexillary permutation with prescribed shape and flag.

    Rows sharing a flag value f occupy positions f, f-1, ... in order of
    decreasing length; the result is checked against the requested data.
    """
    shape = [s for s in shape]
    flag = list(flag)[:len(shape)]
    rows = [(lam, f) for lam, f in zip(shape, flag) if lam]
    code: dict = {}
    used: dict = {}
    for lam, f in rows:
        pos = f - used.get(f, 0)
        used[f] = used.get(f, 0) + 1
        if pos < 1 or pos in code:
            raise ValueError("incompatible shape and flag")
        code[pos] = lam
    top = max(code, default=0)
    w = from_code([code.get(i, 0) for i in range(1, top + 1)])
    if w.shape() != tuple(lam for lam, _ in rows) or not w.is_vexillary():
        raise ValueError("no vexillary permutation with this shape and flag")
    if w.flag() != tuple(f for _, f in rows):
        raise ValueError("no vexillary permutation with this shape and flag")
    return w


def all_perms(n: int) -> Iterator[Permutation]:
    for p in _perms(range(1, n + 1)):
        yield Permutation(p)


def in_right_interval(u: Sequence[int], w: Sequence[int]) -> bool:
    """u <= w in right weak order: every inversion (by values) of u is one of w."""
    pos = {v: i for i, v in enumerate(w)}
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] > u[j] and pos[u[i]] > pos[u[j]]:
                return False
    return True
